#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alexbq/laurent.hpp"
#include "alexbq/presentation.hpp"

namespace alexbq {

/// Exact determinant of a square matrix: rows are cleared of negative powers,
/// Bareiss fraction-free elimination runs over Z[t, s], and the unit factor
/// is restored. Throws ValidationError for non-square input.
LaurentPoly determinant(const PresentationMatrix& m);

/// Determinants of all r x r submatrices, row index sets in lexicographic
/// order and column index sets in lexicographic order within each. Uses
/// Laplace expansion memoized on (row set, column set). 1 <= r <= min(m, n).
std::vector<LaurentPoly> minors(const PresentationMatrix& m, std::size_t r);

/// C(rows, r) * C(cols, r), saturating at UINT64_MAX.
std::uint64_t minor_count(const PresentationMatrix& m, std::size_t r);

enum class IdealKind { general, whole_ring, zero_ideal };

struct ElementaryIdeal {
  std::size_t k = 0;
  IdealKind kind = IdealKind::general;
  std::vector<LaurentPoly> generators;  // nonzero (m-k)-minors when general
};

// I_k is generated by the (m-k)-minors of an m-row matrix. Conventions at the
// edges: m - k <= 0 gives the whole ring, m - k > min(m, n) or all minors
// vanishing gives the zero ideal.
ElementaryIdeal elementary_ideal(const PresentationMatrix& m, std::size_t k);

/// Generator of the smallest principal ideal containing I_k, in canonical
/// unit form: 1 for the whole ring, 0 for the zero ideal.
LaurentPoly principal_polynomial(const ElementaryIdeal& ideal);
LaurentPoly principal_polynomial(const PresentationMatrix& m, std::size_t k);

}  // namespace alexbq
