#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "alexbq/ideals.hpp"
#include "alexbq/poly4.hpp"
#include "alexbq/presentation.hpp"
#include "alexbq/term_order.hpp"

namespace alexbq {

/// Work caps for Buchberger's algorithm; exceeding one throws BudgetExceeded.
struct GroebnerBudget {
  std::size_t max_basis_size = 5000;
  std::size_t max_pairs = 2'000'000;
};

// Reduced strong Groebner basis over the integers: positive leading
// coefficients, no leading term divides another (monomial and coefficient),
// and every tail term is in normal form. Unique for a fixed order. Elements
// are sorted ascending by leading monomial.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Poly4> elements;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// Normal form of p: each term c*m whose monomial is divisible by a leading
/// monomial of some g in G is replaced by its remainder modulo the smallest
/// such leading coefficient (remainders in [0, |lc|)). Terms are treated from
/// the largest down, so the result has no reducible term.
Poly4 strong_reduce(const Poly4& p, std::span<const Poly4> basis, const TermOrder& order);

/// S-polynomial built on lcm of leading monomials and lcm of leading coefficients.
Poly4 s_polynomial(const Poly4& f, const Poly4& g, const TermOrder& order);

/// Bezout combination u*(L/m)*f + v*(L/n)*g whose leading coefficient is
/// gcd(lc f, lc g) on L = lcm(m, n); nullopt when one leading coefficient
/// divides the other.
std::optional<Poly4> g_polynomial(const Poly4& f, const Poly4& g, const TermOrder& order);

GroebnerBasis buchberger(std::span<const Poly4> generators, const TermOrder& order,
                         const GroebnerBudget& budget = {});

/// True iff the two generator lists span the same ideal of Z[T, S, Ti, Si].
bool ideal_equal(std::span<const Poly4> a, std::span<const Poly4> b, const TermOrder& order,
                 const GroebnerBudget& budget = {});

/// Every S- and G-polynomial of every pair strong-reduces to zero.
bool is_strong_groebner_basis(std::span<const Poly4> basis, const TermOrder& order);

/// Reduced basis of the preimage of I_k in Z[T, S, Ti, Si]: pulled-back
/// generators of I_k together with 1 - T*Ti and 1 - S*Si.
GroebnerBasis ag_invariant(const PresentationMatrix& m, std::size_t k, const TermOrder& order,
                           const GroebnerBudget& budget = {});
GroebnerBasis ag_invariant(const ElementaryIdeal& ideal, const TermOrder& order, const GroebnerBudget& budget = {});

std::size_t ag_cardinality(const GroebnerBasis& b);
Poly4 ag_sum(const GroebnerBasis& b);
/// Largest element, comparing term sequences from the leading term down.
Poly4 ag_max(const GroebnerBasis& b);

}  // namespace alexbq
