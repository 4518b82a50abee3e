#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alexbq/diagram.hpp"
#include "alexbq/groebner.hpp"
#include "alexbq/ideals.hpp"
#include "alexbq/laurent.hpp"
#include "alexbq/presentation.hpp"
#include "alexbq/term_order.hpp"

namespace alexbq {

struct LevelReport {
  std::size_t k = 0;
  IdealKind kind = IdealKind::general;
  LaurentPoly principal;
  GroebnerBasis groebner;
  std::size_t cardinality = 0;
  Poly4 sum;
  Poly4 max;
};

struct ReportOptions {
  std::size_t max_k = 1;
  TermOrder order = TermOrder::default_order();
  GroebnerBudget budget;
};

struct InvariantReport {
  std::string name;
  ReportOptions options;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Set when the presentation has no relations (crossingless diagrams); every
  /// level then follows the empty-minor convention.
  bool degenerate = false;
  std::vector<LevelReport> levels;  // k = 0 .. max_k
};

InvariantReport compute_report(const Diagram& d, const ReportOptions& options = {}, std::string name = {});

/// Delta_1^p at s = 1, in canonical unit form.
LaurentPoly classical_alexander(const Diagram& d);

/// Rewrites p(s, t) in Sawollek's variables via s = -y, t = -x/y and returns
/// the canonical unit form in Z[x^±1, y^±1].
XYLaurentPoly sawollek_form(const LaurentPoly& p);

}  // namespace alexbq
