#include "alexbq/invariants.hpp"

namespace alexbq {

InvariantReport compute_report(const Diagram& d, const ReportOptions& options, std::string name) {
  InvariantReport report;
  report.name = std::move(name);
  report.options = options;
  const PresentationMatrix m = build_matrix(d);
  report.rows = m.rows();
  report.cols = m.cols();
  report.degenerate = m.rows() == 0;
  for (std::size_t k = 0; k <= options.max_k; ++k) {
    LevelReport level;
    level.k = k;
    ElementaryIdeal ideal = elementary_ideal(m, k);
    level.kind = ideal.kind;
    level.principal = principal_polynomial(ideal);
    level.groebner = ag_invariant(ideal, options.order, options.budget);
    level.cardinality = ag_cardinality(level.groebner);
    level.sum = ag_sum(level.groebner);
    level.max = ag_max(level.groebner);
    report.levels.push_back(std::move(level));
  }
  return report;
}

LaurentPoly classical_alexander(const Diagram& d) {
  return canonical_unit_form(specialize_s(principal_polynomial(build_matrix(d), 1), 1));
}

XYLaurentPoly sawollek_form(const LaurentPoly& p) {
  XYLaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    const int a = e[laurent::kT], b = e[laurent::kS];
    out.add_term({a, b - a}, (a + b) % 2 ? Integer(-c) : c);
  }
  return canonical_unit_form(out);
}

}  // namespace alexbq
