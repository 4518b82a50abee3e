#include "alexbq/json_io.hpp"

#include <json.hpp>

namespace alexbq {

namespace {

using nlohmann::json;

const char* kind_name(IdealKind k) {
  switch (k) {
    case IdealKind::whole_ring: return "whole_ring";
    case IdealKind::zero_ideal: return "zero_ideal";
    case IdealKind::general: break;
  }
  return "general";
}

json basis_value(const GroebnerBasis& b) {
  json elements = json::array();
  for (const auto& g : b.elements) elements.push_back(to_string(g));
  return {{"order", b.order.describe()}, {"elements", std::move(elements)}};
}

}  // namespace

std::string matrix_json(const PresentationMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"generators", m.generator_names()}, {"entries", rows}}.dump();
}

std::string ideal_json(const ElementaryIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(to_string(g));
  return json{{"k", ideal.k}, {"kind", kind_name(ideal.kind)}, {"generators", gens}}.dump();
}

std::string basis_json(const GroebnerBasis& b) { return basis_value(b).dump(); }

std::string report_json(const InvariantReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"k", l.k},
                      {"ideal", kind_name(l.kind)},
                      {"principal", to_string(l.principal)},
                      {"groebner", basis_value(l.groebner)},
                      {"cardinality", l.cardinality},
                      {"sum", to_string(l.sum)},
                      {"max", to_string(l.max)}});
  }
  json options = {{"max_k", r.options.max_k},
                  {"order", r.options.order.describe()},
                  {"max_basis_size", r.options.budget.max_basis_size},
                  {"max_pairs", r.options.budget.max_pairs}};
  return json{{"name", r.name},
              {"options", options},
              {"matrix", {{"rows", r.rows}, {"cols", r.cols}}},
              {"degenerate", r.degenerate},
              {"levels", levels}}
      .dump();
}

}  // namespace alexbq
