#include "alexbq/term_order.hpp"

#include <algorithm>
#include <sstream>

#include "alexbq/errors.hpp"

namespace alexbq {

namespace {
const char* const kPoly4Names[] = {"T", "S", "Ti", "Si"};
}

TermOrder TermOrder::default_order() { return TermOrder{OrderKind::grlex, {0, 1, 2, 3}}; }

void TermOrder::validate(std::size_t num_vars) const {
  if (priority.size() != num_vars) {
    throw ValidationError("term order: priority lists " + std::to_string(priority.size()) +
                          " variables, ring has " + std::to_string(num_vars));
  }
  std::vector<bool> seen(num_vars, false);
  for (auto v : priority) {
    if (v >= num_vars || seen[v]) throw ValidationError("term order: priority is not a permutation");
    seen[v] = true;
  }
}

std::string TermOrder::describe() const {
  std::ostringstream out;
  out << (kind == OrderKind::lex ? "lex" : "grlex") << '(';
  for (std::size_t i = 0; i < priority.size(); ++i) {
    if (i) out << '>';
    if (priority.size() == 4) {
      out << kPoly4Names[priority[i]];
    } else {
      out << 'x' << priority[i];
    }
  }
  out << ')';
  return out.str();
}

std::strong_ordering compare_monomials(std::span<const std::uint32_t> a,
                                       std::span<const std::uint32_t> b,
                                       const TermOrder& order) {
  if (order.kind == OrderKind::grlex) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da <=> db;
  }
  for (auto v : order.priority) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::lex;
  if (text == "grlex") return OrderKind::grlex;
  throw ValidationError("unknown term order '" + std::string(text) + "' (expected lex or grlex)");
}

std::vector<std::size_t> parse_priority(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find_first_of(",>", start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view name = text.substr(start, comma - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    auto it = std::find(std::begin(kPoly4Names), std::end(kPoly4Names), name);
    if (it == std::end(kPoly4Names)) {
      throw ValidationError("unknown variable '" + std::string(name) + "' in priority (use T,S,Ti,Si)");
    }
    out.push_back(static_cast<std::size_t>(it - std::begin(kPoly4Names)));
    start = comma + 1;
  }
  TermOrder{OrderKind::grlex, out}.validate(4);
  return out;
}

}  // namespace alexbq
