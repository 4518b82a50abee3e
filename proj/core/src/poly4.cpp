#include "alexbq/poly4.hpp"

#include "alexbq/errors.hpp"
#include "poly_text.hpp"

namespace alexbq {

namespace poly4 {
Poly4 t_relation() { return constant(1) - var(kT) * var(kTi); }
Poly4 s_relation() { return constant(1) - var(kS) * var(kSi); }
}  // namespace poly4

std::strong_ordering compare_monomials(const Monomial4& a, const Monomial4& b,
                                       const TermOrder& order) {
  return compare_monomials(std::span<const std::uint32_t>(a), std::span<const std::uint32_t>(b),
                           order);
}

std::pair<Integer, Monomial4> leading_term(const Poly4& p, const TermOrder& order) {
  if (p.is_zero()) throw DomainError("no leading term: zero polynomial");
  auto lead = p.terms().begin();
  for (auto it = std::next(lead); it != p.terms().end(); ++it) {
    if (compare_monomials(it->first, lead->first, order) > 0) lead = it;
  }
  return {lead->second, lead->first};
}

Poly4 pullback(const LaurentPoly& p) {
  Poly4 r;
  for (const auto& [m, c] : p.terms()) {
    Monomial4 e{};
    if (m[0] >= 0) {
      e[poly4::kT] = static_cast<std::uint32_t>(m[0]);
    } else {
      e[poly4::kTi] = static_cast<std::uint32_t>(-m[0]);
    }
    if (m[1] >= 0) {
      e[poly4::kS] = static_cast<std::uint32_t>(m[1]);
    } else {
      e[poly4::kSi] = static_cast<std::uint32_t>(-m[1]);
    }
    r.add_term(e, c);
  }
  return r;
}

LaurentPoly pushforward(const Poly4& p) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    int et = static_cast<int>(m[poly4::kT]) - static_cast<int>(m[poly4::kTi]);
    int es = static_cast<int>(m[poly4::kS]) - static_cast<int>(m[poly4::kSi]);
    r.add_term({et, es}, c);
  }
  return r;
}

std::string to_string(const Poly4& p) { return detail::format_poly(p, {"T", "S", "Ti", "Si"}); }

Poly4 parse_poly4(std::string_view text) {
  auto lookup = [](std::string_view name) -> std::optional<Monomial4> {
    Monomial4 m{};
    if (name == "T") {
      m[poly4::kT] = 1;
    } else if (name == "S") {
      m[poly4::kS] = 1;
    } else if (name == "Ti") {
      m[poly4::kTi] = 1;
    } else if (name == "Si") {
      m[poly4::kSi] = 1;
    } else {
      return std::nullopt;
    }
    return m;
  };
  return detail::PolyParser<Poly4>(text, lookup, false).parse();
}

}  // namespace alexbq
