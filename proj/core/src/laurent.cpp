#include "alexbq/laurent.hpp"

#include <algorithm>
#include <limits>

#include "alexbq/errors.hpp"
#include "poly_text.hpp"

namespace alexbq {

namespace {

template <class Poly>
Poly canonical_form_impl(const Poly& p) {
  if (p.is_zero()) return p;
  typename Poly::Monomial lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  for (const auto& [m, c] : p.terms()) {
    lo[0] = std::min(lo[0], m[0]);
    lo[1] = std::min(lo[1], m[1]);
  }
  Poly q = p.shifted({-lo[0], -lo[1]});
  // grlex with the first variable most significant
  auto lead = q.terms().begin();
  for (auto it = q.terms().begin(); it != q.terms().end(); ++it) {
    const auto& m = it->first;
    const auto& l = lead->first;
    int dm = m[0] + m[1], dl = l[0] + l[1];
    if (dm > dl || (dm == dl && m[0] > l[0])) lead = it;
  }
  if (lead->second < 0) q = -q;
  return q;
}

std::optional<LaurentPoly::Monomial> laurent_var(std::string_view name) {
  if (name == "t") return LaurentPoly::Monomial{1, 0};
  if (name == "s") return LaurentPoly::Monomial{0, 1};
  return std::nullopt;
}

std::optional<XYLaurentPoly::Monomial> xy_var(std::string_view name) {
  if (name == "x") return XYLaurentPoly::Monomial{1, 0};
  if (name == "y") return XYLaurentPoly::Monomial{0, 1};
  return std::nullopt;
}

struct Box {
  int lo_t, hi_t, lo_s, hi_s;
};

Box bounding_box(const LaurentPoly& p) {
  Box b{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(),
        std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (const auto& [m, c] : p.terms()) {
    b.lo_t = std::min(b.lo_t, m[0]);
    b.hi_t = std::max(b.hi_t, m[0]);
    b.lo_s = std::min(b.lo_s, m[1]);
    b.hi_s = std::max(b.hi_s, m[1]);
  }
  return b;
}

}  // namespace

LaurentPoly canonical_unit_form(const LaurentPoly& p) { return canonical_form_impl(p); }

XYLaurentPoly canonical_unit_form(const XYLaurentPoly& p) { return canonical_form_impl(p); }

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  return canonical_unit_form(a) == canonical_unit_form(b);
}

LaurentPoly::Monomial min_exponents(const LaurentPoly& p) {
  if (p.is_zero()) return {0, 0};
  Box b = bounding_box(p);
  return {b.lo_t, b.lo_s};
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw DomainError("exact_div: division by zero");
  if (p.is_zero()) return LaurentPoly{};

  // Degrees in each variable are additive in a domain, so every quotient
  // exponent lies in this box. Lex order (t, then s) is a group order on Z^2,
  // so the leading term of the remainder strictly decreases.
  Box bp = bounding_box(p), bd = bounding_box(d);
  Box bq{bp.lo_t - bd.lo_t, bp.hi_t - bd.hi_t, bp.lo_s - bd.lo_s, bp.hi_s - bd.hi_s};
  if (bq.lo_t > bq.hi_t || bq.lo_s > bq.hi_s) return std::nullopt;

  const auto& [dm, dc] = *d.terms().rbegin();
  LaurentPoly rem = p;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    LaurentPoly::Monomial qm{rm[0] - dm[0], rm[1] - dm[1]};
    if (qm[0] < bq.lo_t || qm[0] > bq.hi_t || qm[1] < bq.lo_s || qm[1] > bq.hi_s) {
      return std::nullopt;
    }
    Integer qc = rc / dc;
    LaurentPoly step = LaurentPoly::term(qm, qc);
    quotient += step;
    rem -= step * d;
  }
  return quotient;
}

LaurentPoly specialize_s(const LaurentPoly& p, int value) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m[1] >= 0) {
      Integer v;
      mpz_pow_ui(v.get_mpz_t(), Integer(value).get_mpz_t(), static_cast<unsigned long>(m[1]));
      r.add_term({m[0], 0}, c * v);
    } else {
      if (value != 1 && value != -1) {
        throw DomainError("specialize_s: negative power of a non-unit value");
      }
      int sign = (value == -1 && (-m[1]) % 2 == 1) ? -1 : 1;
      r.add_term({m[0], 0}, c * sign);
    }
  }
  return r;
}

std::string to_string(const LaurentPoly& p) { return detail::format_poly(p, {"t", "s"}); }

std::string to_string(const XYLaurentPoly& p) { return detail::format_poly(p, {"x", "y"}); }

LaurentPoly parse_laurent(std::string_view text) {
  return detail::PolyParser<LaurentPoly>(text, laurent_var, true).parse();
}

XYLaurentPoly parse_xy(std::string_view text) {
  return detail::PolyParser<XYLaurentPoly>(text, xy_var, true).parse();
}

}  // namespace alexbq
