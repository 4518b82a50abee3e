// Multivariate gcd in Z[t, s] viewed as (Z[t])[s]: integer content, then
// primitive pseudo-remainder sequences at each level.

#include <algorithm>
#include <vector>

#include "alexbq/errors.hpp"
#include "alexbq/laurent.hpp"

namespace alexbq {

namespace {

// Dense element of Z[t], coefficients low to high, no trailing zeros.
using UPoly = std::vector<Integer>;
// Dense element of (Z[t])[s], coefficients indexed by s-degree.
using BPoly = std::vector<UPoly>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
int degree(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Integer content(const UPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the content and makes the leading coefficient positive.
UPoly primitive_part(const UPoly& a) {
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  UPoly r = a;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

// lc(b)^k * a mod b, a pseudo-remainder up to a power of lc(b).
UPoly pseudo_rem(UPoly a, const UPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && degree(a) >= degree(b)) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= la * b[j];
    trim(a);
  }
  return a;
}

UPoly gcd_zt(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) {
    UPoly r = a.empty() ? b : a;
    if (!r.empty() && r.back() < 0) {
      for (auto& c : r) c = -c;
    }
    return r;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  UPoly x = primitive_part(a), y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    UPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  for (auto& c : x) c *= g;
  return x;
}

// Exact quotient a / b in Z[t]; the caller guarantees divisibility.
UPoly div_exact(UPoly a, const UPoly& b) {
  if (a.empty()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (!a.empty() && degree(a) >= degree(b)) {
    std::size_t shift = a.size() - b.size();
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[shift] = qc;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= qc * b[j];
    trim(a);
  }
  if (!a.empty()) throw DomainError("gcd: inexact division in Z[t]");
  trim(q);
  return q;
}

UPoly content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    g = gcd_zt(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& a) {
  if (a.empty()) return a;
  UPoly g = content(a);
  BPoly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(div_exact(c, g));
  return r;
}

BPoly pseudo_rem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && degree(a) >= degree(b)) {
    UPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = sub(a[j + shift], mul(la, b[j]));
    trim(a);
  }
  return a;
}

BPoly gcd_bivariate(const BPoly& a, const BPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly g = gcd_zt(content(a), content(b));
  BPoly x = primitive_part(a), y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    BPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  for (auto& c : x) c = mul(c, g);
  return x;
}

// Requires nonnegative exponents.
BPoly to_dense(const LaurentPoly& p) {
  BPoly r;
  for (const auto& [m, c] : p.terms()) {
    auto ti = static_cast<std::size_t>(m[0]), si = static_cast<std::size_t>(m[1]);
    if (r.size() <= si) r.resize(si + 1);
    if (r[si].size() <= ti) r[si].resize(ti + 1);
    r[si][ti] = c;
  }
  return r;
}

LaurentPoly from_dense(const BPoly& p) {
  LaurentPoly r;
  for (std::size_t si = 0; si < p.size(); ++si) {
    for (std::size_t ti = 0; ti < p[si].size(); ++ti) {
      r.add_term({static_cast<int>(ti), static_cast<int>(si)}, p[si][ti]);
    }
  }
  return r;
}

}  // namespace

LaurentPoly gcd_laurent(std::span<const LaurentPoly> ps) {
  BPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = gcd_bivariate(g, to_dense(canonical_unit_form(p)));
    if (g.size() == 1 && g[0].size() == 1 && abs(g[0][0]) == 1) break;
  }
  return canonical_unit_form(from_dense(g));
}

}  // namespace alexbq
