#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace alexbq {

using Integer = mpz_class;

// Sparse polynomial with exact integer coefficients over exponent vectors of
// fixed length. The Tag parameter keeps rings with the same exponent shape
// (for instance Z[t^±1, s^±1] and Z[x^±1, y^±1]) from mixing by accident.
//
// Invariant: no stored coefficient is zero; the zero polynomial has no terms.
template <class Exp, std::size_t N, class Tag>
class SparsePoly {
 public:
  using Exponent = Exp;
  using Monomial = std::array<Exp, N>;
  using TermMap = std::map<Monomial, Integer>;
  static constexpr std::size_t num_vars = N;

  SparsePoly() = default;

  static SparsePoly constant(const Integer& c) { return term(Monomial{}, c); }

  static SparsePoly term(const Monomial& m, const Integer& c = 1) {
    SparsePoly p;
    p.add_term(m, c);
    return p;
  }

  static SparsePoly variable(std::size_t index, Exp power = 1) {
    Monomial m{};
    m[index] = power;
    return term(m);
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= k;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Integer& k) { return a *= k; }
  friend SparsePoly operator*(const Integer& k, SparsePoly a) { return a *= k; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        r.add_term(multiply(ma, mb), ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by the monomial `m` (exponent-wise addition).
  SparsePoly shifted(const Monomial& m) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(multiply(e, m), c);
    return r;
  }

  static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }

 private:
  TermMap terms_;
};

}  // namespace alexbq
