#pragma once

// Text reader and writer shared by the Laurent, XY and four-variable rings.

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "alexbq/errors.hpp"
#include "alexbq/sparse_poly.hpp"

namespace alexbq::detail {

template <class Poly>
class PolyParser {
 public:
  using Monomial = typename Poly::Monomial;
  using Lookup = std::function<std::optional<Monomial>(std::string_view)>;

  PolyParser(std::string_view text, Lookup lookup, bool allow_negative_powers)
      : text_(text), lookup_(std::move(lookup)), laurent_(allow_negative_powers) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg + " at column " + std::to_string(pos_ + 1), 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (!accept('^')) return base;
    long e = exponent();
    return power(base, e);
  }

  long exponent() {
    bool braced = false;
    char close = '\0';
    if (accept('(')) {
      braced = true;
      close = ')';
    } else if (accept('{')) {
      braced = true;
      close = '}';
    }
    bool neg = accept('-');
    if (!neg) accept('+');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (braced && !accept(close)) fail(std::string("expected '") + close + "'");
    return neg ? -e : e;
  }

  Poly power(const Poly& base, long e) {
    if (e < 0) {
      if (!laurent_) fail("negative exponent in a polynomial ring");
      if (base.size() != 1 || abs(base.terms().begin()->second) != 1) {
        fail("negative power of a non-unit");
      }
      const auto& [m, c] = *base.terms().begin();
      Monomial inv{};
      for (std::size_t i = 0; i < Poly::num_vars; ++i) inv[i] = -m[i];
      Poly unit = Poly::term(inv, c);
      return power(unit, -e);
    }
    Poly result = Poly::constant(1);
    Poly b = base;
    while (e > 0) {
      if (e & 1) result = result * b;
      e >>= 1;
      if (e > 0) b = b * b;
    }
    return result;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto m = lookup_(name)) return Poly::term(*m);
      // Juxtaposed names such as "st" or "TTi": split greedily, longest first.
      Poly product = Poly::constant(1);
      std::size_t at = 0;
      while (at < name.size()) {
        std::size_t len = name.size() - at;
        std::optional<Monomial> m;
        for (; len > 0; --len) {
          if ((m = lookup_(name.substr(at, len)))) break;
        }
        if (!m) {
          pos_ = start + at;
          fail("unknown variable '" + std::string(name) + "'");
        }
        product = product * Poly::term(*m);
        at += len;
      }
      return product;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Lookup lookup_;
  bool laurent_;
  std::size_t pos_ = 0;
};

// Terms are written in ascending (total degree, exponent vector) order, so
// "1 - s - t + t*s" for (1 - s)(1 - t) with variables (t, s).
template <class Poly>
std::string format_poly(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  using Monomial = typename Poly::Monomial;
  std::vector<std::pair<Monomial, Integer>> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const Monomial& m) {
    long d = 0;
    for (auto e : m) d += static_cast<long>(e);
    return d;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    long da = degree(a.first), db = degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (m[i] != 1) out << '^' << static_cast<long>(m[i]);
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace alexbq::detail
