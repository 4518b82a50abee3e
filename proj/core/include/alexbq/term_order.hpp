#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alexbq {

enum class OrderKind { lex, grlex };

// A monomial order on exponent vectors.
//
// `priority` lists variable indices from most to least significant: lex
// compares exponents of priority[0] first, then priority[1], and so on; grlex
// compares total degree first and breaks ties the same way. With variables
// (x, y, z) and priority {0, 1, 2}, lex gives xy^2z < xy^2z^2 < xy^3 < x^2 and
// grlex gives x^2 < xy^2 < xy^3 < xy^2z^2.
struct TermOrder {
  OrderKind kind = OrderKind::grlex;
  std::vector<std::size_t> priority;

  /// grlex on (T, S, Ti, Si) with T > S > Ti > Si.
  static TermOrder default_order();

  /// Throws ValidationError unless priority is a permutation of 0..n-1.
  void validate(std::size_t num_vars) const;

  /// e.g. "grlex(T>S>Ti>Si)" for the four-variable ring.
  std::string describe() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

std::strong_ordering compare_monomials(std::span<const std::uint32_t> a,
                                       std::span<const std::uint32_t> b,
                                       const TermOrder& order);

OrderKind parse_order_kind(std::string_view text);

/// Parses "T,S,Ti,Si" style priority lists (most significant first).
std::vector<std::size_t> parse_priority(std::string_view text);

}  // namespace alexbq
