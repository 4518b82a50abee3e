#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "alexbq/laurent.hpp"
#include "alexbq/sparse_poly.hpp"
#include "alexbq/term_order.hpp"

namespace alexbq {

struct Poly4Tag {};

/// Element of Z[T, S, Ti, Si], where Ti and Si are independent variables that
/// stand for t^-1 and s^-1 once the relations 1 - T*Ti and 1 - S*Si are imposed.
using Poly4 = SparsePoly<std::uint32_t, 4, Poly4Tag>;
using Monomial4 = Poly4::Monomial;

namespace poly4 {
inline constexpr std::size_t kT = 0;
inline constexpr std::size_t kS = 1;
inline constexpr std::size_t kTi = 2;
inline constexpr std::size_t kSi = 3;

inline Poly4 var(std::size_t index, std::uint32_t power = 1) {
  return Poly4::variable(index, power);
}
inline Poly4 constant(long c) { return Poly4::constant(Integer(c)); }

/// 1 - T*Ti and 1 - S*Si.
Poly4 t_relation();
Poly4 s_relation();
}  // namespace poly4

std::strong_ordering compare_monomials(const Monomial4& a, const Monomial4& b,
                                       const TermOrder& order);

/// Coefficient and monomial of the order-maximal term. Throws DomainError for 0.
std::pair<Integer, Monomial4> leading_term(const Poly4& p, const TermOrder& order);

/// t^a -> T^a for a >= 0 and Ti^-a for a < 0; likewise for s.
Poly4 pullback(const LaurentPoly& p);

/// Substitutes Ti = t^-1, Si = s^-1 and collects terms.
LaurentPoly pushforward(const Poly4& p);

std::string to_string(const Poly4& p);

/// Parses polynomials in T, S, Ti, Si, e.g. "Ti^2*S - 1".
Poly4 parse_poly4(std::string_view text);

}  // namespace alexbq
