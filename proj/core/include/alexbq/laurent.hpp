#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "alexbq/sparse_poly.hpp"

namespace alexbq {

struct LaurentTag {};
struct XYTag {};

/// Element of Z[t^±1, s^±1]; exponent slot 0 is t, slot 1 is s.
using LaurentPoly = SparsePoly<int, 2, LaurentTag>;
/// Element of Z[x^±1, y^±1], the ring of Sawollek-style polynomials.
using XYLaurentPoly = SparsePoly<int, 2, XYTag>;

namespace laurent {
inline constexpr std::size_t kT = 0;
inline constexpr std::size_t kS = 1;

inline LaurentPoly t(int power = 1) { return LaurentPoly::variable(kT, power); }
inline LaurentPoly s(int power = 1) { return LaurentPoly::variable(kS, power); }
inline LaurentPoly constant(long c) { return LaurentPoly::constant(Integer(c)); }
}  // namespace laurent

/// Multiplies by the unit ±t^n s^m that moves the minimal t- and s-exponents
/// to zero and makes the grlex (t > s) leading coefficient positive. Two
/// Laurent polynomials differ by a unit iff their canonical forms agree.
LaurentPoly canonical_unit_form(const LaurentPoly& p);

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

/// q with p = q * d, or nullopt when d does not divide p in Z[t^±1, s^±1].
/// Throws DomainError when d is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Greatest common divisor in Z[t, s] after clearing units, in canonical
/// unit form. The gcd of an empty or all-zero list is 0.
LaurentPoly gcd_laurent(std::span<const LaurentPoly> ps);

/// Substitutes s = value.
LaurentPoly specialize_s(const LaurentPoly& p, int value);

/// Total degree span helpers used by printers and determinant bookkeeping.
LaurentPoly::Monomial min_exponents(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);
std::string to_string(const XYLaurentPoly& p);

/// Parses sums of integer multiples of t, s (negative powers allowed) with
/// parentheses, `*`, `^` and implicit products, e.g. "1 - s - t + t*s" or
/// "(1-s)(1-t)(1-s*t)" or "t^-2*s".
LaurentPoly parse_laurent(std::string_view text);

XYLaurentPoly parse_xy(std::string_view text);

/// Canonical unit form in Z[x^±1, y^±1] (same rules, x plays t and y plays s).
XYLaurentPoly canonical_unit_form(const XYLaurentPoly& p);

}  // namespace alexbq
