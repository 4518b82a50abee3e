#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "alexbq/laurent.hpp"
#include "alexbq/poly4.hpp"

// Reference values used by the regression tests and the acceptance runner.
namespace reference {

using alexbq::LaurentPoly;
using alexbq::Poly4;

// Reference 8x8 matrix for the example knot, columns a..h.
inline std::vector<std::vector<LaurentPoly>> example_matrix() {
  const char* rows[8][8] = {
      {"t", "-1", "0", "0", "0", "1-s*t", "0", "0"}, {"0", "0", "0", "0", "0", "s", "-1", "0"},
      {"0", "1-s*t", "0", "0", "t", "-1", "0", "0"}, {"0", "s", "-1", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "1", "-1", "0", "0", "0"},     {"0", "0", "0", "0", "0", "0", "-1", "1"},
      {"1-s*t", "0", "-1", "t", "0", "0", "0", "0"}, {"s", "0", "0", "0", "0", "0", "0", "-1"},
  };
  std::vector<std::vector<LaurentPoly>> m(8, std::vector<LaurentPoly>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m[i][j] = alexbq::parse_laurent(rows[i][j]);
  return m;
}

// Equal up to a permutation of rows and the sign of each row.
inline bool same_rows_up_to_sign(std::vector<std::vector<LaurentPoly>> a, std::vector<std::vector<LaurentPoly>> b) {
  if (a.size() != b.size()) return false;
  for (const auto& row : a) {
    auto neg = row;
    for (auto& e : neg) e = -e;
    auto it = std::find(b.begin(), b.end(), row);
    if (it == b.end()) it = std::find(b.begin(), b.end(), neg);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

// Generator lists in t, s; the relations 1 - T*Ti and 1 - S*Si are added by
// as_ideal, so list entries that are just those relations are left out.
using Set = std::vector<std::string>;

inline const Set kFour{"1 - t^-1 + t^-2", "-1 + t^-1 + t", "-1 + s", "-1 + s^-1"};
inline const Set kKishinoLikeD1 = kFour;
inline const Set kK2D1 = kFour;
inline const Set kVt2D0 = kFour;
inline const Set kVt1D0{"1"};
inline const Set kSlavikD1{
    "3*t^-1*s - s^2 - 2*t^-2 + s^-1*t^-3", "3 - s*t - 2*s^-1*t^-1 + s^-2*t^-2",
    "3*s^-1*t - t^2 - 2*s^-2 + t^-1*s^-3", "-3*s^-1*t^2 + 2*t*s^-2 + t^3 - s^-3",
    "-3*t + 2*s^-1 + s*t^-2 - t^-1*s^-2",  "-3*s + 2*t^-1 + t*s^-2 - s^-1*t^-2",
    "-3*t^-1*s^2 + 2*s*t^-2 + s^3 - t^-3",
};
// The same list with t^2*s and s^2*t in the fifth and sixth entries.
inline const Set kSlavikD1Corrected{
    "3*t^-1*s - s^2 - 2*t^-2 + s^-1*t^-3", "3 - s*t - 2*s^-1*t^-1 + s^-2*t^-2",
    "3*s^-1*t - t^2 - 2*s^-2 + t^-1*s^-3", "-3*s^-1*t^2 + 2*t*s^-2 + t^3 - s^-3",
    "-3*t + 2*s^-1 + t^2*s - t^-1*s^-2",   "-3*s + 2*t^-1 + s^2*t - s^-1*t^-2",
    "-3*t^-1*s^2 + 2*s*t^-2 + s^3 - t^-3",
};
inline const Set kMiyazawaD0{
    "-(1 - s^-1)*(1 - t)*(s^-1 - t)",
    "(1 - t^-1)*(1 - s)*(s - t^-1)",
    "(1 - t^-1)*(1 + t^-1 - s - s^-1*t^-1)",
    "(1 - s^-1)*(1 + s^-1 - t - s^-1*t^-1)",
    "s^-1 + t^-1 - s - t + s*t - s^-1*t^-1",
};
inline const Set kVt2Vt2D0{
    "-2 + t + 3*t^-1 - 2*t^-2 + t^-3", "-(1 - s^-1)*(1 - t^-1 + t^-2)", "3 - 2*t^-1 - 2*t + t^-2 + t^2",
    "(1 - s^-1)*(1 - t^-1 - t)",       "(1 - s^-1)^2",                  "s^-1 - 2 + s",
};

inline std::vector<Poly4> as_ideal(const Set& set) {
  std::vector<Poly4> out;
  for (const auto& s : set) out.push_back(alexbq::pullback(alexbq::parse_laurent(s)));
  out.push_back(alexbq::poly4::t_relation());
  out.push_back(alexbq::poly4::s_relation());
  return out;
}

}  // namespace reference
