#include "alexbq/ideals.hpp"

#include <bit>
#include <limits>
#include <unordered_map>

#include "alexbq/errors.hpp"

namespace alexbq {

LaurentPoly determinant(const PresentationMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("determinant: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return laurent::constant(1);

  // Clear each row into Z[t, s]; the determinant picks up the inverse unit.
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  LaurentPoly::Monomial unit{0, 0};
  for (std::size_t r = 0; r < n; ++r) {
    LaurentPoly::Monomial lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (m.at(r, c).is_zero()) continue;
      any = true;
      auto e = min_exponents(m.at(r, c));
      lo[0] = std::min(lo[0], e[0]);
      lo[1] = std::min(lo[1], e[1]);
    }
    if (!any) return LaurentPoly{};
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c).shifted({-lo[0], -lo[1]});
    unit[0] += lo[0];
    unit[1] += lo[1];
  }

  bool negate = false;
  LaurentPoly prev = laurent::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly{};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = exact_div(num, prev);
        if (!q) throw DomainError("determinant: Bareiss step was not exact");
        a[i][j] = std::move(*q);
      }
      a[i][k] = LaurentPoly{};
    }
    prev = a[k][k];
  }
  LaurentPoly det = a[n - 1][n - 1].shifted(unit);
  return negate ? -det : det;
}

std::uint64_t minor_count(const PresentationMatrix& m, std::size_t r) {
  auto binom = [](std::size_t n, std::size_t k) -> long double {
    if (k > n) return 0;
    long double v = 1;
    for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return v;
  };
  long double v = binom(m.rows(), r) * binom(m.cols(), r);
  if (v >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(v + 0.5L);
}

namespace {

class MinorTable {
 public:
  explicit MinorTable(const PresentationMatrix& m) : m_(m) {}

  // Laplace expansion along the lowest row of the set.
  const LaurentPoly& det(std::uint64_t rows, std::uint64_t cols) {
    Key key{rows, cols};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly value;
    if (rows == 0) {
      value = laurent::constant(1);
    } else {
      std::size_t r = static_cast<std::size_t>(std::countr_zero(rows));
      std::uint64_t rest_rows = rows & (rows - 1);
      int position = 0;
      for (std::uint64_t cs = cols; cs; cs &= cs - 1, ++position) {
        std::size_t c = static_cast<std::size_t>(std::countr_zero(cs));
        const LaurentPoly& entry = m_.at(r, c);
        if (entry.is_zero()) continue;
        const LaurentPoly& sub = det(rest_rows, cols & ~(std::uint64_t{1} << c));
        if (sub.is_zero()) continue;
        LaurentPoly term = entry * sub;
        if (position % 2) {
          value -= term;
        } else {
          value += term;
        }
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  struct Key {
    std::uint64_t rows, cols;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.rows * 0x9E3779B97F4A7C15ULL ^ k.cols);
    }
  };

  const PresentationMatrix& m_;
  std::unordered_map<Key, LaurentPoly, KeyHash> memo_;
};

// Visits r-subsets of {0..n-1} as bitmasks in lexicographic order of their
// sorted index lists.
template <class F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    f(mask);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<LaurentPoly> minors(const PresentationMatrix& m, std::size_t r) {
  if (r < 1 || r > std::min(m.rows(), m.cols())) {
    throw ValidationError("minors: size " + std::to_string(r) + " outside 1.." +
                          std::to_string(std::min(m.rows(), m.cols())));
  }
  if (m.rows() > 64 || m.cols() > 64) throw ValidationError("minors: matrices above 64x64 are not supported");
  MinorTable table(m);
  std::vector<LaurentPoly> out;
  for_each_subset(m.rows(), r, [&](std::uint64_t rows) {
    for_each_subset(m.cols(), r, [&](std::uint64_t cols) { out.push_back(table.det(rows, cols)); });
  });
  return out;
}

ElementaryIdeal elementary_ideal(const PresentationMatrix& m, std::size_t k) {
  ElementaryIdeal ideal;
  ideal.k = k;
  if (k >= m.rows()) {
    ideal.kind = IdealKind::whole_ring;
    return ideal;
  }
  const std::size_t size = m.rows() - k;
  if (size > std::min(m.rows(), m.cols())) {
    ideal.kind = IdealKind::zero_ideal;
    return ideal;
  }
  for (auto& p : minors(m, size)) {
    if (!p.is_zero()) ideal.generators.push_back(std::move(p));
  }
  ideal.kind = ideal.generators.empty() ? IdealKind::zero_ideal : IdealKind::general;
  return ideal;
}

LaurentPoly principal_polynomial(const ElementaryIdeal& ideal) {
  switch (ideal.kind) {
    case IdealKind::whole_ring: return laurent::constant(1);
    case IdealKind::zero_ideal: return LaurentPoly{};
    case IdealKind::general: break;
  }
  return gcd_laurent(ideal.generators);
}

LaurentPoly principal_polynomial(const PresentationMatrix& m, std::size_t k) {
  return principal_polynomial(elementary_ideal(m, k));
}

}  // namespace alexbq
