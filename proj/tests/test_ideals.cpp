#include <doctest.h>

#include <random>

#include "alexbq/catalog.hpp"
#include "alexbq/errors.hpp"
#include "alexbq/groebner.hpp"
#include "alexbq/ideals.hpp"
#include "oracles.hpp"

using namespace alexbq;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }

PresentationMatrix mat(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<LaurentPoly>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const char* e : row) r.back().push_back(L(e));
  }
  return PresentationMatrix(r);
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(determinant(mat({{"1", "0"}, {"0", "1"}})) == L("1"));
  CHECK(determinant(mat({{"-s", "1"}, {"-s", "1"}})).is_zero());
  CHECK(determinant(mat({{"0", "t"}, {"s", "0"}})) == L("-s*t"));
  CHECK(determinant(PresentationMatrix(0, 0)) == L("1"));
  CHECK_THROWS_AS(determinant(PresentationMatrix(2, 3)), ValidationError);
  const PresentationMatrix m = build_matrix(catalog("example1"));
  CHECK(unit_equivalent(determinant(m), L("(1-s*t)*(1-s)*(1-t)")));
  CHECK(determinant(m) == oracle::leibniz_det(oracle::rows_of(m)));
}

TEST_CASE("Bareiss agrees with the Leibniz and rational oracles on random 4x4 matrices") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> sparse(0, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<LaurentPoly>> a(4, std::vector<LaurentPoly>(4));
    for (auto& row : a)
      for (auto& e : row) e = sparse(rng) == 0 ? LaurentPoly{} : oracle::random_laurent(rng, -1, 1, 3, 4);
    const PresentationMatrix m(a);
    const LaurentPoly det = determinant(m);
    CHECK(det == oracle::leibniz_det(a));
    CHECK(minors(m, 4).front() == det);
    const mpq_class t(3, 2), s(-5, 3);
    std::vector<std::vector<mpq_class>> q(4, std::vector<mpq_class>(4));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) q[r][c] = oracle::eval(a[r][c], t, s);
    CHECK(oracle::eval(det, t, s) == oracle::rational_det(q));
  }
}

TEST_CASE("minors") {
  const PresentationMatrix m = mat({{"1+t", "s"}, {"t^-1", "7"}});
  CHECK(minors(m, 1) == std::vector<LaurentPoly>{L("1+t"), L("s"), L("t^-1"), L("7")});
  CHECK(minors(m, 2) == std::vector<LaurentPoly>{L("7 + 7*t - s*t^-1")});
  const PresentationMatrix kink = mat({{"-s", "1"}, {"-s", "1"}});
  CHECK(minors(kink, 1) == std::vector<LaurentPoly>{L("-s"), L("1"), L("-s"), L("1")});
  const PresentationMatrix ex = build_matrix(catalog("example1"));
  CHECK(minors(ex, 7).size() == 64);
  CHECK(minor_count(ex, 7) == 64);
  CHECK_THROWS_AS(minors(ex, 0), ValidationError);
  CHECK_THROWS_AS(minors(ex, 9), ValidationError);

  // Every 7-minor against the Leibniz oracle, in lexicographic order.
  const auto rows = oracle::rows_of(ex);
  const auto got = minors(ex, 7);
  std::size_t idx = 0;
  for (int skip_r = 7; skip_r >= 0; --skip_r) {
    for (int skip_c = 7; skip_c >= 0; --skip_c) {
      std::vector<std::vector<LaurentPoly>> sub;
      for (int r = 0; r < 8; ++r) {
        if (r == skip_r) continue;
        sub.emplace_back();
        for (int c = 0; c < 8; ++c)
          if (c != skip_c) sub.back().push_back(rows[r][c]);
      }
      CHECK(got[idx++] == oracle::leibniz_det(sub));
    }
  }
  CHECK(gcd_laurent(got) == principal_polynomial(ex, 1));
}

TEST_CASE("elementary ideal boundaries") {
  const PresentationMatrix ex = build_matrix(catalog("example1"));
  CHECK(elementary_ideal(ex, 8).kind == IdealKind::whole_ring);
  CHECK(elementary_ideal(ex, 12).kind == IdealKind::whole_ring);
  const ElementaryIdeal i0 = elementary_ideal(ex, 0);
  CHECK(i0.kind == IdealKind::general);
  REQUIRE(i0.generators.size() == 1);
  CHECK(unit_equivalent(i0.generators[0], L("(1-s*t)*(1-s)*(1-t)")));
  CHECK(elementary_ideal(build_matrix(catalog("unknot-kink")), 0).kind == IdealKind::zero_ideal);
  CHECK(elementary_ideal(PresentationMatrix(3, 2), 0).kind == IdealKind::zero_ideal);
  CHECK(principal_polynomial(PresentationMatrix(3, 2), 0).is_zero());
  CHECK(principal_polynomial(ex, 8) == L("1"));
}

TEST_CASE("principal polynomials") {
  CHECK(principal_polynomial(build_matrix(catalog("2.1")), 0) == canonical_unit_form(L("(1-s)*(1-t)*(1-s*t)")));
  CHECK(principal_polynomial(build_matrix(catalog("miyazawa")), 0) == canonical_unit_form(L("(s*t-1)*(s-1)*(t-1)")));
  CHECK(principal_polynomial(build_matrix(catalog("unknot-kink")), 1) == L("1"));
  CHECK(principal_polynomial(build_matrix(catalog("unknot-kink")), 0).is_zero());
}

TEST_CASE("elementary ideals are nested on every catalog entry") {
  const TermOrder ord = TermOrder::default_order();
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const PresentationMatrix m = build_matrix(catalog(name));
    for (std::size_t k = 0; k < 2; ++k) {
      const GroebnerBasis next = ag_invariant(m, k + 1, ord);
      const ElementaryIdeal ik = elementary_ideal(m, k);
      for (const auto& g : ik.generators) CHECK(strong_reduce(pullback(g), next.elements, ord).is_zero());
    }
  }
}
