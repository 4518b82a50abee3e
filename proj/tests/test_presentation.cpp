#include <doctest.h>

#include "alexbq/catalog.hpp"
#include "alexbq/ideals.hpp"
#include "alexbq/presentation.hpp"
#include "oracles.hpp"
#include "reference.hpp"

using namespace alexbq;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }

}  // namespace

TEST_CASE("example knot reproduces the reference matrix") {
  const Diagram d = catalog("example1");
  const PresentationMatrix m = build_matrix(d);
  REQUIRE(m.rows() == 8);
  REQUIRE(m.cols() == 8);
  // Catalog ids 1..8 are the letters a..h, so columns already line up.
  CHECK(m.generator_names() == std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7", "8"});
  CHECK(reference::same_rows_up_to_sign(oracle::rows_of(m), reference::example_matrix()));
  CHECK(unit_equivalent(determinant(m), L("(s-1)*(t-1)*(s*t-1)")));
}

TEST_CASE("matrix shapes") {
  const PresentationMatrix u = build_matrix(Diagram::unknot());
  CHECK(u.rows() == 0);
  CHECK(u.cols() == 1);

  const PresentationMatrix kink = build_matrix(catalog("unknot-kink"));
  REQUIRE(kink.rows() == 2);
  REQUIRE(kink.cols() == 2);
  // Columns: the loop x, then the outer arc a. Row 2 is a = s*x; row 1 is
  // x - t*a - (1-st)*x = st*x - t*a, i.e. t*(s*x - a). Both give a = s*x.
  CHECK(kink.at(0, 0) == L("s*t"));
  CHECK(kink.at(0, 1) == L("-t"));
  CHECK(kink.at(1, 0) == L("-s"));
  CHECK(kink.at(1, 1) == L("1"));
  CHECK(determinant(kink).is_zero());

  for (const auto& name : {"2.1", "trefoil", "slavik", "k#1", "kishino-like-braid"}) {
    const Diagram d = catalog(name);
    const PresentationMatrix m = build_matrix(d);
    CHECK(m.rows() == 2 * d.crossings().size());
    CHECK(m.cols() == d.semiarc_count());
  }
  for (const auto& name : {"vt1", "vt2", "vt2#vt2"}) {
    const Diagram d = catalog(name);
    const PresentationMatrix m = build_matrix(d);
    const std::size_t c = d.crossings().size();
    CHECK(m.rows() == 2 * c);
    CHECK(m.cols() == 2 * c + 1);
    CHECK(m.generator_names()[2 * c - 1].ends_with("@start"));
    CHECK(m.generator_names()[2 * c].ends_with("@end"));
  }
}

TEST_CASE("row shapes") {
  const std::vector<LaurentPoly> classical = {L("1"), L("-1"), L("t"), L("-t"), L("s"), L("-s"), L("1-s*t"),
                                              L("s*t-1")};
  for (const auto& name : catalog_names()) {
    const Diagram d = catalog(name);
    const PresentationMatrix m = build_matrix(d);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const bool is_virtual = !d.crossings()[r / 2].is_classical();
      int nonzero = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const LaurentPoly& e = m.at(r, c);
        if (e.is_zero()) continue;
        ++nonzero;
        if (is_virtual) {
          CHECK((e == L("1") || e == L("-1")));
        } else if (std::find(classical.begin(), classical.end(), e) == classical.end()) {
          // a kink puts two coefficients into one column
          CHECK(name == std::string("unknot-kink"));
        }
      }
      CHECK(nonzero <= 3);
    }
  }
}

TEST_CASE("text emitter") {
  const PresentationMatrix m = build_matrix(catalog("unknot-kink"));
  CHECK(to_text(m) == "t*s | -t\n-s | 1\n");
}
