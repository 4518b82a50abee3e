#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "alexbq/braid.hpp"
#include "alexbq/catalog.hpp"
#include "alexbq/errors.hpp"
#include "alexbq/groebner.hpp"
#include "alexbq/ideals.hpp"
#include "alexbq/invariants.hpp"
#include "oracles.hpp"
#include "reference.hpp"

using namespace alexbq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const TermOrder kOrder = TermOrder::default_order();

// Collects sub-check outcomes for one criterion.
struct Checks {
  std::vector<std::string> failures;
  bool verbose = false;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    if (verbose) std::cout << "    " << (ok ? "ok   " : "FAIL ") << what << '\n';
  }
  bool passed() const { return failures.empty(); }
};

PresentationMatrix M(std::string_view name) { return build_matrix(catalog(name)); }
LaurentPoly C(const char* s) { return canonical_unit_form(parse_laurent(s)); }

bool ideals_agree(const PresentationMatrix& a, const PresentationMatrix& b, std::size_t k) {
  return principal_polynomial(a, k) == principal_polynomial(b, k) &&
         ideal_equal(ag_invariant(a, k, kOrder).elements, ag_invariant(b, k, kOrder).elements, kOrder);
}

void criterion1(Checks& c) {
  const PresentationMatrix m = M("example1");
  c.expect(m.rows() == 8 && m.cols() == 8, "example knot gives an 8x8 matrix");
  c.expect(reference::same_rows_up_to_sign(oracle::rows_of(m), reference::example_matrix()),
           "matrix equals the reference matrix up to row order and row sign");
  c.expect(unit_equivalent(determinant(m), parse_laurent("(s-1)*(t-1)*(s*t-1)")), "det ~ (s-1)(t-1)(st-1)");
  c.expect(classical_alexander(catalog("example1")) == parse_laurent("1"), "classical specialization is 1");
}

void criterion2(Checks& c) {
  const std::pair<const char*, const char*> cases[] = {
      {"2.1", "(1-s)*(1-t)*(1-s*t)"},
      {"k#1", "(1-s)*(1-t)*(1-s*t)*(1-t+s*t^2+s^2*t^2)"},
      {"k#2", "(1-s)*(1-t)*(1-s*t)*(1+s-t+s*t^2+s^2*t^2-t*s^2)"},
      {"miyazawa", "(s*t-1)*(s-1)*(t-1)"},
  };
  for (const auto& [name, expected] : cases)
    c.expect(principal_polynomial(M(name), 0) == C(expected), std::string("Delta_0^p(") + name + ")");
}

struct BasisCheck {
  const char* label;
  const char* knot;
  std::size_t k;
  const reference::Set* expected;
};

void criterion3(Checks& c, double& slowest) {
  const BasisCheck cases[] = {
      {"Delta_1^<(kishino-like)", "kishino-like", 1, &reference::kKishinoLikeD1},
      {"Delta_1^<(k#2)", "k#2", 1, &reference::kK2D1},
      {"Delta_1^<(slavik), 9 reference generators", "slavik", 1, &reference::kSlavikD1},
      {"Delta_0^<(miyazawa), 7 reference generators", "miyazawa", 0, &reference::kMiyazawaD0},
      {"Delta_0^<(vt1) = {1}", "vt1", 0, &reference::kVt1D0},
      {"Delta_0^<(vt2), 4 reference generators", "vt2", 0, &reference::kVt2D0},
      {"Delta_0^<(vt2#vt2), 7 reference generators", "vt2#vt2", 0, &reference::kVt2Vt2D0},
  };
  for (const auto& bc : cases) {
    const auto start = Clock::now();
    const GroebnerBasis g = ag_invariant(M(bc.knot), bc.k, kOrder);
    const bool equal = ideal_equal(g.elements, reference::as_ideal(*bc.expected), kOrder);
    const double secs = seconds_since(start);
    slowest = std::max(slowest, secs);
    c.expect(equal, bc.label);
    c.expect(secs < 30.0, std::string(bc.label) + " within 30 s");
  }
}

// Not part of the pass/fail verdict; printed next to criterion 3.
void criterion3_notes() {
  const GroebnerBasis slavik = ag_invariant(M("slavik"), 1, kOrder);
  const bool corrected = ideal_equal(slavik.elements, reference::as_ideal(reference::kSlavikD1Corrected), kOrder);
  const GroebnerBasis literal_basis = buchberger(reference::as_ideal(reference::kSlavikD1), kOrder);
  const bool has_35 = strong_reduce(parse_poly4("35"), literal_basis.elements, kOrder).is_zero();
  std::cout << "      note: slavik Delta_1^< equals the reference set with t^2*s and s^2*t in entries 5 and 6: "
            << (corrected ? "yes" : "no") << "; the literal reference set contains 35: " << (has_35 ? "yes" : "no")
            << '\n';
  std::vector<Poly4> literal;
  for (const auto& s : reference::kVt2Vt2D0) literal.push_back(pullback(parse_laurent(s)));
  literal.push_back(poly4::t_relation());
  for (auto& p : literal)
    if (leading_term(p, kOrder).first < 0) p = -p;
  std::sort(literal.begin(), literal.end(), [](const Poly4& a, const Poly4& b) {
    return compare_monomials(leading_term(a, kOrder).second, leading_term(b, kOrder).second, kOrder) < 0;
  });
  const bool same = ag_invariant(M("vt2#vt2"), 0, kOrder).elements == literal;
  std::cout << "      note: vt2#vt2 reduced basis is element-for-element the reference list: " << (same ? "yes" : "no")
            << '\n';
}

void criterion4(Checks& c) {
  const PresentationMatrix trivial = M("unknot-kink");
  const LaurentPoly trivial_p0 = principal_polynomial(trivial, 0);
  const GroebnerBasis trivial_g0 = ag_invariant(trivial, 0, kOrder);
  const GroebnerBasis trivial_g1 = ag_invariant(trivial, 1, kOrder);
  const PresentationMatrix kishino = M("kishino");
  c.expect(principal_polynomial(kishino, 0) == trivial_p0, "kishino Delta_0^p trivial");
  c.expect(ag_invariant(kishino, 0, kOrder) == trivial_g0, "kishino Delta_0^< trivial");
  c.expect(ag_invariant(kishino, 1, kOrder) == trivial_g1, "kishino Delta_1^< trivial");
  c.expect(ag_invariant(M("2.1"), 1, kOrder) == trivial_g1, "2.1 Delta_1^< = {1}");
  c.expect(ag_invariant(M("k#1"), 1, kOrder) == trivial_g1, "k#1 Delta_1^< = {1}");
  const PresentationMatrix slavik = M("slavik");
  c.expect(principal_polynomial(slavik, 0) == trivial_p0, "slavik Delta_0^p trivial");
  c.expect(ag_invariant(slavik, 1, kOrder) != trivial_g1, "slavik Delta_1^< nontrivial");
  const PresentationMatrix miyazawa = M("miyazawa");
  c.expect(ag_invariant(miyazawa, 1, kOrder) == trivial_g1, "miyazawa Delta_1^< trivial");
  c.expect(ag_invariant(miyazawa, 0, kOrder) != trivial_g0, "miyazawa Delta_0^< nontrivial");
  c.expect(principal_polynomial(miyazawa, 0) != trivial_p0, "miyazawa Delta_0^p nontrivial");
}

void criterion5(Checks& c) {
  std::vector<std::string> words{"width=4 s3 v3 v1 s1 s2"};
  std::mt19937 rng(31337);
  const char* letters[] = {"s1", "s2", "S1", "S2", "v1", "v2"};
  std::uniform_int_distribution<int> pick(0, 5), len(1, 6);
  for (int i = 0; i < 5; ++i) {
    std::string text = "width=3";
    for (int j = len(rng); j > 0; --j) text += std::string(" ") + letters[pick(rng)];
    words.push_back(text);
  }
  for (const auto& text : words) {
    const VirtualBraidWord w = parse_braid(text);
    const PresentationMatrix a = build_matrix(braid_closure(w));
    const PresentationMatrix b = build_matrix(reverse(braid_closure(invert_braid(w))));
    for (std::size_t k = 0; k < 2; ++k)
      c.expect(ideals_agree(a, b, k), "\"" + text + "\" k=" + std::to_string(k));
  }
}

void criterion6(Checks& c) {
  std::mt19937 rng(20240917);
  {
    GroebnerBudget budget;
    budget.max_basis_size = 400;
    budget.max_pairs = 20000;
    int completed = 0, bad = 0;
    std::uniform_int_distribution<int> count(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<Poly4> gens;
      for (int i = count(rng); i > 0; --i) gens.push_back(oracle::random_poly4(rng, 3, 3, 3));
      GroebnerBasis g;
      try {
        g = buchberger(gens, kOrder, budget);
      } catch (const BudgetExceeded&) {
        continue;
      }
      ++completed;
      bool ok = is_strong_groebner_basis(g.elements, kOrder);
      for (const auto& f : gens) ok = ok && strong_reduce(f, g.elements, kOrder).is_zero();
      std::vector<Poly4> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& f : shuffled)
        if (rng() % 2) f = -f;
      ok = ok && buchberger(shuffled, kOrder, budget) == g;
      if (!ok) ++bad;
    }
    c.expect(bad == 0, "(a) Buchberger postconditions on " + std::to_string(completed) + " of 200 random ideals");
    c.expect(completed >= 150, "(a) at least 150 random ideals finished within the budget");
  }
  {
    int bad = 0;
    std::uniform_int_distribution<int> sparse(0, 3);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::vector<LaurentPoly>> a(4, std::vector<LaurentPoly>(4));
      for (auto& row : a)
        for (auto& e : row) e = sparse(rng) == 0 ? LaurentPoly{} : oracle::random_laurent(rng, -1, 1, 3, 4);
      if (determinant(PresentationMatrix(a)) != oracle::leibniz_det(a)) ++bad;
    }
    c.expect(bad == 0, "(b) Bareiss matches Laplace expansion on 100 random 4x4 matrices");
  }
  {
    int bad = 0;
    std::uniform_int_distribution<int> ex(-3, 3);
    auto unit = [&] { return LaurentPoly::term({ex(rng), ex(rng)}, Integer(rng() % 2 ? 1 : -1)); };
    for (int i = 0; i < 200; ++i) {
      const LaurentPoly common = oracle::random_laurent(rng, -1, 2, 2, 3);
      const LaurentPoly p = common * oracle::random_laurent(rng, -1, 2, 3, 4);
      const LaurentPoly q = common * oracle::random_laurent(rng, -1, 2, 3, 4);
      const LaurentPoly g = gcd_laurent(std::vector<LaurentPoly>{p, q});
      if (p.is_zero() && q.is_zero()) {
        if (!g.is_zero()) ++bad;
        continue;
      }
      const bool ok = exact_div(p, g) && exact_div(q, g) &&
                      gcd_laurent(std::vector<LaurentPoly>{unit() * p, unit() * q}) == g;
      if (!ok) ++bad;
    }
    c.expect(bad == 0, "(c) gcd divides its inputs and ignores unit factors on 200 random pairs");
  }
  {
    bool ok = true;
    for (const auto& name : catalog_names()) {
      const PresentationMatrix m = M(name);
      for (std::size_t k = 0; k < 2; ++k) {
        const GroebnerBasis next = ag_invariant(m, k + 1, kOrder);
        for (const auto& g : elementary_ideal(m, k).generators)
          ok = ok && strong_reduce(pullback(g), next.elements, kOrder).is_zero();
      }
    }
    c.expect(ok, "(d) I_k is contained in I_{k+1} for k = 0, 1 on every catalog entry");
  }
  {
    bool ok = true;
    const std::pair<const char*, const char*> pairs[] = {{"2.1", "2.1-braid"}, {"kishino-like", "kishino-like-braid"}};
    for (const auto& [x, y] : pairs)
      for (std::size_t k = 0; k <= 2; ++k) ok = ok && ideals_agree(M(x), M(y), k);
    c.expect(ok, "(e) Gauss code and braid closure give equal ideals for 2.1 and kishino-like, k = 0..2");
  }
}

void criterion7(Checks& c) {
  c.expect(principal_polynomial(M("trefoil"), 0).is_zero(), "trefoil Delta_0^p = 0");
  c.expect(principal_polynomial(M("figure-eight"), 0).is_zero(), "figure-eight Delta_0^p = 0");
  // Independent value: a 2x2 minor of the classical Alexander matrix of the trefoil.
  const PresentationMatrix classical(std::vector<std::vector<LaurentPoly>>{
      {parse_laurent("1-t"), parse_laurent("t"), parse_laurent("-1")},
      {parse_laurent("-1"), parse_laurent("1-t"), parse_laurent("t")},
      {parse_laurent("t"), parse_laurent("-1"), parse_laurent("1-t")}});
  const LaurentPoly oracle_value = canonical_unit_form(minors(classical, 2).front());
  c.expect(oracle_value == C("t^2 - t + 1"), "classical matrix oracle gives t^2 - t + 1");
  c.expect(classical_alexander(catalog("trefoil")) == oracle_value, "classical_alexander(trefoil)");
  c.expect(principal_polynomial(M("unknot-kink"), 0).is_zero(), "kink Delta_0^p = 0");
  c.expect(principal_polynomial(M("unknot-kink"), 1) == parse_laurent("1"), "kink Delta_1^p = 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks, one line per criterion"};
  std::vector<int> known_failures;
  bool verbose = false;
  app.add_option("--known-failure", known_failures,
                 "Criterion expected to fail; the run still succeeds if it does, and fails if it passes");
  app.add_flag("-v,--verbose", verbose, "Print every sub-check");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<void(Checks&)> run;
  };
  double slowest_basis = 0;
  const std::vector<Criterion> criteria{
      {1, "example knot matrix, determinant, classical specialization", 1.0, criterion1},
      {2, "Delta_0^p for 2.1, k#1, k#2, miyazawa", 5.0, criterion2},
      {3, "Groebner bases against reference generator sets (each < 30 s)", 7 * 30.0,
       [&](Checks& c) { criterion3(c, slowest_basis); }},
      {4, "triviality pattern for kishino, 2.1, k#1, slavik, miyazawa", 60.0, criterion4},
      {5, "braid reversal on the four-strand braid and 5 random three-strand words", 60.0, criterion5},
      {6, "property suite", 120.0, criterion6},
      {7, "classical sanity", 5.0, criterion7},
  };

  int unexpected = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    checks.verbose = verbose;
    const auto start = Clock::now();
    try {
      cr.run(checks);
    } catch (const std::exception& e) {
      checks.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    if (secs >= cr.limit) checks.failures.push_back("time limit exceeded");
    const bool pass = checks.passed();
    const bool known = std::find(known_failures.begin(), known_failures.end(), cr.id) != known_failures.end();
    std::cout << "criterion " << cr.id << ": " << (pass ? "PASS" : "FAIL") << (known && !pass ? " (known)" : "")
              << "  " << cr.title << "  [" << std::fixed << std::setprecision(3) << secs << " s, limit "
              << std::setprecision(0) << cr.limit << " s]\n";
    if (cr.id == 3) {
      std::cout << std::setprecision(3) << "      slowest basis " << slowest_basis << " s\n";
    }
    for (const auto& f : checks.failures) std::cout << "      failed: " << f << '\n';
    if (cr.id == 3) criterion3_notes();
    if (pass == known) ++unexpected;
  }
  if (unexpected) std::cout << unexpected << " unexpected result(s)\n";
  return unexpected ? 1 : 0;
}
