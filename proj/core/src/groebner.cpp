#include "alexbq/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "alexbq/errors.hpp"
#include "alexbq/ideals.hpp"

namespace alexbq {

namespace {

struct Term {
  Monomial4 m;
  Integer c;
};

// Terms sorted ascending under the engine's order; back() is the leading term.
using OrderedPoly = std::vector<Term>;

bool divides(const Monomial4& a, const Monomial4& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial4 quotient(const Monomial4& a, const Monomial4& b) {
  Monomial4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial4 lcm(const Monomial4& a, const Monomial4& b) {
  Monomial4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Monomial4& a, const Monomial4& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

class Engine {
 public:
  explicit Engine(const TermOrder& order) : order_(order) { order_.validate(4); }

  bool less(const Monomial4& a, const Monomial4& b) const { return compare_monomials(a, b, order_) < 0; }

  OrderedPoly ordered(const Poly4& p) const {
    OrderedPoly r;
    r.reserve(p.size());
    for (const auto& [m, c] : p.terms()) r.push_back({m, c});
    std::sort(r.begin(), r.end(), [&](const Term& x, const Term& y) { return less(x.m, y.m); });
    return r;
  }

  static Poly4 plain(const OrderedPoly& p) {
    Poly4 r;
    for (const auto& t : p) r.add_term(t.m, t.c);
    return r;
  }

  // p - q * x^shift * g
  OrderedPoly sub_scaled(const OrderedPoly& p, const Integer& q, const Monomial4& shift, const OrderedPoly& g) const {
    OrderedPoly r;
    r.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        r.push_back(p[i++]);
        continue;
      }
      Monomial4 gm = Poly4::multiply(g[j].m, shift);
      if (i == p.size() || less(gm, p[i].m)) {
        r.push_back({gm, -q * g[j].c});
        ++j;
      } else if (less(p[i].m, gm)) {
        r.push_back(p[i++]);
      } else {
        Integer c = p[i].c - q * g[j].c;
        if (c != 0) r.push_back({gm, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  OrderedPoly add_scaled(OrderedPoly p, const Integer& q, const Monomial4& shift, const OrderedPoly& g) const {
    return sub_scaled(p, -q, shift, g);
  }

  // Full strong reduction; remainders are taken in [0, |lc|).
  OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis) const {
    OrderedPoly done;  // collected in descending order
    while (!p.empty()) {
      const Monomial4 m = p.back().m;
      const OrderedPoly* best = nullptr;
      for (const auto& g : basis) {
        if (g.empty() || !divides(g.back().m, m)) continue;
        if (!best || mpz_cmpabs(g.back().c.get_mpz_t(), best->back().c.get_mpz_t()) < 0) best = &g;
      }
      if (best) {
        const Integer& a = best->back().c;
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), p.back().c.get_mpz_t(), a.get_mpz_t());
        if (r < 0) r += abs(a);
        Integer q = (p.back().c - r) / a;
        if (q != 0) p = sub_scaled(p, q, quotient(m, best->back().m), *best);
      }
      if (!p.empty() && p.back().m == m) {
        done.push_back(std::move(p.back()));
        p.pop_back();
      }
    }
    std::reverse(done.begin(), done.end());
    return done;
  }

  static void normalize_sign(OrderedPoly& p) {
    if (!p.empty() && p.back().c < 0) {
      for (auto& t : p) t.c = -t.c;
    }
  }

  OrderedPoly s_poly(const OrderedPoly& f, const OrderedPoly& g) const {
    const auto& [mf, af] = f.back();
    const auto& [mg, ag] = g.back();
    Monomial4 L = lcm(mf, mg);
    Integer l;
    mpz_lcm(l.get_mpz_t(), af.get_mpz_t(), ag.get_mpz_t());
    OrderedPoly zero;
    OrderedPoly r = add_scaled(zero, Integer(l / af), quotient(L, mf), f);
    return sub_scaled(r, Integer(l / ag), quotient(L, mg), g);
  }

  std::optional<OrderedPoly> g_poly(const OrderedPoly& f, const OrderedPoly& g) const {
    const auto& [mf, af] = f.back();
    const auto& [mg, ag] = g.back();
    if (mpz_divisible_p(af.get_mpz_t(), ag.get_mpz_t()) || mpz_divisible_p(ag.get_mpz_t(), af.get_mpz_t())) {
      return std::nullopt;
    }
    Integer d, u, v;
    mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), af.get_mpz_t(), ag.get_mpz_t());
    Monomial4 L = lcm(mf, mg);
    OrderedPoly zero;
    OrderedPoly r = add_scaled(zero, u, quotient(L, mf), f);
    return add_scaled(r, v, quotient(L, mg), g);
  }

  const TermOrder& order() const { return order_; }

 private:
  TermOrder order_;
};

struct Pair {
  Monomial4 lcm;
  std::size_t i, j;
};

std::vector<OrderedPoly> compute_strong_basis(const Engine& eng, std::span<const Poly4> generators,
                                              const GroebnerBudget& budget) {
  std::vector<OrderedPoly> basis;
  auto later = [&](const Pair& x, const Pair& y) {
    if (eng.less(y.lcm, x.lcm)) return true;
    if (eng.less(x.lcm, y.lcm)) return false;
    return std::tie(x.j, x.i) > std::tie(y.j, y.i);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);

  auto add = [&](OrderedPoly h) {
    Engine::normalize_sign(h);
    if (basis.size() >= budget.max_basis_size) {
      throw BudgetExceeded("groebner: basis grew past " + std::to_string(budget.max_basis_size) + " elements");
    }
    basis.push_back(std::move(h));
    const std::size_t j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i) pairs.push({lcm(basis[i].back().m, basis[j].back().m), i, j});
  };

  for (const auto& g : generators) {
    OrderedPoly h = eng.reduce(eng.ordered(g), basis);
    if (!h.empty()) add(std::move(h));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    Pair p = pairs.top();
    pairs.pop();
    if (++processed > budget.max_pairs) {
      throw BudgetExceeded("groebner: more than " + std::to_string(budget.max_pairs) + " critical pairs");
    }
    // Copies: add() may reallocate the basis.
    const OrderedPoly f = basis[p.i];
    const OrderedPoly g = basis[p.j];

    Integer lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), f.back().c.get_mpz_t(), g.back().c.get_mpz_t());
    // Product criterion; sound over Z only when the leading coefficients are coprime.
    if (!(coprime(f.back().m, g.back().m) && lc_gcd == 1)) {
      OrderedPoly h = eng.reduce(eng.s_poly(f, g), basis);
      if (!h.empty()) add(std::move(h));
    }
    if (auto gp = eng.g_poly(f, g)) {
      OrderedPoly h = eng.reduce(std::move(*gp), basis);
      if (!h.empty()) add(std::move(h));
    }
  }
  return basis;
}

std::vector<OrderedPoly> reduce_basis(const Engine& eng, std::vector<OrderedPoly> basis) {
  std::stable_sort(basis.begin(), basis.end(), [&](const OrderedPoly& x, const OrderedPoly& y) {
    if (eng.less(x.back().m, y.back().m)) return true;
    if (eng.less(y.back().m, x.back().m)) return false;
    return mpz_cmpabs(x.back().c.get_mpz_t(), y.back().c.get_mpz_t()) < 0;
  });
  std::vector<OrderedPoly> kept;
  for (auto& g : basis) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const OrderedPoly& h) {
      return divides(h.back().m, g.back().m) && mpz_divisible_p(g.back().c.get_mpz_t(), h.back().c.get_mpz_t());
    });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::vector<OrderedPoly> out;
  out.reserve(kept.size());
  for (const auto& g : kept) {
    OrderedPoly tail(g.begin(), g.end() - 1);
    OrderedPoly r = eng.reduce(std::move(tail), kept);
    r.push_back(g.back());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<OrderedPoly> ordered_all(const Engine& eng, std::span<const Poly4> ps) {
  std::vector<OrderedPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    if (!p.is_zero()) out.push_back(eng.ordered(p));
  }
  return out;
}

}  // namespace

Poly4 strong_reduce(const Poly4& p, std::span<const Poly4> basis, const TermOrder& order) {
  Engine eng(order);
  return Engine::plain(eng.reduce(eng.ordered(p), ordered_all(eng, basis)));
}

Poly4 s_polynomial(const Poly4& f, const Poly4& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial: zero argument");
  Engine eng(order);
  return Engine::plain(eng.s_poly(eng.ordered(f), eng.ordered(g)));
}

std::optional<Poly4> g_polynomial(const Poly4& f, const Poly4& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("g_polynomial: zero argument");
  Engine eng(order);
  auto r = eng.g_poly(eng.ordered(f), eng.ordered(g));
  if (!r) return std::nullopt;
  return Engine::plain(*r);
}

GroebnerBasis buchberger(std::span<const Poly4> generators, const TermOrder& order, const GroebnerBudget& budget) {
  Engine eng(order);
  auto reduced = reduce_basis(eng, compute_strong_basis(eng, generators, budget));
  GroebnerBasis out{order, {}};
  out.elements.reserve(reduced.size());
  for (const auto& g : reduced) out.elements.push_back(Engine::plain(g));
  return out;
}

bool is_strong_groebner_basis(std::span<const Poly4> basis, const TermOrder& order) {
  Engine eng(order);
  auto g = ordered_all(eng, basis);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!eng.reduce(eng.s_poly(g[i], g[j]), g).empty()) return false;
      if (auto gp = eng.g_poly(g[i], g[j]); gp && !eng.reduce(std::move(*gp), g).empty()) return false;
    }
  }
  return true;
}

bool ideal_equal(std::span<const Poly4> a, std::span<const Poly4> b, const TermOrder& order,
                 const GroebnerBudget& budget) {
  GroebnerBasis ga = buchberger(a, order, budget);
  GroebnerBasis gb = buchberger(b, order, budget);
  auto all_reduce = [&](std::span<const Poly4> ps, const GroebnerBasis& g) {
    return std::all_of(ps.begin(), ps.end(),
                       [&](const Poly4& p) { return strong_reduce(p, g.elements, order).is_zero(); });
  };
  return all_reduce(a, gb) && all_reduce(b, ga);
}

GroebnerBasis ag_invariant(const PresentationMatrix& m, std::size_t k, const TermOrder& order,
                           const GroebnerBudget& budget) {
  return ag_invariant(elementary_ideal(m, k), order, budget);
}

GroebnerBasis ag_invariant(const ElementaryIdeal& ideal, const TermOrder& order, const GroebnerBudget& budget) {
  if (ideal.kind == IdealKind::whole_ring) return GroebnerBasis{order, {poly4::constant(1)}};

  // Units of the Laurent ring do not change the ideal, so each minor enters in
  // canonical unit form; duplicates are dropped.
  std::set<LaurentPoly::TermMap> seen;
  std::vector<Poly4> gens;
  for (const auto& g : ideal.generators) {
    LaurentPoly c = canonical_unit_form(g);
    if (seen.insert(c.terms()).second) gens.push_back(pullback(c));
  }
  std::sort(gens.begin(), gens.end(), [](const Poly4& x, const Poly4& y) { return x.size() < y.size(); });
  gens.push_back(poly4::t_relation());
  gens.push_back(poly4::s_relation());
  return buchberger(gens, order, budget);
}

std::size_t ag_cardinality(const GroebnerBasis& b) { return b.elements.size(); }

Poly4 ag_sum(const GroebnerBasis& b) {
  Poly4 sum;
  for (const auto& g : b.elements) sum += g;
  return sum;
}

Poly4 ag_max(const GroebnerBasis& b) {
  if (b.elements.empty()) return Poly4{};
  Engine eng(b.order);
  auto less_poly = [&](const Poly4& x, const Poly4& y) {
    OrderedPoly ox = eng.ordered(x), oy = eng.ordered(y);
    auto ix = ox.rbegin(), iy = oy.rbegin();
    for (; ix != ox.rend() && iy != oy.rend(); ++ix, ++iy) {
      if (eng.less(ix->m, iy->m)) return true;
      if (eng.less(iy->m, ix->m)) return false;
      if (ix->c != iy->c) return ix->c < iy->c;
    }
    return ix == ox.rend() && iy != oy.rend();
  };
  return *std::max_element(b.elements.begin(), b.elements.end(), less_poly);
}

}  // namespace alexbq
