#include "zipk/checks.hpp"

#include <future>
#include <random>
#include <set>

#include "zipk/error.hpp"

namespace zipk {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

KunnethReport kunneth_rank_check(const K0Presentation& levi_side, const TorusQuotient& torus_side) {
  KunnethReport rep;
  rep.levi_weyl_order = levi_side.levi.weyl.size();
  if (!levi_side.module.finite || !torus_side.module.finite) {
    rep.note = "a quotient is not finitely generated over Z";
    return rep;
  }
  rep.torus_rank = torus_side.module.rank;
  rep.levi_rank = levi_side.module.rank;
  rep.status = *rep.torus_rank == rep.levi_weyl_order * *rep.levi_rank ? CheckStatus::Pass
                                                                       : CheckStatus::Fail;
  if (!levi_side.module.torsion.empty() || !torus_side.module.torsion.empty())
    rep.note = "torsion present";
  return rep;
}

KunnethReport kunneth_rank_check(const CocharacterDatum& datum, const GroebnerOptions& options) {
  auto torus = std::async(std::launch::async, [&] { return compute_k0_torus(datum, options); });
  const K0Presentation levi = compute_k0(datum, options);
  return kunneth_rank_check(levi, torus.get());
}

// ---------------------------------------------------------------------------

namespace {

LaurentPolynomial phi(const CocharacterDatum& d, const LaurentPolynomial& f) {
  return frobenius(f, d.p, d.group.twist);
}

bool in_ideal(const TorusQuotient& t, const LaurentPolynomial& f) {
  return normal_form(to_torus_polynomial(f, t.ring), t.groebner).is_zero();
}

bool untwisting_matches(const CocharacterDatum& datum, const InvariantRing& group_ring,
                        const TorusQuotient& torus_side, const GroebnerOptions& options) {
  const RootDatum& rd = datum.group;
  const std::size_t n = rd.rank;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const char* v : {"z", "x"}) {
    const std::size_t base = names.size();
    for (std::size_t i = 0; i < n; ++i) names.push_back(v + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(v + std::to_string(i + 1) + "_inv");
      pairs.emplace_back(base + i, base + n + i);
    }
  }
  if (names.size() > kMaxVariables) throw ResourceError("too many variables for the untwisting ring");
  const RingPtr big = make_ring(std::move(names), MonomialOrder::block({2 * n, 2 * n}), std::move(pairs));

  std::vector<Polynomial> gens;
  for (const auto& m : group_ring.elements)
    gens.push_back(to_torus_polynomial(m, big, 2 * n) - to_torus_polynomial(m, big, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Weight e(n, 0);
    e[i] = 1;
    for (const Weight& chi : {e, -e}) {
      const auto z = LaurentPolynomial::monomial(chi);
      gens.push_back(to_torus_polynomial(z, big, 0) - to_torus_polynomial(phi(datum, z), big, 2 * n));
    }
  }
  const GroebnerBasis el = eliminate(strong_groebner(big, gens, options), 2 * n);
  std::vector<std::size_t> var_map(4 * n, 0);
  for (std::size_t k = 0; k < 2 * n; ++k) var_map[2 * n + k] = k;
  std::vector<Polynomial> moved;
  for (const auto& g : el.generators) moved.push_back(change_ring(g, torus_side.ring, var_map));
  return strong_groebner(torus_side.ring, moved, options) == torus_side.groebner;
}

}  // namespace

ThetaReport theta_map_check(const CocharacterDatum& datum, const TorusQuotient& torus_side,
                            std::size_t samples, std::uint64_t seed, const GroebnerOptions& options) {
  const RootDatum& rd = datum.group;
  const auto group_ring = invariant_ring(rd, full_levi(rd));
  ThetaReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, group_ring.size() - 1);

  auto record = [&](std::string kind, const LaurentPolynomial& c, std::optional<bool> expected) {
    ThetaSample s;
    s.kind = std::move(kind);
    s.element = c.to_string();
    s.reduces_to_zero = in_ideal(torus_side, c - phi(datum, c));
    s.expected = expected;
    if (expected && *expected != s.reduces_to_zero) ++rep.failures;
    rep.samples.push_back(std::move(s));
  };

  for (std::size_t k = 0; k < samples && group_ring.size() > 0; ++k) {
    LaurentPolynomial c = LaurentPolynomial::constant(rd.rank, coeff(rng));
    for (int t = 0; t < 2; ++t) {
      const std::size_t i = pick(rng), j = pick(rng);
      c += group_ring.elements[i] * group_ring.elements[j] * Integer(coeff(rng));
    }
    record("invariant", c, true);
  }
  for (const auto& [pos, neg] : group_ring.inverse_pairs) {
    record("central", LaurentPolynomial::monomial(group_ring.weights[pos]), true);
    record("central", LaurentPolynomial::monomial(group_ring.weights[neg]), true);
  }
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  std::set<Weight> seen;
  for (std::size_t k = 0, tries = 0; k < samples && tries < 50 * samples; ++tries) {
    Weight chi(rd.rank);
    for (auto& x : chi) x = coord(rng);
    if (orbit(group_ring.weyl, chi).size() == 1 || !seen.insert(chi).second) continue;
    record("character", LaurentPolynomial::monomial(chi), std::nullopt);
    ++k;
  }

  rep.untwisting_matches = untwisting_matches(datum, group_ring, torus_side, options);
  if (!rep.untwisting_matches) ++rep.failures;
  rep.status = rep.failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

// ---------------------------------------------------------------------------

HeckeReport hecke_check(const RootDatum& rd, long window) {
  HeckeReport rep;
  rep.window = window;
  const WeylGroup weyl = weyl_enumerate(rd);
  rep.hecke = hecke_invariants_window(rd, rd.simple_roots, window);
  rep.weyl = weyl_invariants_window(rd, weyl, window);

  // Products of pointed generators, times every central character that
  // moves them into the window. Pairings with simple coroots bound the
  // pointed degree; supports only widen under multiplication.
  const auto ring = invariant_ring(rd, full_levi(rd));
  std::vector<std::size_t> pointed;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    bool central = false;
    for (const auto& [a, b] : ring.inverse_pairs) central = central || a == i || b == i;
    if (!central) pointed.push_back(i);
  }
  std::int64_t budget = 0;
  for (std::size_t s : rd.simple_roots)
    for (auto c : rd.coroots[s]) budget += window * std::llabs(c);
  std::vector<std::int64_t> cost;
  for (std::size_t i : pointed) {
    std::int64_t c = 0;
    for (std::size_t s : rd.simple_roots) c += pairing(ring.weights[i], rd.coroots[s]);
    cost.push_back(c);
  }
  std::vector<LaurentPolynomial> products;
  auto extent = [&](const LaurentPolynomial& f, std::vector<std::int64_t>& lo,
                    std::vector<std::int64_t>& hi) {
    lo = f.terms().begin()->first;
    hi = lo;
    for (const auto& [w, c] : f.terms())
      for (std::size_t i = 0; i < rd.rank; ++i) {
        lo[i] = std::min(lo[i], w[i]);
        hi[i] = std::max(hi[i], w[i]);
      }
  };
  auto emit = [&](const LaurentPolynomial& f) {
    std::vector<std::int64_t> lo, hi;
    extent(f, lo, hi);
    for (std::size_t i = 0; i < rd.rank; ++i)
      if (hi[i] - lo[i] > 2 * window) return;
    // Admissible translations form a box; keep its central points.
    Weight c(rd.rank);
    for (std::size_t i = 0; i < rd.rank; ++i) c[i] = -window - lo[i];
    for (;;) {
      bool central = true;
      for (std::size_t s : rd.simple_roots) central = central && pairing(c, rd.coroots[s]) == 0;
      if (central) products.push_back(f * LaurentPolynomial::monomial(c));
      std::size_t i = 0;
      while (i < rd.rank && c[i] == window - hi[i]) {
        c[i] = -window - lo[i];
        ++i;
      }
      if (i == rd.rank) break;
      ++c[i];
    }
  };
  auto narrow = [&](const LaurentPolynomial& f) {
    std::vector<std::int64_t> lo, hi;
    extent(f, lo, hi);
    for (std::size_t i = 0; i < rd.rank; ++i)
      if (hi[i] - lo[i] > 2 * window) return false;
    return true;
  };
  auto walk = [&](auto&& self, const LaurentPolynomial& f, std::size_t from, std::int64_t spent) -> void {
    emit(f);
    for (std::size_t k = from; k < pointed.size(); ++k) {
      if (spent + cost[k] > budget) continue;
      LaurentPolynomial g = f * ring.elements[pointed[k]];
      if (narrow(g)) self(self, g, k, spent + cost[k]);
    }
  };
  walk(walk, LaurentPolynomial::constant(rd.rank, 1), 0, 0);
  rep.span = window_span(rd.rank, window, products);
  rep.status = rep.hecke == rep.weyl && rep.weyl == rep.span ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

// ---------------------------------------------------------------------------

CounterexampleReport weyl_counterexample_demo(const Integer& modulus, const Integer& action) {
  if (modulus < 0) throw ParseError("module modulus must be non-negative");
  CounterexampleReport rep;
  rep.modulus = modulus;
  rep.action = action;

  // Lifts (a, b) in Z^2 of invariants: (action*b, -2b) in modulus*Z^2.
  IntegerMatrix k(2, 4);
  k(0, 1) = action;
  k(0, 2) = -modulus;
  k(1, 1) = -2;
  k(1, 3) = -modulus;
  std::vector<IntegerVector> lifts;
  for (const auto& v : integer_kernel(k)) lifts.push_back({v[0], v[1]});
  const auto basis = lattice_basis(2, lifts);

  // Invariants = lifts / modulus*Z^2: coordinates of modulus*e_i in the basis.
  std::vector<std::vector<Rational>> bt(2, std::vector<Rational>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t r = 0; r < 2; ++r) bt[r][j] = basis[j][r];
  IntegerMatrix rel(basis.size(), 2);
  for (std::size_t i = 0; i < 2; ++i) {
    IntegerVector target(2, Integer(0));
    target[i] = modulus;
    const auto x = solve_rational(bt, std::vector<Rational>(target.begin(), target.end()));
    if (!x) throw InternalError("modulus lattice not contained in the invariant lifts");
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((*x)[j].get_den() != 1) throw InternalError("non-integral lattice coordinates");
      rel(j, i) = (*x)[j].get_num();
    }
  }
  rep.invariants = abelian_group(cokernel_invariants(rel));
  rep.image = abelian_group(IntegerVector{modulus});

  // Excess iff some invariant has b outside modulus*Z.
  for (const auto& v : basis) {
    const bool b_in_image = modulus == 0 ? v[1] == 0 : mpz_divisible_p(v[1].get_mpz_t(), modulus.get_mpz_t()) != 0;
    if (!b_in_image) rep.excess = true;
  }
  return rep;
}

}  // namespace zipk
