#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zipk/checks.hpp"
#include "zipk/error.hpp"
#include "zipk/pipeline.hpp"

using namespace zipk;

namespace {

CocharacterDatum datum(const char* group, Weight mu, long p) { return {preset(group), std::move(mu), p}; }

/// x^{-p} (x^{p+1} - 1)(x^{p-1} - 1) = x^p + x^-p - x - x^-1.
LaurentPolynomial sl2_relation(long p) {
  auto f = LaurentPolynomial::monomial({p + 1}) - LaurentPolynomial::constant(1, 1);
  f = f * (LaurentPolynomial::monomial({p - 1}) - LaurentPolynomial::constant(1, 1));
  return f * LaurentPolynomial::monomial({-p});
}

bool reduces_to_zero(const TorusQuotient& t, const LaurentPolynomial& f) {
  return normal_form(to_torus_polynomial(f, t.ring), t.groebner).is_zero();
}

}  // namespace

TEST_CASE("SL2 quotients") {
  for (long p : {2L, 3L, 5L, 7L}) {
    INFO(p);
    const auto d = datum("SL2", {1}, p);
    const auto k = compute_k0(d);
    CHECK(k.module.finite);
    CHECK(k.module.rank == static_cast<std::size_t>(2 * p));
    CHECK(k.module.torsion.empty());

    const auto t = compute_k0_torus(d);
    const auto principal = strong_groebner(t.ring, {to_torus_polynomial(sl2_relation(p), t.ring)});
    CHECK(principal == t.groebner);
    CHECK(t.module.rank == static_cast<std::size_t>(2 * p));
  }
  // mu = 0: L = G, rank 2p / |W|
  const auto k = compute_k0(datum("SL2", {0}, 3));
  CHECK(k.levi.weyl.size() == 2);
  CHECK(k.module.rank == 3);
}

TEST_CASE("torus quotients follow the exponent rewriting") {
  for (const char* g : {"Gm", "Gm^2"}) {
    for (long p : {2L, 3L, 5L}) {
      INFO(g, " p=", p);
      const auto d = datum(g, Weight(preset(g).rank, 0), p);
      const auto t = compute_k0_torus(d);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < d.group.rank; ++i) expected *= static_cast<std::size_t>(p - 1);
      CHECK(t.module.finite);
      CHECK(t.module.rank == expected);
      CHECK(t.module.torsion.empty());
      std::mt19937_64 rng(p);
      std::uniform_int_distribution<int> c(-9, 9);
      for (int s = 0; s < 30; ++s) {
        Weight chi(d.group.rank);
        for (auto& x : chi) x = c(rng);
        const auto rep = oracle::torus_representative(chi, p);
        CHECK(reduces_to_zero(t, LaurentPolynomial::monomial(chi) - LaurentPolynomial::monomial(rep)));
      }
      const auto k = compute_k0(d);
      CHECK(k.module.rank == expected);
    }
  }
}

TEST_CASE("Kunneth relation") {
  struct Case {
    const char* group;
    Weight mu;
    long p;
  };
  for (const auto& c : std::vector<Case>{{"SL3", {1, 2}, 2},
                                         {"SL3", {1, 2}, 3},
                                         {"SL3", {0, 0}, 2},
                                         {"SL3", {1, 1}, 2},
                                         {"GL2", {1, 0}, 3},
                                         {"GL3", {1, 0, 0}, 2},
                                         {"Sp4", {1, 0}, 2},
                                         {"A1xA1", {1, 0}, 3}}) {
    INFO(c.group, " ", to_string(c.mu), " p=", c.p);
    const auto rep = kunneth_rank_check(datum(c.group, c.mu, c.p));
    CHECK(rep.status == CheckStatus::Pass);
  }
}

TEST_CASE("cocharacter with trivial Levi collapses to the torus") {
  const auto d = datum("SL3", {1, 1}, 3);
  const auto k = compute_k0(d);
  const auto t = compute_k0_torus(d);
  CHECK(k.levi.weyl.size() == 1);
  CHECK(k.module.rank == t.module.rank);
  CHECK(k.module.rank == 54);
}

TEST_CASE("relations map into the torus ideal") {
  for (const auto& [g, mu, p] : std::vector<std::tuple<const char*, Weight, long>>{
           {"SL3", {1, 2}, 2}, {"GL2", {1, 0}, 2}, {"Sp4", {0, 1}, 3}, {"SL2", {0}, 5}}) {
    INFO(g);
    const auto d = datum(g, mu, p);
    const auto k = compute_k0(d);
    const auto t = compute_k0_torus(d);
    for (const auto& r : k.syzygies) CHECK(expand(k.levi_ring, r).is_zero());
    for (const auto& r : k.frobenius_relations) CHECK(reduces_to_zero(t, expand(k.levi_ring, r)));
    for (const auto& r : k.groebner.generators) CHECK(reduces_to_zero(t, expand(k.levi_ring, r)));
    // the quotient is not the zero ring
    CHECK_FALSE(normal_form(Polynomial::constant(k.ring, 1), k.groebner).is_zero());
    CHECK_FALSE(normal_form(Polynomial::constant(t.ring, 1), t.groebner).is_zero());
  }
}

TEST_CASE("non-simply-connected groups are refused") {
  CHECK_THROWS_AS(compute_k0(datum("PGL2", {1}, 2)), ValidationError);
  CHECK_THROWS_AS(compute_k0(datum("SL2", {1}, 4)), ValidationError);
  CHECK_THROWS_AS(compute_k0(datum("SL2", {1, 0}, 2)), ValidationError);
}

TEST_CASE("twisted Frobenius is flagged") {
  auto d = datum("A1xA1", {1, 0}, 2);
  d.group.twist = LatticeMap(2, {0, 1, 1, 0});
  const auto k = compute_k0(d);
  CHECK(k.experimental);
  CHECK(k.module.finite);
  const auto t = compute_k0_torus(d);
  const auto theta = theta_map_check(d, t);
  CHECK(theta.untwisting_matches);
}

TEST_CASE("theta map") {
  for (const auto& [g, p] : std::vector<std::pair<const char*, long>>{{"SL2", 3}, {"SL3", 2}, {"GL2", 2}}) {
    INFO(g);
    const auto d = datum(g, Weight(preset(g).rank, 0), p);
    const auto rep = theta_map_check(d, compute_k0_torus(d));
    CHECK(rep.status == CheckStatus::Pass);
    CHECK(rep.untwisting_matches);
  }
  // e^chi - phi(e^chi) need not vanish for non-invariant chi
  const auto d = datum("SL2", {1}, 3);
  const auto t = compute_k0_torus(d);
  CHECK_FALSE(reduces_to_zero(t, LaurentPolynomial::monomial({1}) - LaurentPolynomial::monomial({3})));
}

TEST_CASE("counterexample module") {
  auto r = weyl_counterexample_demo(2);
  CHECK(r.invariants.to_string() == "Z/2 + Z/2");
  CHECK(r.image.to_string() == "Z/2");
  CHECK(r.excess);
  r = weyl_counterexample_demo(0);
  CHECK(r.invariants.to_string() == "Z");
  CHECK_FALSE(r.excess);
  CHECK_FALSE(weyl_counterexample_demo(3).excess);
  CHECK(weyl_counterexample_demo(4).excess);
}
