#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zipk/error.hpp"
#include "zipk/invariants.hpp"

using namespace zipk;

namespace {

std::vector<std::string> element_strings(const InvariantRing& r) {
  std::vector<std::string> out;
  for (const auto& e : r.elements) out.push_back(e.to_string());
  return out;
}

// Random invariant: integer combination of orbit sums of small dominant weights.
LaurentPolynomial random_invariant(const RootDatum& rd, const InvariantRing& ring, std::mt19937& gen) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  LaurentPolynomial f(rd.rank);
  for (const auto& w : window_points(rd.rank, 2)) {
    if (!is_dominant(rd, ring.simple, w)) continue;
    if (const int c = coeff(gen); c != 0) f += orbit_sum(ring.weyl, w) * Integer(c);
  }
  return f;
}

}  // namespace

TEST_CASE("SL2 generators") {
  const auto rd = preset("SL2");
  const auto g = invariant_ring(rd, full_levi(rd));
  CHECK(element_strings(g) == std::vector<std::string>{"x + x^-1"});
  const auto t = invariant_ring(rd, levi_from_cocharacter(rd, {1}), "x");
  CHECK(element_strings(t) == std::vector<std::string>{"x", "x^-1"});
  CHECK(t.names == std::vector<std::string>{"x1", "x1_inv"});
}

TEST_CASE("GL2 generators") {
  const auto rd = preset("GL2");
  const auto g = invariant_ring(rd, full_levi(rd));
  CHECK(element_strings(g) == std::vector<std::string>{"x + y", "x*y", "x^-1*y^-1"});
  CHECK(g.names == std::vector<std::string>{"y1", "y2", "y2_inv"});
}

TEST_CASE("express SL2 invariants") {
  const auto rd = preset("SL2");
  const auto g = invariant_ring(rd, full_levi(rd));
  auto sq = LaurentPolynomial::monomial({2}) + LaurentPolynomial::constant(1, 2) +
            LaurentPolynomial::monomial({-2});
  CHECK(express_invariant(g, sq).to_string() == "y1^2");
  sq -= LaurentPolynomial::constant(1, 1);
  CHECK(express_invariant(g, sq).to_string() == "y1^2 - 1");
  CHECK(express_invariant(g, LaurentPolynomial::constant(1, 1)).to_string() == "1");
  CHECK_THROWS_AS(express_invariant(g, LaurentPolynomial::monomial({1})), ValidationError);
}

TEST_CASE("express round trip") {
  std::mt19937 gen(7);
  for (const char* name : {"SL2", "SL3", "GL2", "GL3", "Sp4", "Gm^2", "A1xA1"}) {
    const auto rd = preset(name);
    const auto levi = full_levi(rd);
    const auto ring = invariant_ring(rd, levi);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_invariant(rd, ring, gen);
      CHECK(expand(ring, express_invariant(ring, f)) == f);
    }
  }
}

TEST_CASE("restriction GL3") {
  const auto rd = preset("GL3");
  const auto w = weyl_enumerate(rd);
  const auto levi = levi_from_cocharacter(rd, {1, 1, 0});
  const auto r = restrict_to_levi(rd, w, {1, 0, 0}, levi);
  CHECK(r.levi_dominant == std::vector<Weight>{{0, 0, 1}, {1, 0, 0}});
  CHECK(r.orbit_sizes == std::vector<std::size_t>{1, 2});
}

TEST_CASE("Frobenius generators") {
  const auto rd = preset("SL2");
  const auto g = invariant_ring(rd, full_levi(rd));
  const auto gens = frobenius_ideal_generators(rd, g, 3);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].element.to_string() == "-x^3 + x + x^-1 - x^-3");
  CHECK_THROWS_AS(frobenius_ideal_generators(preset("PGL2"), invariant_ring(preset("PGL2"), full_levi(preset("PGL2"))), 3),
                  ValidationError);
}

TEST_CASE("Steinberg") {
  const auto rd = preset("SL2");
  const auto w = weyl_enumerate(rd);
  auto rep = steinberg_freeness_check(rd, w, {{0}, {1}}, 4);
  CHECK(rep.passed());
  rep = steinberg_freeness_check(rd, w, {{0}, {0}}, 4);
  CHECK_FALSE(rep.independent);
  const auto rd3 = preset("SL3");
  const auto w3 = weyl_enumerate(rd3);
  const auto cand = steinberg_candidates(rd3, w3);
  REQUIRE(cand);
  rep = steinberg_freeness_check(rd3, w3, *cand, 2);
  CHECK(rep.independent);
  CHECK(rep.spanning);
}
