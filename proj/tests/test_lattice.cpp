#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zipk/lattice.hpp"

using namespace zipk;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 6) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_smith_diagonal(const IntegerMatrix& s) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return false;
      if (i == j) {
        if (s(i, j) < 0) return false;
        if (s(i, j) == 0) {
          zero_seen = true;
        } else {
          if (zero_seen || s(i, j) % prev != 0) return false;
          prev = s(i, j);
        }
      }
    }
  return true;
}

}  // namespace

TEST_CASE("smith form by hand") {
  const auto sf = smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}});
  CHECK(sf.S == IntegerMatrix{{2, 0}, {0, 4}});
  CHECK(sf.U * IntegerMatrix{{2, 4}, {6, 8}} * sf.V == sf.S);
  CHECK(abs(determinant(sf.U)) == 1);
  CHECK(abs(determinant(sf.V)) == 1);

  CHECK(cokernel_invariants(IntegerMatrix{{2, 0}, {0, 3}}) == IntegerVector{1, 6});
  CHECK(abelian_group(cokernel_invariants(IntegerMatrix{{4, 0}, {0, 6}, {0, 0}})).to_string() ==
        "Z + Z/2 + Z/12");
  CHECK(abelian_group(cokernel_invariants(IntegerMatrix{{1, 1}, {1, -1}})).to_string() == "Z/2");
}

TEST_CASE("smith form properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const auto m = random_matrix(rng, dim(rng), dim(rng));
    const auto sf = smith_normal_form(m);
    REQUIRE(sf.U * m * sf.V == sf.S);
    CHECK(abs(determinant(sf.U)) == 1);
    CHECK(abs(determinant(sf.V)) == 1);
    CHECK(is_smith_diagonal(sf.S));
    CHECK(rank(m) == rank(sf.S));
  }
}

TEST_CASE("cokernel is unchanged by redundant columns and row operations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 3, 3);
    const auto inv = cokernel_invariants(m);

    // append an integer combination of existing columns
    IntegerMatrix wider(3, 4);
    const int a = k(rng), b = k(rng);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) wider(i, j) = m(i, j);
      wider(i, 3) = a * m(i, 0) + b * m(i, 2);
    }
    CHECK(cokernel_invariants(wider) == inv);

    IntegerMatrix moved = m;
    moved.add_row_multiple(0, 2, k(rng));
    moved.swap_rows(1, 2);
    moved.add_col_multiple(1, 0, k(rng));
    CHECK(cokernel_invariants(moved) == inv);

    // square nonsingular: product of invariants is |det|
    const Integer det = determinant(m);
    if (det != 0) {
      Integer prod = 1;
      for (const auto& d : inv) prod *= d;
      CHECK(prod == abs(det));
    }
  }
}

TEST_CASE("diophantine solutions and kernels") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 2, 4, 5);
    IntegerVector x0(4);
    std::uniform_int_distribution<int> d(-5, 5);
    for (auto& x : x0) x = d(rng);
    const IntegerVector b = m * x0;
    const auto sol = solve_linear_diophantine(m, b);
    REQUIRE(sol);
    CHECK(m * sol->particular == b);
    CHECK(sol->kernel.size() == 4 - rank(m));
    for (const auto& k : sol->kernel) CHECK(m * k == IntegerVector(2, Integer(0)));
    CHECK(integer_kernel(m) == sol->kernel);
  }
  // 2x + 4y = 3 has no integral solution
  CHECK_FALSE(solve_linear_diophantine(IntegerMatrix{{2, 4}}, IntegerVector{3}));
}

TEST_CASE("hermite form is canonical") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 3, 3);
    const auto h = hermite_normal_form(m);
    CHECK(hermite_normal_form(h) == h);
    // a unimodular change of generators spans the same lattice
    IntegerMatrix g = m;
    g.add_row_multiple(1, 0, 2);
    g.add_row_multiple(2, 1, -3);
    g.swap_rows(0, 2);
    CHECK(hermite_normal_form(g) == h);
    std::vector<IntegerVector> rows;
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(m.row(i));
    rows.push_back(m.row(0));  // duplicate generator
    CHECK(lattice_basis(3, rows).size() == rank(m));
  }
}

TEST_CASE("rational solve") {
  std::vector<std::vector<Rational>> a = {{2, 1}, {1, 3}};
  const auto x = solve_rational(a, {Rational(5), Rational(10)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 3);
  std::vector<std::vector<Rational>> sing = {{1, 1}, {2, 2}};
  CHECK_FALSE(solve_rational(sing, {Rational(1), Rational(3)}));
}
