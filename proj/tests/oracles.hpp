#pragma once

// Reference computations that share nothing with the code under test beyond
// the basic containers: closed formulas, companion matrices, brute-force
// enumeration.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "zipk/grpalg.hpp"
#include "zipk/lattice.hpp"
#include "zipk/rootdata.hpp"

namespace oracle {

using zipk::Integer;
using zipk::IntegerMatrix;
using zipk::IntegerVector;
using zipk::operator*;
using zipk::operator+;
using zipk::operator-;

/// Coefficients low to high, trailing zeros stripped.
using Coeffs = std::vector<Integer>;

inline void strip(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

/// Remainder of f modulo a monic polynomial m.
inline Coeffs remainder_monic(Coeffs f, const Coeffs& m) {
  strip(f);
  const std::size_t d = m.size() - 1;
  while (f.size() > d) {
    const Integer lead = f.back();
    const std::size_t shift = f.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) f[shift + i] -= lead * m[i];
    strip(f);
  }
  f.resize(d, Integer(0));
  return f;
}

/// Z[x]/(m, g_1, ..., g_k) for monic m of degree d: cokernel of the d x kd
/// matrix of C^j (g_i mod m), C the companion matrix of m. Returns the
/// cokernel diagonal (zeros for free parts).
inline IntegerVector monic_quotient_invariants(const Coeffs& m, const std::vector<Coeffs>& others) {
  const std::size_t d = m.size() - 1;
  std::vector<IntegerVector> cols;
  for (const auto& g : others) {
    Coeffs r = remainder_monic(g, m);
    for (std::size_t j = 0; j < d; ++j) {
      cols.push_back(r);
      // multiply by x and reduce: shift up, subtract top * m
      Coeffs next(d, Integer(0));
      const Integer top = r[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) next[i] = r[i - 1];
      for (std::size_t i = 0; i < d; ++i) next[i] -= top * m[i];
      r = next;
    }
  }
  if (cols.empty()) return IntegerVector(d, Integer(0));
  return zipk::cokernel_invariants(IntegerMatrix::from_columns(d, cols));
}

/// Free rank and torsion (> 1) from a cokernel diagonal.
inline std::pair<std::size_t, std::vector<Integer>> split_invariants(const IntegerVector& inv) {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  for (const auto& x : inv) {
    if (x == 0)
      ++rank;
    else if (abs(x) > 1)
      torsion.push_back(abs(x));
  }
  return {rank, torsion};
}

/// All reduced words of every Weyl element, by peeling right descents.
inline std::vector<std::vector<std::vector<std::size_t>>> all_reduced_words(const zipk::RootDatum& rd,
                                                                          const zipk::WeylGroup& weyl) {
  std::vector<std::size_t> order(weyl.size());
  for (std::size_t i = 0; i < weyl.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return weyl.reduced_words[a].size() < weyl.reduced_words[b].size();
  });
  std::vector<std::vector<std::vector<std::size_t>>> words(weyl.size());
  for (auto i : order) {
    const auto len = weyl.reduced_words[i].size();
    if (len == 0) {
      words[i] = {{}};
      continue;
    }
    for (std::size_t j = 0; j < weyl.generators.size(); ++j) {
      const auto r = weyl.generators[j];
      const auto shorter = weyl.index_of(weyl.elements[i] * zipk::LatticeMap::reflection(rd.roots[r], rd.coroots[r]));
      if (!shorter || weyl.reduced_words[*shorter].size() + 1 != len) continue;
      for (auto w : words[*shorter]) {
        w.push_back(j);
        words[i].push_back(w);
      }
    }
  }
  return words;
}

/// delta(e^lambda) for a rank-one root alpha with n = <lambda, alpha^vee>:
/// e^lambda + ... + e^{lambda - n alpha} for n >= 0, zero for n = -1 and
/// -(e^{lambda + alpha} + ... + e^{lambda - (n + 1) alpha}) below.
inline zipk::LaurentPolynomial demazure_geometric(const zipk::Weight& lambda, const zipk::Weight& alpha,
                                                  std::int64_t n) {
  zipk::LaurentPolynomial out(lambda.size());
  if (n >= 0) {
    for (std::int64_t k = 0; k <= n; ++k) out.add_term(lambda - k * alpha, 1);
  } else {
    for (std::int64_t k = 1; k <= -n - 1; ++k) out.add_term(lambda + k * alpha, -1);
  }
  return out;
}

/// dim V(a omega_1 + b omega_2) for SL3.
inline long sl3_dimension(long a, long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

/// Exponent vector modulo p - 1, the canonical representative of e^chi in
/// Z[X]/(e^chi - e^{p chi}).
inline zipk::Weight torus_representative(const zipk::Weight& chi, long p) {
  zipk::Weight r(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const long m = p - 1;
    r[i] = ((chi[i] % m) + m) % m;
  }
  return r;
}

inline zipk::LaurentPolynomial random_element(std::mt19937_64& rng, std::size_t rank, int terms = 4,
                                              int bound = 3) {
  std::uniform_int_distribution<int> e(-bound, bound), c(-4, 4);
  zipk::LaurentPolynomial f(rank);
  for (int t = 0; t < terms; ++t) {
    zipk::Weight w(rank);
    for (auto& x : w) x = e(rng);
    f.add_term(w, c(rng));
  }
  return f;
}

}  // namespace oracle
