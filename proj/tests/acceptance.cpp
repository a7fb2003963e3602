// One PASS/FAIL line per acceptance criterion. Every comparison is exact
// (integer ranks, module invariants, polynomial equality, byte equality);
// no floating-point tolerance is involved anywhere.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "zipk/checks.hpp"
#include "zipk/error.hpp"
#include "zipk/pipeline.hpp"
#include "zipk/report.hpp"

using namespace zipk;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

LaurentPolynomial e(const Weight& w) { return LaurentPolynomial::monomial(w); }

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(ZIPK_BINARY) + " " + args;
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
  }
  return out;
}

void sl2_golden(Outcome& o) {
  for (long p : {2L, 3L, 5L}) {
    const CocharacterDatum d{preset("SL2"), {1}, p};
    const auto k = compute_k0(d);
    o.require(k.module.finite && k.module.rank == static_cast<std::size_t>(2 * p) && k.module.torsion.empty(),
              "rank 2p for p=" + std::to_string(p));
    const auto t = compute_k0_torus(d);
    // (x^{p+1} - 1)(x^{p-1} - 1), an associate in the Laurent ring
    const auto f = (e({p + 1}) - e({0})) * (e({p - 1}) - e({0}));
    o.require(strong_groebner(t.ring, {to_torus_polynomial(f, t.ring)}) == t.groebner,
              "principal generator for p=" + std::to_string(p));
    o.detail << " p=" << p << ":Z^" << k.module.rank;
  }
}

void torus_golden(Outcome& o) {
  for (const char* g : {"Gm", "Gm^2"}) {
    for (long p : {2L, 3L, 5L}) {
      const auto rd = preset(g);
      const CocharacterDatum d{rd, Weight(rd.rank, 0), p};
      const auto k = compute_k0(d);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < rd.rank; ++i) expected *= static_cast<std::size_t>(p - 1);
      o.require(k.module.finite && k.module.rank == expected && k.module.torsion.empty(),
                std::string(g) + " p=" + std::to_string(p));
      const auto t = compute_k0_torus(d);
      std::mt19937_64 rng(static_cast<std::uint64_t>(p));
      std::uniform_int_distribution<int> c(-9, 9);
      for (int s = 0; s < 20; ++s) {
        Weight chi(rd.rank);
        for (auto& x : chi) x = c(rng);
        const auto diff = e(chi) - e(oracle::torus_representative(chi, p));
        o.require(normal_form(to_torus_polynomial(diff, t.ring), t.groebner).is_zero(), "rewriting oracle");
      }
    }
  }
  o.detail << " 6 cases";
}

void kunneth(Outcome& o) {
  for (long p : {2L, 3L}) {
    const CocharacterDatum d{preset("SL3"), {1, 2}, p};
    const auto r = kunneth_rank_check(d);
    o.require(r.levi_weyl_order == 2, "|W_L| = 2");
    o.require(r.status == CheckStatus::Pass && r.torus_rank && r.levi_rank &&
                  *r.torus_rank == 2 * *r.levi_rank,
              "rank_T = 2 rank_L for p=" + std::to_string(p));
    if (r.torus_rank && r.levi_rank) o.detail << " p=" << p << ":" << *r.torus_rank << "=2*" << *r.levi_rank;
  }
}

void oracle_agreement(Outcome& o) {
  const auto ring = make_ring({"x"});
  auto as_poly = [&](const oracle::Coeffs& c) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::uint32_t ex = static_cast<std::uint32_t>(i);
      ts.push_back({Monomial::from_exponents(std::span(&ex, 1)), c[i]});
    }
    return Polynomial::from_terms(ring, std::move(ts));
  };
  auto mul = [](const oracle::Coeffs& f, const oracle::Coeffs& g) {
    oracle::Coeffs out(f.size() + g.size() - 1, Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
  };
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(0, 4), c(-5, 5), mod(2, 12);
  auto monic = [&](int d) {
    oracle::Coeffs f(static_cast<std::size_t>(d) + 1);
    for (auto& x : f) x = c(rng);
    f.back() = 1;
    return f;
  };
  int cases = 0, mismatches = 0;
  for (int t = 0; t < 300; ++t) {
    oracle::Coeffs m;
    std::vector<oracle::Coeffs> others;
    switch (t % 3) {
      case 0:
        m = monic(deg(rng) + 1);
        break;
      case 1:
        m = monic(deg(rng) + 1);
        others.push_back(mul(monic(deg(rng)), {Integer(mod(rng))}));
        others.push_back({Integer(mod(rng))});
        break;
      default: {
        const auto a = monic(deg(rng) % 3), b = monic(deg(rng) % 3 + 1);
        m = mul(a, b);
        others.push_back(mul(mul(a, monic(deg(rng) % 2)), {Integer(mod(rng))}));
      }
    }
    const auto [rank, torsion] = oracle::split_invariants(oracle::monic_quotient_invariants(m, others));
    std::vector<Polynomial> gens{as_poly(m)};
    for (const auto& g : others) gens.push_back(as_poly(g));
    const auto q = quotient_z_module(strong_groebner(ring, gens));
    ++cases;
    if (!q.finite || q.rank != rank || q.torsion != torsion) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail << " " << cases << " ideals";
}

void word_independence(Outcome& o) {
  for (const char* g : {"SL3", "Sp4"}) {
    const auto rd = preset(g);
    const auto weyl = weyl_enumerate(rd);
    const auto words = oracle::all_reduced_words(rd, weyl);
    std::mt19937_64 rng(5);
    std::size_t comparisons = 0;
    for (int t = 0; t < 100; ++t) {
      const auto f = oracle::random_element(rng, rd.rank);
      for (std::size_t w = 0; w < weyl.size(); ++w) {
        const auto ref = demazure_word(rd, weyl, words[w].front(), f);
        for (const auto& word : words[w]) {
          o.require(demazure_word(rd, weyl, word, f) == ref, std::string(g) + " word mismatch");
          ++comparisons;
        }
      }
    }
    o.detail << " " << g << ":" << comparisons;
  }
}

void demazure_characters(Outcome& o) {
  const auto rd = preset("SL3");
  const auto weyl = weyl_enumerate(rd);
  const std::vector<Weight> weights = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0},
                                       {0, 2}, {2, 1}, {1, 2}, {3, 0}, {2, 2}};
  for (const auto& w : weights) {
    const auto dim = demazure_character(rd, weyl, w).evaluate_at_one();
    o.require(dim == oracle::sl3_dimension(w[0], w[1]), "dimension of " + to_string(w));
  }
  o.detail << " 10 weights";
}

void hecke(Outcome& o) {
  for (const auto& [g, window] : std::vector<std::pair<const char*, long>>{{"SL2", 6}, {"SL3", 2}}) {
    const auto r = hecke_check(preset(g), window);
    o.require(r.status == CheckStatus::Pass, std::string(g) + " modules differ");
    o.detail << " " << g << ":rank " << r.weyl.rank();
  }
}

void counterexample(Outcome& o) {
  const auto r = weyl_counterexample_demo(2);
  const auto order = [](const AbelianGroup& a) {
    Integer n = 1;
    for (const auto& t : a.torsion) n *= t;
    return a.free_rank == 0 ? n : Integer(0);
  };
  o.require(order(r.invariants) == 4 && order(r.image) == 2 && r.excess, "Z/2 case");
  o.require(!weyl_counterexample_demo(0).excess, "torsion-free M");
  o.detail << " invariants " << r.invariants.to_string() << " vs image " << r.image.to_string();
}

void simply_connected_gate(Outcome& o) {
  for (const char* g : {"SL2", "SL3", "SL4", "Sp4", "GL2", "GL3"}) {
    try {
      require_simply_connected(preset(g));
    } catch (const ValidationError&) {
      o.require(false, std::string(g) + " rejected");
    }
  }
  try {
    require_simply_connected(preset("PGL2"));
    o.require(false, "PGL2 accepted");
  } catch (const ValidationError& e) {
    o.require(e.kind() == ValidationError::Kind::NotSimplyConnected &&
                  std::string(e.what()).find("Z/2") != std::string::npos,
              "PGL2 message names Z/2");
    o.detail << " PGL2: " << e.what();
  }
}

void steinberg(Outcome& o) {
  const auto sl2 = preset("SL2");
  const auto w2 = weyl_enumerate(sl2);
  o.require(steinberg_freeness_check(sl2, w2, {{0}, {1}}, 6).passed(), "SL2 basis {1, x}");
  const auto c2 = steinberg_candidates(sl2, w2);
  o.require(c2 && steinberg_freeness_check(sl2, w2, *c2, 6).passed(), "SL2 candidates");
  const auto sl3 = preset("SL3");
  const auto w3 = weyl_enumerate(sl3);
  const auto c3 = steinberg_candidates(sl3, w3);
  o.require(c3.has_value(), "SL3 candidates exist");
  if (c3) {
    const auto r = steinberg_freeness_check(sl3, w3, *c3, 2);
    o.require(r.independent, "SL3 determinants nonzero");
    o.require(r.spanning, "SL3 window spanning");
    o.detail << " SL3: " << r.candidates.size() << " candidates, " << r.monomials_checked << " monomials";
  }
}

void determinism(Outcome& o) {
  JobSpec job;
  job.preset = "SL3";
  job.mu = Weight{1, 2};
  job.p = 2;
  job.checks = std::vector<std::string>{"kunneth", "theta"};
  const auto a = run_job("k0", job).dump(2);
  const auto b = run_job("k0", job).dump(2);
  o.require(a == b, "in-process runs differ");
  const auto x = run_binary("k0 --group SL3 --mu 1,2 --p 2 --checks kunneth,theta");
  const auto y = run_binary("k0 --group SL3 --mu 1,2 --p 2 --checks kunneth,theta");
  o.require(!x.empty() && x == y, "binary runs differ");
  o.require(x == a + "\n", "binary and library reports differ");
  o.detail << " " << x.size() << " bytes";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"SL2 golden result", sl2_golden},
      {"torus golden result", torus_golden},
      {"Kunneth rank relation for SL3", kunneth},
      {"quotient module vs brute-force oracle", oracle_agreement},
      {"Demazure word independence (A2, B2)", word_independence},
      {"Demazure characters vs Weyl dimension", demazure_characters},
      {"Hecke invariants at a point", hecke},
      {"counterexample reproduction", counterexample},
      {"simply-connectedness gate", simply_connected_gate},
      {"Steinberg freeness evidence", steinberg},
      {"deterministic k0 report", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ":"
              << o.detail.str() << '\n';
  }
  return failed == 0 ? 0 : 1;
}
