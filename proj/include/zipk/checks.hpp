#pragma once

// Structural cross-checks of the K_0 computation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zipk/grpalg.hpp"
#include "zipk/lattice.hpp"
#include "zipk/pipeline.hpp"

namespace zipk {

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

struct KunnethReport {
  CheckStatus status = CheckStatus::Inconclusive;
  std::size_t levi_weyl_order = 0;
  std::optional<std::size_t> torus_rank;
  std::optional<std::size_t> levi_rank;
  std::string note;
};

/// rank R(T)/IR(T) = |W_L| * rank R(L)/IR(L).
KunnethReport kunneth_rank_check(const K0Presentation& levi_side, const TorusQuotient& torus_side);
/// Computes both sides concurrently.
KunnethReport kunneth_rank_check(const CocharacterDatum& datum, const GroebnerOptions& options = {});

struct ThetaSample {
  std::string kind;  // "invariant", "central", "character"
  std::string element;
  bool reduces_to_zero = false;
  std::optional<bool> expected;  // nullopt: no prediction
};

struct ThetaReport {
  CheckStatus status = CheckStatus::Inconclusive;
  std::vector<ThetaSample> samples;
  bool untwisting_matches = false;  // elimination through the two-sided ring
  std::size_t failures = 0;
};

/// In R(T)/IR(T): c - phi(c) vanishes for sampled invariants c and central
/// characters; e^chi - phi(e^chi) is reported for non-invariant chi. The
/// ideal is also recomputed by eliminating z from
/// (m_lambda(x) - m_lambda(z), z - phi(x)) and compared with IR(T).
ThetaReport theta_map_check(const CocharacterDatum& datum, const TorusQuotient& torus_side,
                            std::size_t samples = 8, std::uint64_t seed = 1,
                            const GroebnerOptions& options = {});

struct HeckeReport {
  long window = 0;
  WindowLattice hecke;   // annihilated by delta_alpha - 1 and s_alpha - 1
  WindowLattice weyl;    // W-invariants
  WindowLattice span;    // products of R(G) generators inside the window
  CheckStatus status = CheckStatus::Inconclusive;
};

HeckeReport hecke_check(const RootDatum& rd, long window);

struct CounterexampleReport {
  Integer modulus;  // M = Z/modulus, 0 for Z
  Integer action;   // scalar by which x + x^-1 acts on M
  AbelianGroup invariants;
  AbelianGroup image;
  bool excess = false;
};

/// M (x)_{R(G)} R(T) = M + M x for SL2 with s(a + b x) = (a + action*b) - b x;
/// compares the W-invariants with the image of M.
CounterexampleReport weyl_counterexample_demo(const Integer& modulus, const Integer& action = 2);

}  // namespace zipk
