#pragma once

// Presentations of invariant rings Z[X*(T)]^W for W the Weyl group of G or of
// a Levi subgroup, and the Frobenius ideal generators built from them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zipk/grpalg.hpp"
#include "zipk/polynomial.hpp"
#include "zipk/rootdata.hpp"

namespace zipk {

/// Orbit sums of the dominant Hilbert basis. Central generators come in
/// (+v, -v) pairs that are marked as mutual inverses.
struct InvariantRing {
  std::vector<std::size_t> simple;  // simple roots of the acting group
  std::vector<Weight> simple_coroots;
  Weight two_rho_check;  // sum of the positive coroots
  WeylGroup weyl;
  std::vector<Weight> weights;
  std::vector<LaurentPolynomial> elements;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs;

  std::size_t size() const noexcept { return weights.size(); }
  /// Generators m - |W.lambda| of the augmentation ideal.
  std::vector<LaurentPolynomial> augmentation_generators() const;
  /// Polynomial ring on `names` with the inverse pairs, graded reverse lex.
  RingPtr polynomial_ring() const;
};

/// `prefix` names the generators prefix1, prefix2, ... and prefixK_inv.
InvariantRing invariant_ring(const RootDatum& rd, const LeviDatum& levi,
                             const std::string& prefix = "y");

/// Substitutes the generator elements for the variables of `f`.
LaurentPolynomial expand(const InvariantRing& ring, const Polynomial& f);

/// A polynomial in the generators whose expansion is f. Throws
/// ValidationError(NotInvariant) when f is not fixed by ring.weyl.
Polynomial express_invariant(const InvariantRing& ring, const RingPtr& target,
                             const LaurentPolynomial& f);
Polynomial express_invariant(const InvariantRing& ring, const LaurentPolynomial& f);

/// The ring's generators whose product has top weight lambda, as exponents
/// (inverse variables used for negative central coefficients). nullopt when
/// lambda is not dominant for ring.simple.
std::optional<std::vector<std::uint32_t>> decompose_dominant(const InvariantRing& ring,
                                                             const Weight& lambda);

struct Restriction {
  LaurentPolynomial element;            // the G-orbit sum
  std::vector<Weight> levi_dominant;    // one L-dominant weight per L-orbit
  std::vector<std::size_t> orbit_sizes;
};

/// Splits the W-orbit of lambda into W_L-orbits.
Restriction restrict_to_levi(const RootDatum& rd, const WeylGroup& group_weyl,
                             const Weight& lambda, const LeviDatum& levi);

/// phi(e^chi) = e^{p * twist(chi)}.
struct FrobeniusGenerator {
  Weight lambda;
  LaurentPolynomial orbit_sum;
  LaurentPolynomial element;  // orbit_sum - phi(orbit_sum)
};

/// One generator per Hilbert-basis weight of G. Throws
/// ValidationError(NotSimplyConnected) when the derived group is not simply
/// connected.
std::vector<FrobeniusGenerator> frobenius_ideal_generators(const RootDatum& rd,
                                                           const InvariantRing& group_ring,
                                                           long p);

/// lambda_w = w(sum of eta_alpha over simple alpha with w(alpha) < 0), in the
/// order of weyl.elements. nullopt when no integral eta exist.
std::optional<std::vector<Weight>> steinberg_candidates(const RootDatum& rd, const WeylGroup& weyl);

struct SteinbergReport {
  std::vector<Weight> candidates;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> determinants;  // one per random unit specialization
  bool independent = false;
  long window = 0;
  std::size_t monomials_checked = 0;
  std::vector<Weight> unspanned;
  bool spanning = false;

  bool passed() const { return independent && spanning; }
};

/// Independence via determinants of (e^{v lambda_w}) at three random unit
/// points modulo a 61-bit prime; spanning by expressing every e^mu with
/// |mu_i| <= window as an R(G)-combination of the candidates.
SteinbergReport steinberg_freeness_check(const RootDatum& rd, const WeylGroup& weyl,
                                         const std::vector<Weight>& candidates, long window,
                                         std::uint64_t seed = 1);

}  // namespace zipk
