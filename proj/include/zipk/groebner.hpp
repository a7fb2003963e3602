#pragma once

// Strong Groebner bases over Z and the additive structure of Z[x]/I.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zipk/lattice.hpp"
#include "zipk/polynomial.hpp"

namespace zipk {

struct GroebnerOptions {
  std::uint32_t max_degree = 60;
  std::size_t max_basis_size = 20000;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t peak_basis_size = 0;
};

/// Reduced strong Groebner basis: for every f in the ideal some element's
/// leading term divides LT(f) (monomial and coefficient); leading
/// coefficients are positive, no leading term divides another, and tail
/// coefficients are reduced into [0, d) against the relevant leading
/// coefficient d. Sorted by increasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;
  GroebnerStats stats;

  bool is_unit_ideal() const;
  bool operator==(const GroebnerBasis& rhs) const { return generators == rhs.generators; }
};

/// The ring's inverse pairs contribute v * v_inv - 1 automatically.
GroebnerBasis strong_groebner(const RingPtr& ring, std::vector<Polynomial> generators,
                              const GroebnerOptions& options = {});

/// Euclidean normal form: each term c*x^g with a divisor LM is reduced to a
/// coefficient in [0, d) where d is the smallest such leading coefficient.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// Elements of gb free of the first `block` variables. Requires a lex order
/// or a block order whose first block has exactly `block` variables.
GroebnerBasis eliminate(const GroebnerBasis& gb, std::size_t block);

struct StandardMonomial {
  Monomial monomial;
  Integer modulus;  // 0 means a free summand
};

/// Additive structure of Z[x]/I from a reduced strong basis.
struct QuotientModule {
  bool finite = false;           // finitely generated as an abelian group
  bool truncated = false;        // standard monomials listed only up to a degree
  std::vector<StandardMonomial> standard;  // increasing monomial order
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, in divisibility order
  std::vector<Integer> invariants;  // full cokernel diagonal (zeros for free parts)

  AbelianGroup group() const { return {rank, torsion}; }
};

/// `degree_bound` limits the listing when the quotient is not finitely
/// generated; `max_standard` caps the number of monomials enumerated.
QuotientModule quotient_z_module(const GroebnerBasis& gb, std::uint32_t degree_bound = 8,
                                 std::size_t max_standard = 200000);

}  // namespace zipk
