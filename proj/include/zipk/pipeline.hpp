#pragma once

// K_0 of the stack of G-zips of type mu, presented as R(L)/I R(L), together
// with the torus-side ring R(T)/I R(T).

#include <cstddef>
#include <optional>
#include <vector>

#include "zipk/groebner.hpp"
#include "zipk/invariants.hpp"
#include "zipk/rootdata.hpp"

namespace zipk {

struct CocharacterDatum {
  RootDatum group;
  Weight mu;
  long p = 2;
};

bool is_prime(long p);

/// Root datum axioms, prime p, length of mu. The simply-connectedness gate
/// is separate so that `validate` can report it on its own.
void validate_datum(const CocharacterDatum& datum);
void require_simply_connected(const RootDatum& rd);

/// Z[x1^+-1, ..., xn^+-1] as x1..xn followed by x1_inv..xn_inv.
RingPtr torus_ring(std::size_t rank);
Polynomial to_torus_polynomial(const LaurentPolynomial& f, const RingPtr& ring,
                               std::size_t offset = 0);
/// Inverse of to_torus_polynomial on rings built by torus_ring.
LaurentPolynomial from_torus_polynomial(const Polynomial& f, std::size_t rank);

struct TorusQuotient {
  RingPtr ring;
  std::vector<Polynomial> relations;
  GroebnerBasis groebner;
  QuotientModule module;
};

/// R(T)/I R(T) with I generated by m_lambda - phi(m_lambda), lambda over the
/// Hilbert basis of G.
TorusQuotient compute_k0_torus(const CocharacterDatum& datum, const GroebnerOptions& options = {});

struct K0Presentation {
  LeviDatum levi;
  InvariantRing levi_ring;
  InvariantRing group_ring;
  RingPtr ring;
  std::vector<Polynomial> syzygies;             // relations among Levi generators
  std::vector<Polynomial> frobenius_relations;  // I expressed in Levi generators
  GroebnerBasis groebner;
  QuotientModule module;
  bool experimental = false;  // a non-trivial twist was applied
};

K0Presentation compute_k0(const CocharacterDatum& datum, const GroebnerOptions& options = {});

/// Kernel of Z[y] -> R(T) sending each variable to its generator element.
std::vector<Polynomial> generator_syzygies(const InvariantRing& ring, const RingPtr& target,
                                           std::size_t rank, const GroebnerOptions& options = {});

}  // namespace zipk
