#include "zipk/pipeline.hpp"

#include <gmpxx.h>

#include "zipk/error.hpp"

namespace zipk {

bool is_prime(long p) {
  if (p < 2) return false;
  const Integer n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

void validate_datum(const CocharacterDatum& datum) {
  validate(datum.group);
  if (datum.mu.size() != datum.group.rank)
    throw ValidationError(ValidationError::Kind::DimensionMismatch,
                          "cocharacter has length " + std::to_string(datum.mu.size()) +
                              ", expected rank " + std::to_string(datum.group.rank));
  if (!is_prime(datum.p))
    throw ValidationError(ValidationError::Kind::NotPrime,
                          "p = " + std::to_string(datum.p) + " is not prime");
}

void require_simply_connected(const RootDatum& rd) {
  if (is_derived_simply_connected(rd)) return;
  throw ValidationError(ValidationError::Kind::NotSimplyConnected,
                        "derived group of " + (rd.name.empty() ? std::string("G") : rd.name) +
                            " is not simply connected: pi_1 = " +
                            fundamental_group(rd).to_string() + " has torsion");
}

RingPtr torus_ring(std::size_t rank) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back("x" + std::to_string(i + 1) + "_inv");
    pairs.emplace_back(i, rank + i);
  }
  return make_ring(std::move(names), MonomialOrder::grevlex(), std::move(pairs));
}

Polynomial to_torus_polynomial(const LaurentPolynomial& f, const RingPtr& ring, std::size_t offset) {
  const std::size_t rank = f.rank();
  std::vector<Term> terms;
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::uint32_t> e(ring->num_vars(), 0);
    for (std::size_t i = 0; i < rank; ++i) {
      if (w[i] > 0)
        e[offset + i] = static_cast<std::uint32_t>(w[i]);
      else if (w[i] < 0)
        e[offset + rank + i] = static_cast<std::uint32_t>(-w[i]);
    }
    terms.push_back({Monomial::from_exponents(e), c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

LaurentPolynomial from_torus_polynomial(const Polynomial& f, std::size_t rank) {
  LaurentPolynomial out(rank);
  for (const auto& t : f.terms()) {
    Weight w(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      w[i] = static_cast<std::int64_t>(t.m.exp[i]) - static_cast<std::int64_t>(t.m.exp[rank + i]);
    out.add_term(w, t.c);
  }
  return out;
}

namespace {

bool has_nontrivial_twist(const RootDatum& rd) {
  return rd.twist && !(*rd.twist == LatticeMap::identity(rd.rank));
}

}  // namespace

TorusQuotient compute_k0_torus(const CocharacterDatum& datum, const GroebnerOptions& options) {
  validate_datum(datum);
  const RootDatum& rd = datum.group;
  const auto group_ring = invariant_ring(rd, full_levi(rd));
  const auto gens = frobenius_ideal_generators(rd, group_ring, datum.p);

  TorusQuotient out;
  out.ring = torus_ring(rd.rank);
  for (const auto& g : gens) out.relations.push_back(to_torus_polynomial(g.element, out.ring));
  out.groebner = strong_groebner(out.ring, out.relations, options);
  out.module = quotient_z_module(out.groebner);
  return out;
}

std::vector<Polynomial> generator_syzygies(const InvariantRing& ring, const RingPtr& target,
                                           std::size_t rank, const GroebnerOptions& options) {
  // Graph ideal (y_j - g_j(x)) in Z[x, x_inv, y], x block first.
  const std::size_t nx = 2 * rank;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back("x" + std::to_string(i + 1) + "_inv");
    pairs.emplace_back(i, rank + i);
  }
  for (const auto& n : ring.names) names.push_back(n);
  if (names.size() > kMaxVariables) throw ResourceError("too many variables for elimination");
  const RingPtr graph =
      make_ring(std::move(names), MonomialOrder::block({nx, ring.size()}), std::move(pairs));

  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < ring.size(); ++j)
    gens.push_back(Polynomial::variable(graph, nx + j) - to_torus_polynomial(ring.elements[j], graph));
  const GroebnerBasis gb = strong_groebner(graph, gens, options);
  const GroebnerBasis el = eliminate(gb, nx);

  std::vector<std::size_t> var_map(graph->num_vars(), 0);
  for (std::size_t j = 0; j < ring.size(); ++j) {
    const auto idx = target->index_of(ring.names[j]);
    if (!idx) throw InternalError("target ring lacks generator " + ring.names[j]);
    var_map[nx + j] = *idx;
  }
  std::vector<Polynomial> out;
  for (const auto& g : el.generators) out.push_back(change_ring(g, target, var_map));
  return out;
}

K0Presentation compute_k0(const CocharacterDatum& datum, const GroebnerOptions& options) {
  validate_datum(datum);
  const RootDatum& rd = datum.group;
  require_simply_connected(rd);

  K0Presentation out;
  out.levi = levi_from_cocharacter(rd, datum.mu);
  out.group_ring = invariant_ring(rd, full_levi(rd));
  out.levi_ring = invariant_ring(rd, out.levi);
  out.ring = out.levi_ring.polynomial_ring();
  out.experimental = has_nontrivial_twist(rd);

  out.syzygies = generator_syzygies(out.levi_ring, out.ring, rd.rank, options);
  for (const auto& g : frobenius_ideal_generators(rd, out.group_ring, datum.p))
    out.frobenius_relations.push_back(express_invariant(out.levi_ring, out.ring, g.element));

  std::vector<Polynomial> all = out.syzygies;
  all.insert(all.end(), out.frobenius_relations.begin(), out.frobenius_relations.end());
  out.groebner = strong_groebner(out.ring, all, options);
  out.module = quotient_z_module(out.groebner);
  return out;
}

}  // namespace zipk
