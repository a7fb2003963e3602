#include "zipk/groebner.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>
#include <utility>

#include "zipk/error.hpp"

namespace zipk {

namespace {

// Leading data cached next to each basis element; the support mask lets most
// divisibility tests fail without touching the exponent arrays.
struct Lead {
  Monomial m;
  Integer c;
};

class Reducer {
 public:
  explicit Reducer(const PolyRing& ring) : ring_(ring) {}

  void add(const Polynomial* g) {
    polys_.push_back(g);
    leads_.push_back({g->leading_monomial(), g->leading_coefficient()});
  }
  void clear() {
    polys_.clear();
    leads_.clear();
  }
  std::size_t size() const { return polys_.size(); }

  // Divisor of m with the smallest leading coefficient, or -1.
  long best_divisor(const Monomial& m) const {
    long best = -1;
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      if (!leads_[k].m.divides(m)) continue;
      if (best < 0 || leads_[k].c < leads_[static_cast<std::size_t>(best)].c)
        best = static_cast<long>(k);
    }
    return best;
  }

  // Euclidean reduction of every term of f.
  std::vector<Term> reduce(std::vector<Term> cur) const {
    std::vector<Term> rem;
    std::vector<Term> scratch;
    std::size_t i = 0;
    while (i < cur.size()) {
      const long k = best_divisor(cur[i].m);
      if (k < 0) {
        rem.push_back(std::move(cur[i++]));
        continue;
      }
      const Lead& lead = leads_[static_cast<std::size_t>(k)];
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), cur[i].c.get_mpz_t(), lead.c.get_mpz_t());
      if (q == 0) {
        rem.push_back(std::move(cur[i++]));
        continue;
      }
      subtract_shifted(cur, i, q, cur[i].m / lead.m, *polys_[static_cast<std::size_t>(k)], scratch);
      cur.swap(scratch);
      i = 0;
    }
    return rem;
  }

 private:
  // scratch = cur[from..] - q * shift * g
  void subtract_shifted(const std::vector<Term>& cur, std::size_t from, const Integer& q,
                        const Monomial& shift, const Polynomial& g,
                        std::vector<Term>& scratch) const {
    scratch.clear();
    const auto& gt = g.terms();
    scratch.reserve(cur.size() - from + gt.size());
    std::size_t a = from, b = 0;
    Monomial mb = b < gt.size() ? gt[b].m * shift : Monomial{};
    while (a < cur.size() || b < gt.size()) {
      int cmp;
      if (a == cur.size())
        cmp = -1;
      else if (b == gt.size())
        cmp = 1;
      else
        cmp = ring_.compare(cur[a].m, mb);
      if (cmp > 0) {
        scratch.push_back(cur[a++]);
        continue;
      }
      if (cmp < 0) {
        scratch.push_back({mb, -q * gt[b].c});
      } else {
        Integer c = cur[a].c - q * gt[b].c;
        if (c != 0) scratch.push_back({mb, std::move(c)});
        ++a;
      }
      ++b;
      if (b < gt.size()) mb = gt[b].m * shift;
    }
  }

  const PolyRing& ring_;
  std::vector<const Polynomial*> polys_;
  std::vector<Lead> leads_;
};

Polynomial with_terms(const RingPtr& ring, std::vector<Term> terms) {
  return Polynomial::from_terms(ring, std::move(terms));
}

void make_lc_positive(Polynomial& f) {
  if (!f.is_zero() && f.leading_coefficient() < 0) f = -f;
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& L) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), f.leading_coefficient().get_mpz_t(), g.leading_coefficient().get_mpz_t());
  return f.scaled(l / f.leading_coefficient(), L / f.leading_monomial()) -
         g.scaled(l / g.leading_coefficient(), L / g.leading_monomial());
}

Polynomial g_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& L) {
  Integer d, u, v;
  mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), f.leading_coefficient().get_mpz_t(),
             g.leading_coefficient().get_mpz_t());
  return f.scaled(u, L / f.leading_monomial()) + g.scaled(v, L / g.leading_monomial());
}

bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators[0].size() == 1 &&
         generators[0].leading_monomial().is_one() && generators[0].leading_coefficient() == 1;
}

GroebnerBasis strong_groebner(const RingPtr& ring, std::vector<Polynomial> generators,
                              const GroebnerOptions& options) {
  const PolyRing& R = *ring;
  for (const auto& [a, b] : R.inverse_pairs()) {
    generators.push_back(Polynomial::variable(ring, a) * Polynomial::variable(ring, b) -
                         Polynomial::constant(ring, 1));
  }
  for (auto& g : generators) {
    if (g.ring() && g.ring() != ring) {
      if (g.ring()->names() != R.names())
        throw ValidationError(ValidationError::Kind::DimensionMismatch,
                              "generator belongs to a different ring");
      std::vector<std::size_t> id(R.num_vars());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
      g = change_ring(g, ring, id);
    }
  }

  GroebnerBasis out;
  out.ring = ring;
  // Heap-allocated so Reducer pointers survive growth of the vector.
  std::vector<std::unique_ptr<Polynomial>> basis;
  Reducer reducer(R);

  auto pair_less = [&R](const Pair& a, const Pair& b) {
    if (const int c = R.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);

  bool unit = false;
  auto insert = [&](Polynomial h) {
    make_lc_positive(h);
    if (h.total_degree() > options.max_degree)
      throw ResourceError("Groebner basis degree exceeded max-degree " +
                          std::to_string(options.max_degree));
    if (basis.size() >= options.max_basis_size)
      throw ResourceError("Groebner basis size exceeded " + std::to_string(options.max_basis_size));
    if (h.leading_monomial().is_one() && h.leading_coefficient() == 1) unit = true;
    const std::size_t j = basis.size();
    basis.push_back(std::make_unique<Polynomial>(std::move(h)));
    reducer.add(basis.back().get());
    for (std::size_t i = 0; i < j; ++i)
      queue.insert({lcm(basis[i]->leading_monomial(), basis[j]->leading_monomial()), i, j});
    out.stats.peak_basis_size = std::max(out.stats.peak_basis_size, basis.size());
  };
  auto reduce_and_insert = [&](const Polynomial& f) {
    Polynomial h = with_terms(ring, reducer.reduce(f.terms()));
    if (h.is_zero()) {
      ++out.stats.reductions_to_zero;
      return;
    }
    insert(std::move(h));
  };

  for (const auto& g : generators) {
    if (unit) break;
    if (!g.is_zero()) reduce_and_insert(g);
  }

  while (!queue.empty() && !unit) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    ++out.stats.pairs_processed;
    const Polynomial& f = *basis[pr.i];
    const Polynomial& g = *basis[pr.j];
    if (pr.lcm.degree > options.max_degree)
      throw ResourceError("Groebner basis degree exceeded max-degree " +
                          std::to_string(options.max_degree));
    const Integer& a = f.leading_coefficient();
    const Integer& b = g.leading_coefficient();
    if (!divides(a, b) && !divides(b, a)) {
      const Polynomial gp = g_polynomial(f, g, pr.lcm);
      reduce_and_insert(gp);
      if (unit) break;
    }
    Integer gcd_ab;
    mpz_gcd(gcd_ab.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (coprime(f.leading_monomial(), g.leading_monomial()) && gcd_ab == 1) {
      ++out.stats.pairs_skipped;
      continue;
    }
    const Polynomial sp = s_polynomial(*basis[pr.i], *basis[pr.j], pr.lcm);
    reduce_and_insert(sp);
  }

  if (unit) {
    out.generators = {Polynomial::constant(ring, 1)};
    return out;
  }

  // Minimalize: drop elements whose leading term is strongly divisible by a
  // kept element.
  std::vector<const Polynomial*> order;
  for (const auto& p : basis) order.push_back(p.get());
  std::stable_sort(order.begin(), order.end(), [&R](const Polynomial* x, const Polynomial* y) {
    if (const int c = R.compare(x->leading_monomial(), y->leading_monomial()); c != 0) return c < 0;
    return x->leading_coefficient() < y->leading_coefficient();
  });
  std::vector<const Polynomial*> kept;
  for (const Polynomial* p : order) {
    bool redundant = false;
    for (const Polynomial* k : kept) {
      if (k->leading_monomial().divides(p->leading_monomial()) &&
          divides(k->leading_coefficient(), p->leading_coefficient())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(p);
  }

  Reducer final_reducer(R);
  for (const Polynomial* k : kept) final_reducer.add(k);
  for (const Polynomial* k : kept) {
    std::vector<Term> tail(k->terms().begin() + 1, k->terms().end());
    std::vector<Term> reduced = final_reducer.reduce(std::move(tail));
    reduced.insert(reduced.begin(), k->leading_term());
    out.generators.push_back(with_terms(ring, std::move(reduced)));
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  Reducer reducer(*gb.ring);
  for (const auto& g : gb.generators) reducer.add(&g);
  Polynomial in = f;
  if (f.ring() != gb.ring) {
    std::vector<std::size_t> id(gb.ring->num_vars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    in = change_ring(f, gb.ring, id);
  }
  return with_terms(gb.ring, reducer.reduce(in.terms()));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f, gb).is_zero();
}

GroebnerBasis eliminate(const GroebnerBasis& gb, std::size_t block) {
  const MonomialOrder& ord = gb.ring->order();
  const bool ok = ord.kind == OrderKind::Lex ||
                  (ord.kind == OrderKind::BlockGrevlex && !ord.block_sizes.empty() &&
                   ord.block_sizes.front() == block) ||
                  block == 0;
  if (!ok)
    throw ValidationError(ValidationError::Kind::DimensionMismatch,
                          "monomial order does not eliminate the first " + std::to_string(block) +
                              " variables");
  GroebnerBasis out;
  out.ring = gb.ring;
  out.stats = gb.stats;
  for (const auto& g : gb.generators) {
    bool free_of_block = true;
    for (std::size_t v = 0; v < block && free_of_block; ++v) free_of_block = !g.involves(v);
    if (free_of_block) out.generators.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------

QuotientModule quotient_z_module(const GroebnerBasis& gb, std::uint32_t degree_bound,
                                 std::size_t max_standard) {
  const PolyRing& R = *gb.ring;
  const std::size_t n = R.num_vars();
  QuotientModule out;

  std::vector<const Polynomial*> units;
  for (const auto& g : gb.generators)
    if (g.leading_coefficient() == 1) units.push_back(&g);

  auto divisible_by_unit = [&](const Monomial& m) {
    for (const Polynomial* u : units)
      if (u->leading_monomial().divides(m)) return true;
    return false;
  };

  out.finite = true;
  for (std::size_t v = 0; v < n && out.finite; ++v) {
    bool has_power = false;
    for (const Polynomial* u : units) {
      const Monomial& m = u->leading_monomial();
      if (m.support == (1u << v)) has_power = true;
    }
    out.finite = has_power;
  }
  if (gb.is_unit_ideal()) {
    out.finite = true;
    return out;
  }

  // Standard monomials form an order ideal; grow it by multiplying with
  // variables of index >= the last one used so each monomial appears once.
  std::vector<Monomial> standard;
  std::vector<std::pair<Monomial, std::size_t>> frontier;
  if (!divisible_by_unit(Monomial{})) {
    standard.push_back(Monomial{});
    frontier.emplace_back(Monomial{}, 0);
  }
  while (!frontier.empty() && !out.truncated) {
    std::vector<std::pair<Monomial, std::size_t>> next;
    for (const auto& [m, last] : frontier) {
      if (!out.finite && m.degree >= degree_bound) {
        out.truncated = true;
        continue;
      }
      for (std::size_t v = last; v < n; ++v) {
        std::array<std::uint32_t, kMaxVariables> e{};
        for (std::size_t i = 0; i < n; ++i) e[i] = m.exp[i];
        ++e[v];
        const Monomial mv = Monomial::from_exponents(std::span(e.data(), n));
        if (divisible_by_unit(mv)) continue;
        if (standard.size() == max_standard) {
          if (out.finite)
            throw ResourceError("quotient has more than " + std::to_string(max_standard) +
                                " standard monomials");
          out.truncated = true;
          break;
        }
        standard.push_back(mv);
        next.emplace_back(mv, v);
      }
      if (out.truncated && !out.finite && standard.size() == max_standard) break;
    }
    frontier = std::move(next);
  }
  std::sort(standard.begin(), standard.end(),
            [&R](const Monomial& a, const Monomial& b) { return R.compare(a, b) < 0; });

  // Smallest leading coefficient dividing each standard monomial.
  std::vector<long> pivot(standard.size(), -1);
  for (std::size_t s = 0; s < standard.size(); ++s) {
    for (std::size_t k = 0; k < gb.generators.size(); ++k) {
      const auto& g = gb.generators[k];
      if (!g.leading_monomial().divides(standard[s])) continue;
      if (pivot[s] < 0 ||
          g.leading_coefficient() < gb.generators[static_cast<std::size_t>(pivot[s])].leading_coefficient())
        pivot[s] = static_cast<long>(k);
    }
    out.standard.push_back(
        {standard[s], pivot[s] < 0 ? Integer(0)
                                   : gb.generators[static_cast<std::size_t>(pivot[s])].leading_coefficient()});
  }

  if (!out.finite) {
    // Truncated listing: report the per-monomial moduli only.
    for (const auto& sm : out.standard) {
      if (sm.modulus == 0)
        ++out.rank;
      else
        out.torsion.push_back(sm.modulus);
    }
    return out;
  }

  // Relations: shift * g rewritten with the unit-leading elements until its
  // support lies in the standard set.
  Reducer unit_reducer(R);
  for (const Polynomial* u : units) unit_reducer.add(u);
  auto index_of = [&](const Monomial& m) -> std::size_t {
    auto it = std::lower_bound(standard.begin(), standard.end(), m,
                               [&R](const Monomial& a, const Monomial& b) { return R.compare(a, b) < 0; });
    if (it == standard.end() || !(*it == m))
      throw InternalError("rewritten relation left the standard monomials");
    return static_cast<std::size_t>(it - standard.begin());
  };

  std::vector<IntegerVector> columns;
  for (std::size_t s = 0; s < standard.size(); ++s) {
    if (pivot[s] < 0) continue;
    const Polynomial& g = gb.generators[static_cast<std::size_t>(pivot[s])];
    const Polynomial shifted = g.scaled(1, standard[s] / g.leading_monomial());
    // Unit leading coefficients make the Euclidean reduction a plain rewrite.
    const std::vector<Term> rewritten = unit_reducer.reduce(shifted.terms());
    IntegerVector col(standard.size(), Integer(0));
    for (const auto& t : rewritten) col[index_of(t.m)] = t.c;
    columns.push_back(std::move(col));
  }

  IntegerMatrix rel(standard.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < standard.size(); ++r) rel(r, c) = columns[c][r];
  out.invariants = cokernel_invariants(rel);
  for (const auto& d : out.invariants) {
    if (d == 0)
      ++out.rank;
    else if (d != 1)
      out.torsion.push_back(d);
  }
  return out;
}

}  // namespace zipk
