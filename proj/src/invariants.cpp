#include "zipk/invariants.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zipk/error.hpp"

namespace zipk {

namespace {

std::vector<std::int64_t> coroot_pairings(const InvariantRing& ring, const Weight& lambda) {
  std::vector<std::int64_t> a;
  a.reserve(ring.simple_coroots.size());
  for (const auto& c : ring.simple_coroots) a.push_back(pairing(lambda, c));
  return a;
}

bool is_inverse_slot(const InvariantRing& ring, std::size_t i) {
  for (const auto& [a, b] : ring.inverse_pairs)
    if (a == i || b == i) return true;
  return false;
}

bool is_zero_weight(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

}  // namespace

std::vector<LaurentPolynomial> InvariantRing::augmentation_generators() const {
  std::vector<LaurentPolynomial> out;
  for (const auto& m : elements)
    out.push_back(m - LaurentPolynomial::constant(m.rank(), Integer(static_cast<long>(m.size()))));
  return out;
}

RingPtr InvariantRing::polynomial_ring() const {
  return make_ring(names, MonomialOrder::grevlex(), inverse_pairs);
}

InvariantRing invariant_ring(const RootDatum& rd, const LeviDatum& levi, const std::string& prefix) {
  InvariantRing ring;
  ring.simple = levi.simple_roots;
  for (std::size_t s : ring.simple) ring.simple_coroots.push_back(rd.coroots[s]);
  ring.two_rho_check = Weight(rd.rank, 0);
  for (std::size_t r : levi.positive_roots) ring.two_rho_check = ring.two_rho_check + rd.coroots[r];
  ring.weyl = levi.weyl;
  ring.weights = dominant_hilbert_basis(rd, &levi);
  if (ring.weights.size() > kMaxVariables)
    throw ResourceError("invariant ring needs more than " + std::to_string(kMaxVariables) +
                        " generators");
  std::size_t next = 1;
  for (std::size_t i = 0; i < ring.weights.size(); ++i) {
    ring.elements.push_back(orbit_sum(ring.weyl, ring.weights[i]));
    const bool central_pair = i > 0 && ring.weights[i] == -ring.weights[i - 1] &&
                              ring.elements[i].size() == 1 && ring.elements[i - 1].size() == 1 &&
                              !is_inverse_slot(ring, i - 1);
    if (central_pair) {
      ring.names.push_back(ring.names[i - 1] + "_inv");
      ring.inverse_pairs.emplace_back(i - 1, i);
    } else {
      ring.names.push_back(prefix + std::to_string(next++));
    }
  }
  return ring;
}

LaurentPolynomial expand(const InvariantRing& ring, const Polynomial& f) {
  const std::size_t rank = ring.weyl.rank;
  std::vector<std::size_t> slot(f.ring()->num_vars());
  for (std::size_t v = 0; v < slot.size(); ++v) {
    const auto it = std::find(ring.names.begin(), ring.names.end(), f.ring()->names()[v]);
    if (it == ring.names.end())
      throw ValidationError(ValidationError::Kind::DimensionMismatch,
                            "variable " + f.ring()->names()[v] + " is not a generator");
    slot[v] = static_cast<std::size_t>(it - ring.names.begin());
  }
  LaurentPolynomial out(rank);
  for (const auto& t : f.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(rank, t.c);
    for (std::size_t v = 0; v < slot.size(); ++v)
      if (t.m.exp[v]) term = term * ring.elements[slot[v]].pow(t.m.exp[v]);
    out += term;
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> decompose_dominant(const InvariantRing& ring,
                                                             const Weight& lambda) {
  const auto target = coroot_pairings(ring, lambda);
  for (auto a : target)
    if (a < 0) return std::nullopt;

  std::vector<std::size_t> pointed;
  std::vector<std::vector<std::int64_t>> pa;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (is_inverse_slot(ring, i)) continue;
    pointed.push_back(i);
    pa.push_back(coroot_pairings(ring, ring.weights[i]));
  }

  // Depth-first search for a non-negative combination of pairing vectors,
  // always covering the first nonzero coordinate.
  std::vector<std::uint32_t> counts(pointed.size(), 0);
  std::set<std::vector<std::int64_t>> dead;
  auto search = [&](auto&& self, std::vector<std::int64_t>& rest) -> bool {
    std::size_t k = 0;
    while (k < rest.size() && rest[k] == 0) ++k;
    if (k == rest.size()) return true;
    if (dead.contains(rest)) return false;
    for (std::size_t j = 0; j < pointed.size(); ++j) {
      if (pa[j][k] <= 0) continue;
      bool fits = true;
      for (std::size_t c = 0; c < rest.size() && fits; ++c) fits = pa[j][c] <= rest[c];
      if (!fits) continue;
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= pa[j][c];
      ++counts[j];
      if (self(self, rest)) return true;
      --counts[j];
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += pa[j][c];
    }
    dead.insert(rest);
    return false;
  };
  auto rest = target;
  if (!search(search, rest)) return std::nullopt;

  std::vector<std::uint32_t> exps(ring.size(), 0);
  Weight residual = lambda;
  for (std::size_t j = 0; j < pointed.size(); ++j) {
    exps[pointed[j]] = counts[j];
    residual = residual - static_cast<std::int64_t>(counts[j]) * ring.weights[pointed[j]];
  }
  if (is_zero_weight(residual)) return exps;
  if (ring.inverse_pairs.empty()) return std::nullopt;

  IntegerMatrix basis(residual.size(), ring.inverse_pairs.size());
  for (std::size_t j = 0; j < ring.inverse_pairs.size(); ++j)
    for (std::size_t r = 0; r < residual.size(); ++r)
      basis(r, j) = static_cast<long>(ring.weights[ring.inverse_pairs[j].first][r]);
  IntegerVector rhs;
  for (auto x : residual) rhs.emplace_back(static_cast<long>(x));
  const auto sol = solve_linear_diophantine(basis, rhs);
  if (!sol) return std::nullopt;
  for (std::size_t j = 0; j < ring.inverse_pairs.size(); ++j) {
    const Integer& k = sol->particular[j];
    const auto [pos, neg] = ring.inverse_pairs[j];
    if (k > 0)
      exps[pos] = static_cast<std::uint32_t>(k.get_ui());
    else if (k < 0)
      exps[neg] = static_cast<std::uint32_t>(Integer(-k).get_ui());
  }
  return exps;
}

Polynomial express_invariant(const InvariantRing& ring, const LaurentPolynomial& f) {
  return express_invariant(ring, ring.polynomial_ring(), f);
}

Polynomial express_invariant(const InvariantRing& ring, const RingPtr& target,
                             const LaurentPolynomial& f) {
  if (!is_invariant(ring.weyl, f))
    throw ValidationError(ValidationError::Kind::NotInvariant,
                          "element is not invariant under the Weyl group");
  std::vector<std::size_t> var_of(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto idx = target->index_of(ring.names[i]);
    if (!idx)
      throw ValidationError(ValidationError::Kind::DimensionMismatch,
                            "target ring lacks generator " + ring.names[i]);
    var_of[i] = *idx;
  }

  std::vector<std::vector<LaurentPolynomial>> powers(ring.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const LaurentPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(LaurentPolynomial::constant(ring.weyl.rank, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * ring.elements[i]);
    return cache[e];
  };

  // Dominance descent: the highest dominant weight of the remainder is the
  // top weight of exactly one generator monomial, with coefficient 1.
  std::vector<Term> out;
  LaurentPolynomial rest = f;
  while (!rest.is_zero()) {
    const Weight* top = nullptr;
    std::int64_t top_height = 0;
    for (const auto& [w, c] : rest.terms()) {
      bool dominant = true;
      for (const auto& cr : ring.simple_coroots) dominant = dominant && pairing(w, cr) >= 0;
      if (!dominant) continue;
      const std::int64_t h = pairing(w, ring.two_rho_check);
      if (!top || h > top_height || (h == top_height && w > *top)) {
        top = &w;
        top_height = h;
      }
    }
    if (!top) throw InternalError("invariant element without a dominant weight");
    const Weight lambda = *top;
    const Integer c = rest.coefficient(lambda);
    const auto exps = decompose_dominant(ring, lambda);
    if (!exps) throw InternalError("dominant weight " + to_string(lambda) +
                                   " is not a sum of Hilbert basis weights");
    LaurentPolynomial product = LaurentPolynomial::constant(ring.weyl.rank, c);
    std::vector<std::uint32_t> mono(target->num_vars(), 0);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (!(*exps)[i]) continue;
      product = product * power(i, (*exps)[i]);
      mono[var_of[i]] += (*exps)[i];
    }
    if (product.coefficient(lambda) != c)
      throw InternalError("generator monomial has unexpected top coefficient");
    rest -= product;
    out.push_back({Monomial::from_exponents(mono), c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Restriction restrict_to_levi(const RootDatum& rd, const WeylGroup& group_weyl,
                             const Weight& lambda, const LeviDatum& levi) {
  Restriction out;
  out.element = orbit_sum(group_weyl, lambda);
  std::map<Weight, std::size_t> parts;
  for (const auto& mu : orbit(group_weyl, lambda))
    ++parts[dominant_representative(rd, levi.simple_roots, mu)];
  for (const auto& [w, n] : parts) {
    out.levi_dominant.push_back(w);
    out.orbit_sizes.push_back(n);
  }
  return out;
}

std::vector<FrobeniusGenerator> frobenius_ideal_generators(const RootDatum& rd,
                                                           const InvariantRing& group_ring,
                                                           long p) {
  if (!is_derived_simply_connected(rd))
    throw ValidationError(ValidationError::Kind::NotSimplyConnected,
                          "derived group of " + (rd.name.empty() ? std::string("G") : rd.name) +
                              " is not simply connected: pi_1 = " +
                              fundamental_group(rd).to_string() + " has torsion");
  std::vector<FrobeniusGenerator> out;
  for (std::size_t i = 0; i < group_ring.size(); ++i) {
    FrobeniusGenerator g;
    g.lambda = group_ring.weights[i];
    g.orbit_sum = group_ring.elements[i];
    g.element = g.orbit_sum - frobenius(g.orbit_sum, p, rd.twist);
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Steinberg basis candidates

std::optional<std::vector<Weight>> steinberg_candidates(const RootDatum& rd, const WeylGroup& weyl) {
  const auto eta = integral_fundamental_weights(rd, weyl.generators);
  if (!eta) return std::nullopt;
  const auto positive = positive_roots(rd, weyl.generators);
  const std::set<std::size_t> pos_set(positive.begin(), positive.end());
  std::vector<Weight> out;
  for (const auto& w : weyl.elements) {
    Weight sum(rd.rank, 0);
    for (std::size_t k = 0; k < weyl.generators.size(); ++k) {
      const auto image = find_root(rd, w.apply(rd.roots[weyl.generators[k]]));
      if (!image) throw InternalError("Weyl element does not permute the roots");
      if (!pos_set.contains(*image)) sum = sum + (*eta)[k];
    }
    out.push_back(w.apply(sum));
  }
  return out;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1u) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (kPrime - det) % kPrime;
    }
    det = mulmod(det, m[c][c]);
    const std::uint64_t inv = powmod(m[c][c], kPrime - 2);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (!m[r][c]) continue;
      const std::uint64_t f = mulmod(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k)
        m[r][k] = (m[r][k] + kPrime - mulmod(f, m[c][k])) % kPrime;
    }
  }
  return det;
}

// Reduces v against a row-style Hermite basis; true iff v lies in its span.
bool in_row_lattice(const IntegerMatrix& hnf, IntegerVector v) {
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t pc = 0;
    while (pc < hnf.cols() && hnf(r, pc) == 0) ++pc;
    if (pc == hnf.cols()) continue;
    for (std::size_t c = 0; c < pc; ++c)
      if (v[c] != 0) return false;
    if (!mpz_divisible_p(v[pc].get_mpz_t(), hnf(r, pc).get_mpz_t())) return false;
    const Integer q = v[pc] / hnf(r, pc);
    if (q != 0)
      for (std::size_t c = pc; c < hnf.cols(); ++c) v[c] -= q * hnf(r, c);
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

SteinbergReport steinberg_freeness_check(const RootDatum& rd, const WeylGroup& weyl,
                                         const std::vector<Weight>& candidates, long window,
                                         std::uint64_t seed) {
  if (candidates.size() != weyl.size())
    throw ValidationError(ValidationError::Kind::DimensionMismatch,
                          "need one candidate per Weyl group element");
  SteinbergReport rep;
  rep.candidates = candidates;
  rep.modulus = kPrime;
  rep.window = window;
  const std::size_t n = weyl.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> unit(1, kPrime - 1);
  rep.independent = true;
  for (int draw = 0; draw < 3; ++draw) {
    std::vector<std::uint64_t> t(rd.rank), tinv(rd.rank);
    for (std::size_t i = 0; i < rd.rank; ++i) {
      t[i] = unit(rng);
      tinv[i] = powmod(t[i], kPrime - 2);
    }
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        const Weight e = weyl.elements[v].apply(candidates[w]);
        std::uint64_t val = 1;
        for (std::size_t i = 0; i < rd.rank; ++i) {
          const auto k = e[i];
          val = mulmod(val, k >= 0 ? powmod(t[i], static_cast<std::uint64_t>(k))
                                   : powmod(tinv[i], static_cast<std::uint64_t>(-k)));
        }
        m[v][w] = val;
      }
    }
    rep.determinants.push_back(det_mod(std::move(m)));
    if (rep.determinants.back() == 0) rep.independent = false;
  }

  // Spanning: columns m_nu * e^{lambda_w} over dominant nu in an enlarged box.
  long reach = 0;
  for (const auto& c : candidates)
    for (auto x : c) reach = std::max(reach, static_cast<long>(std::llabs(x)));
  const long box = window + reach + 1;
  std::vector<LaurentPolynomial> columns;
  for (const auto& nu : window_points(rd.rank, box)) {
    if (!is_dominant(rd, weyl.generators, nu)) continue;
    const LaurentPolynomial m = orbit_sum(weyl, nu);
    for (const auto& c : candidates) columns.push_back(m * LaurentPolynomial::monomial(c));
  }
  std::map<Weight, std::size_t> index;
  for (const auto& col : columns)
    for (const auto& [w, c] : col.terms()) index.try_emplace(w, 0);
  for (const auto& mu : window_points(rd.rank, window)) index.try_emplace(mu, 0);
  std::size_t k = 0;
  for (auto& [w, i] : index) i = k++;

  IntegerMatrix rows(columns.size(), index.size());
  for (std::size_t r = 0; r < columns.size(); ++r)
    for (const auto& [w, c] : columns[r].terms()) rows(r, index.at(w)) = c;
  const IntegerMatrix hnf = hermite_normal_form(rows);
  for (const auto& mu : window_points(rd.rank, window)) {
    IntegerVector target(index.size(), Integer(0));
    target[index.at(mu)] = 1;
    ++rep.monomials_checked;
    if (!in_row_lattice(hnf, std::move(target))) rep.unspanned.push_back(mu);
  }
  rep.spanning = rep.unspanned.empty();
  return rep;
}

}  // namespace zipk
