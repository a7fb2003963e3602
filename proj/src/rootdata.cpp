#include "zipk/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "zipk/error.hpp"

namespace zipk {

using Kind = ValidationError::Kind;

std::int64_t pairing(const Weight& character, const Weight& cocharacter) {
  if (character.size() != cocharacter.size())
    throw ValidationError(Kind::DimensionMismatch, "pairing of vectors of different rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < character.size(); ++i) s += character[i] * cocharacter[i];
  return s;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Weight operator-(const Weight& a) {
  Weight out(a);
  for (auto& x : out) x = -x;
  return out;
}

Weight operator*(std::int64_t k, const Weight& a) {
  Weight out(a);
  for (auto& x : out) x *= k;
  return out;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// LatticeMap

LatticeMap::LatticeMap(std::size_t n) : n_(n), m_(n * n, 0) {}

LatticeMap::LatticeMap(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), m_(std::move(entries)) {
  if (m_.size() != n * n) throw ParseError("lattice map needs n*n entries");
}

LatticeMap LatticeMap::identity(std::size_t n) {
  LatticeMap m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LatticeMap LatticeMap::reflection(const Weight& root, const Weight& coroot) {
  const std::size_t n = root.size();
  LatticeMap m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= root[i] * coroot[j];
  return m;
}

Weight LatticeMap::apply(const Weight& v) const {
  Weight out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

LatticeMap LatticeMap::operator*(const LatticeMap& rhs) const {
  LatticeMap out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

LatticeMap LatticeMap::transpose() const {
  LatticeMap t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix LatticeMap::to_matrix() const {
  IntegerMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

std::optional<LatticeMap> LatticeMap::inverse() const {
  const IntegerMatrix a = to_matrix();
  const Integer det = determinant(a);
  if (abs(det) != 1) return std::nullopt;
  LatticeMap inv(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    IntegerVector e(n_);
    e[j] = 1;
    const auto sol = solve_linear_diophantine(a, e);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < n_; ++i) inv(i, j) = sol->particular[i].get_si();
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Basic root-system queries

std::optional<std::size_t> find_root(const RootDatum& rd, const Weight& root) {
  for (std::size_t i = 0; i < rd.roots.size(); ++i)
    if (rd.roots[i] == root) return i;
  return std::nullopt;
}

std::optional<std::vector<Rational>> simple_coordinates(const RootDatum& rd,
                                                        std::span<const std::size_t> simple,
                                                        const Weight& root) {
  std::vector<std::vector<Rational>> a(rd.rank, std::vector<Rational>(simple.size()));
  std::vector<Rational> b(rd.rank);
  for (std::size_t i = 0; i < rd.rank; ++i) {
    for (std::size_t j = 0; j < simple.size(); ++j)
      a[i][j] = Rational(static_cast<long>(rd.roots[simple[j]][i]));
    b[i] = Rational(static_cast<long>(root[i]));
  }
  return solve_rational(a, b);
}

std::vector<std::size_t> positive_roots(const RootDatum& rd, std::span<const std::size_t> simple,
                                        std::span<const std::size_t> within) {
  std::vector<std::size_t> candidates(within.begin(), within.end());
  if (within.empty()) {
    candidates.resize(rd.roots.size());
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  }
  std::vector<std::size_t> out;
  for (std::size_t idx : candidates) {
    const auto c = simple_coordinates(rd, simple, rd.roots[idx]);
    if (!c) continue;
    bool nonneg = true, some_pos = false;
    for (const auto& x : *c) {
      if (x < 0) nonneg = false;
      if (x > 0) some_pos = true;
    }
    if (nonneg && some_pos) out.push_back(idx);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> cartan_matrix(const RootDatum& rd,
                                                     std::span<const std::size_t> simple) {
  std::vector<std::vector<std::int64_t>> a(simple.size(), std::vector<std::int64_t>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      a[i][j] = pairing(rd.roots[simple[j]], rd.coroots[simple[i]]);
  return a;
}

namespace {

// A generalized Cartan matrix is of finite type iff all its principal minors
// are positive.
bool is_finite_type(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i][i] != 2) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
    }
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
    IntegerMatrix m(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = static_cast<long>(a[idx[r]][idx[c]]);
    if (determinant(m) <= 0) return false;
  }
  return true;
}

Weight coreflect(const Weight& root, const Weight& coroot, const Weight& y) {
  return y - pairing(root, y) * coroot;
}

}  // namespace

void validate(const RootDatum& rd) {
  const std::size_t n = rd.rank;
  if (rd.roots.size() != rd.coroots.size())
    throw ValidationError(Kind::DimensionMismatch, "roots and coroots differ in number");
  for (std::size_t i = 0; i < rd.roots.size(); ++i)
    if (rd.roots[i].size() != n || rd.coroots[i].size() != n)
      throw ValidationError(Kind::DimensionMismatch,
                            "root or coroot " + std::to_string(i) + " has wrong length");
  {
    std::set<Weight> seen(rd.roots.begin(), rd.roots.end());
    if (seen.size() != rd.roots.size())
      throw ValidationError(Kind::ReflectionNotPermuting, "duplicate roots");
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    const auto p = pairing(rd.roots[i], rd.coroots[i]);
    if (p != 2)
      throw ValidationError(Kind::PairingViolation,
                            "pairing-violation: <alpha, alpha^vee> = " + std::to_string(p) +
                                " for root " + to_string(rd.roots[i]));
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    for (std::size_t j = 0; j < rd.roots.size(); ++j) {
      const Weight r = rd.roots[j] - pairing(rd.roots[j], rd.coroots[i]) * rd.roots[i];
      const auto k = find_root(rd, r);
      if (!k)
        throw ValidationError(Kind::ReflectionNotPermuting,
                              "reflection-not-permuting: s_" + to_string(rd.roots[i]) +
                                  " sends " + to_string(rd.roots[j]) + " outside Phi");
      if (coreflect(rd.roots[i], rd.coroots[i], rd.coroots[j]) != rd.coroots[*k])
        throw ValidationError(Kind::ReflectionNotPermuting,
                              "reflection-not-permuting: coroots not reflected compatibly");
    }
  }

  // Simple system.
  std::set<std::size_t> simple_set(rd.simple_roots.begin(), rd.simple_roots.end());
  if (simple_set.size() != rd.simple_roots.size())
    throw ValidationError(Kind::InvalidSimpleSystem, "repeated simple root");
  for (std::size_t s : rd.simple_roots)
    if (s >= rd.roots.size())
      throw ValidationError(Kind::InvalidSimpleSystem, "simple root index out of range");
  if (!rd.roots.empty() && rd.simple_roots.empty())
    throw ValidationError(Kind::InvalidSimpleSystem, "no simple roots given");
  {
    std::vector<IntegerVector> cols;
    for (std::size_t s : rd.simple_roots) {
      IntegerVector v;
      for (auto x : rd.roots[s]) v.emplace_back(static_cast<long>(x));
      cols.push_back(v);
    }
    if (!cols.empty() && rank(IntegerMatrix::from_columns(n, cols)) != cols.size())
      throw ValidationError(Kind::InvalidSimpleSystem, "simple roots are linearly dependent");
  }
  for (const Weight& r : rd.roots) {
    const auto c = simple_coordinates(rd, rd.simple_roots, r);
    if (!c)
      throw ValidationError(Kind::InvalidSimpleSystem,
                            "root " + to_string(r) + " outside the span of the simple roots");
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& x : *c) {
      if (x.get_den() != 1)
        throw ValidationError(Kind::InvalidSimpleSystem,
                              "root " + to_string(r) + " not an integral combination of simple roots");
      if (x < 0) all_nonneg = false;
      if (x > 0) all_nonpos = false;
    }
    if (!all_nonneg && !all_nonpos)
      throw ValidationError(Kind::InvalidSimpleSystem,
                            "root " + to_string(r) + " is neither positive nor negative");
  }
  {
    // Phi = W . Delta
    std::set<Weight> reached;
    std::deque<Weight> queue;
    for (std::size_t s : rd.simple_roots)
      if (reached.insert(rd.roots[s]).second) queue.push_back(rd.roots[s]);
    while (!queue.empty()) {
      const Weight r = queue.front();
      queue.pop_front();
      for (std::size_t s : rd.simple_roots) {
        const Weight t = r - pairing(r, rd.coroots[s]) * rd.roots[s];
        if (reached.insert(t).second) queue.push_back(t);
      }
    }
    if (reached.size() != rd.roots.size())
      throw ValidationError(Kind::InvalidSimpleSystem, "Phi is not the Weyl orbit of Delta");
  }
  if (!is_finite_type(cartan_matrix(rd, rd.simple_roots)))
    throw ValidationError(Kind::NonFiniteCartan,
                          "non-finite-type Cartan matrix over the simple roots");

  if (rd.twist) {
    const LatticeMap& tau = *rd.twist;
    if (tau.dim() != n)
      throw ValidationError(Kind::DimensionMismatch, "twist has wrong dimension");
    const auto inv = tau.inverse();
    if (!inv)
      throw ValidationError(Kind::TwistNotPreservingBase, "twist-not-preserving-Delta: not unimodular");
    LatticeMap power = tau;
    const LatticeMap id = LatticeMap::identity(n);
    std::size_t order = 1;
    while (power != id) {
      power = power * tau;
      if (++order > 1000)
        throw ValidationError(Kind::TwistNotPreservingBase, "twist-not-preserving-Delta: infinite order");
    }
    std::set<Weight> simple_weights;
    for (std::size_t s : rd.simple_roots) simple_weights.insert(rd.roots[s]);
    const LatticeMap dual = inv->transpose();
    for (std::size_t s : rd.simple_roots) {
      const Weight image = tau.apply(rd.roots[s]);
      if (!simple_weights.contains(image))
        throw ValidationError(Kind::TwistNotPreservingBase,
                              "twist-not-preserving-Delta: image of a simple root is not simple");
      const auto k = find_root(rd, image);
      if (rd.coroots[*k] != dual.apply(rd.coroots[s]))
        throw ValidationError(Kind::TwistNotPreservingBase,
                              "twist-not-preserving-Delta: pairing not preserved");
    }
  }
}

// ---------------------------------------------------------------------------
// Presets

RootDatum simply_connected_from_cartan(const std::vector<std::vector<std::int64_t>>& cartan,
                                       std::string name) {
  const std::size_t k = cartan.size();
  std::map<Weight, Weight> pairs;
  std::deque<Weight> queue;
  std::vector<Weight> simple(k, Weight(k)), simple_co(k, Weight(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) simple[j][i] = cartan[i][j];
    simple_co[j][j] = 1;
    pairs.emplace(simple[j], simple_co[j]);
    queue.push_back(simple[j]);
  }
  while (!queue.empty()) {
    const Weight r = queue.front();
    queue.pop_front();
    const Weight rc = pairs.at(r);
    for (std::size_t i = 0; i < k; ++i) {
      const Weight t = r - pairing(r, simple_co[i]) * simple[i];
      const Weight tc = rc - pairing(simple[i], rc) * simple_co[i];
      if (pairs.emplace(t, tc).second) queue.push_back(t);
    }
  }

  RootDatum rd;
  rd.name = std::move(name);
  rd.rank = k;
  // Positive roots (in the cone of the simple roots) first, ordered by
  // height; negatives follow in the same order.
  std::vector<std::size_t> all_simple(k);
  std::iota(all_simple.begin(), all_simple.end(), std::size_t{0});
  RootDatum tmp;
  tmp.rank = k;
  tmp.roots = simple;
  std::vector<std::pair<std::vector<std::int64_t>, Weight>> positives;
  for (const auto& [r, rc] : pairs) {
    const auto c = simple_coordinates(tmp, all_simple, r);
    std::vector<std::int64_t> coords;
    std::int64_t height = 0;
    for (const auto& x : *c) {
      coords.push_back(x.get_num().get_si());
      height += coords.back();
    }
    if (height <= 0) continue;
    std::vector<std::int64_t> key{height};
    for (auto x : coords) key.push_back(-x);
    positives.emplace_back(key, r);
  }
  std::sort(positives.begin(), positives.end());
  for (const auto& [key, r] : positives) {
    rd.roots.push_back(r);
    rd.coroots.push_back(pairs.at(r));
  }
  const std::size_t npos = rd.roots.size();
  for (std::size_t i = 0; i < npos; ++i) {
    rd.roots.push_back(-rd.roots[i]);
    rd.coroots.push_back(-rd.coroots[i]);
  }
  rd.simple_roots = all_simple;
  return rd;
}

namespace {

RootDatum general_linear(std::size_t n) {
  RootDatum rd;
  rd.name = "GL" + std::to_string(n);
  rd.rank = n;
  auto e = [n](std::size_t i, std::size_t j) {
    Weight w(n, 0);
    w[i] = 1;
    w[j] = -1;
    return w;
  };
  // simple roots e_i - e_{i+1} first, then the remaining positive roots
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i + d < n; ++i) {
      rd.roots.push_back(e(i, i + d));
      rd.coroots.push_back(e(i, i + d));
    }
  const std::size_t npos = rd.roots.size();
  for (std::size_t i = 0; i < npos; ++i) {
    rd.roots.push_back(-rd.roots[i]);
    rd.coroots.push_back(-rd.coroots[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) rd.simple_roots.push_back(i);
  return rd;
}

RootDatum torus(std::size_t n, std::string name) {
  RootDatum rd;
  rd.name = std::move(name);
  rd.rank = n;
  return rd;
}

}  // namespace

RootDatum preset(std::string_view name) {
  if (name == "SL2") return simply_connected_from_cartan({{2}}, "SL2");
  if (name == "SL3") return simply_connected_from_cartan({{2, -1}, {-1, 2}}, "SL3");
  if (name == "SL4")
    return simply_connected_from_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, "SL4");
  // alpha_1 short, alpha_2 long
  if (name == "Sp4") return simply_connected_from_cartan({{2, -2}, {-1, 2}}, "Sp4");
  if (name == "A1xA1") return simply_connected_from_cartan({{2, 0}, {0, 2}}, "A1xA1");
  if (name == "GL2") return general_linear(2);
  if (name == "GL3") return general_linear(3);
  if (name == "PGL2") {
    RootDatum rd;
    rd.name = "PGL2";
    rd.rank = 1;
    rd.roots = {{1}, {-1}};
    rd.coroots = {{2}, {-2}};
    rd.simple_roots = {0};
    return rd;
  }
  if (name == "Gm") return torus(1, "Gm");
  if (name == "Gm^2") return torus(2, "Gm^2");
  throw ParseError("unknown group preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"SL2", "SL3", "SL4", "GL2", "GL3", "Sp4", "PGL2", "Gm", "Gm^2", "A1xA1"};
}

// ---------------------------------------------------------------------------
// Weyl groups

std::optional<std::size_t> WeylGroup::index_of(const LatticeMap& w) const {
  const auto it = lookup_.find(w.entries());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

LatticeMap WeylGroup::element_of_word(const RootDatum& rd,
                                      std::span<const std::size_t> word) const {
  LatticeMap w = LatticeMap::identity(rank);
  for (std::size_t pos : word) {
    const std::size_t r = generators.at(pos);
    w = w * LatticeMap::reflection(rd.roots[r], rd.coroots[r]);
  }
  return w;
}

WeylGroup weyl_enumerate(const RootDatum& rd, std::span<const std::size_t> simple,
                         std::size_t cap) {
  WeylGroup g;
  g.rank = rd.rank;
  g.generators.assign(simple.begin(), simple.end());
  std::vector<LatticeMap> refl;
  for (std::size_t r : simple) refl.push_back(LatticeMap::reflection(rd.roots[r], rd.coroots[r]));

  g.elements.push_back(LatticeMap::identity(rd.rank));
  g.reduced_words.emplace_back();
  g.lookup_.emplace(g.elements.front().entries(), 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (std::size_t i = 0; i < refl.size(); ++i) {
      LatticeMap next = g.elements[head] * refl[i];
      if (g.lookup_.contains(next.entries())) continue;
      if (g.elements.size() >= cap)
        throw ResourceError("Weyl group exceeds the size cap of " + std::to_string(cap));
      g.lookup_.emplace(next.entries(), g.elements.size());
      auto word = g.reduced_words[head];
      word.push_back(i);
      g.elements.push_back(std::move(next));
      g.reduced_words.push_back(std::move(word));
    }
  }
  g.longest = g.elements.size() - 1;  // BFS: last element has maximal length
  return g;
}

WeylGroup weyl_enumerate(const RootDatum& rd, std::size_t cap) {
  return weyl_enumerate(rd, rd.simple_roots, cap);
}

std::size_t inversion_count(const RootDatum& rd, std::span<const std::size_t> positive,
                            const LatticeMap& w) {
  std::set<Weight> pos;
  for (std::size_t i : positive) pos.insert(rd.roots[i]);
  std::size_t count = 0;
  for (std::size_t i : positive)
    if (!pos.contains(w.apply(rd.roots[i]))) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Fundamental group and weights

AbelianGroup fundamental_group(const RootDatum& rd) {
  std::vector<IntegerVector> cols;
  for (const Weight& c : rd.coroots) {
    IntegerVector v;
    for (auto x : c) v.emplace_back(static_cast<long>(x));
    cols.push_back(std::move(v));
  }
  return abelian_group(cokernel_invariants(IntegerMatrix::from_columns(rd.rank, cols)));
}

bool is_derived_simply_connected(const RootDatum& rd) {
  return fundamental_group(rd).is_torsion_free();
}

std::vector<std::vector<Rational>> fundamental_weights(const RootDatum& rd) {
  const auto a = cartan_matrix(rd, rd.simple_roots);
  const std::size_t k = a.size();
  std::vector<std::vector<Rational>> am(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) am[i][j] = Rational(static_cast<long>(a[i][j]));
  std::vector<std::vector<Rational>> out;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rational> e(k);
    e[t] = 1;
    const auto c = solve_rational(am, e);
    std::vector<Rational> eta(rd.rank);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < rd.rank; ++i)
        eta[i] += (*c)[j] * Rational(static_cast<long>(rd.roots[rd.simple_roots[j]][i]));
    out.push_back(std::move(eta));
  }
  return out;
}

namespace {

IntegerMatrix coroot_rows(const RootDatum& rd, std::span<const std::size_t> simple) {
  IntegerMatrix a(simple.size(), rd.rank);
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < rd.rank; ++j)
      a(i, j) = static_cast<long>(rd.coroots[simple[i]][j]);
  return a;
}

// Shifts x by a lattice vector of `basis` so that its orthogonal projection
// onto span(basis) has coordinates in [0, 1).
IntegerVector reduce_modulo(const IntegerVector& x, const std::vector<IntegerVector>& basis) {
  if (basis.empty()) return x;
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t t = 0; t < x.size(); ++t) s += basis[i][t] * basis[j][t];
      gram[i][j] = s;
    }
    Integer s = 0;
    for (std::size_t t = 0; t < x.size(); ++t) s += basis[i][t] * x[t];
    rhs[i] = s;
  }
  const auto coeffs = solve_rational(gram, rhs);
  IntegerVector out = x;
  for (std::size_t i = 0; i < k; ++i) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), (*coeffs)[i].get_num_mpz_t(), (*coeffs)[i].get_den_mpz_t());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] -= fl * basis[i][t];
  }
  return out;
}

Weight to_weight(const IntegerVector& v) {
  Weight w;
  w.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw ResourceError("weight coordinate overflow");
    w.push_back(x.get_si());
  }
  return w;
}

}  // namespace

std::optional<std::vector<Weight>> integral_fundamental_weights(
    const RootDatum& rd, std::span<const std::size_t> simple) {
  const IntegerMatrix a = coroot_rows(rd, simple);
  const auto kernel = integer_kernel(a);
  std::vector<Weight> out;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    IntegerVector e(simple.size());
    e[i] = 1;
    const auto sol = solve_linear_diophantine(a, e);
    if (!sol) return std::nullopt;
    out.push_back(to_weight(reduce_modulo(sol->particular, kernel)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Levi subgroups

LeviDatum levi_from_cocharacter(const RootDatum& rd, const Weight& mu) {
  if (mu.size() != rd.rank)
    throw ValidationError(Kind::DimensionMismatch, "cocharacter length differs from the rank");
  LeviDatum levi;
  levi.mu = mu;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    const auto v = pairing(rd.roots[i], mu);
    if (v == 0) levi.roots.push_back(i);
    if (v <= 0) levi.parabolic_minus.push_back(i);
    if (v >= 0) levi.parabolic_plus.push_back(i);
  }
  levi.positive_roots = positive_roots(rd, rd.simple_roots, levi.roots);
  if (levi.roots.empty()) levi.positive_roots.clear();
  std::set<Weight> pos;
  for (std::size_t i : levi.positive_roots) pos.insert(rd.roots[i]);
  for (std::size_t i : levi.positive_roots) {
    bool decomposable = false;
    for (std::size_t j : levi.positive_roots) {
      if (pos.contains(rd.roots[i] - rd.roots[j])) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) levi.simple_roots.push_back(i);
  }
  levi.weyl = weyl_enumerate(rd, levi.simple_roots);
  return levi;
}

LeviDatum full_levi(const RootDatum& rd) {
  return levi_from_cocharacter(rd, Weight(rd.rank, 0));
}

bool is_dominant(const RootDatum& rd, std::span<const std::size_t> simple, const Weight& lambda) {
  for (std::size_t s : simple)
    if (pairing(lambda, rd.coroots[s]) < 0) return false;
  return true;
}

Weight dominant_representative(const RootDatum& rd, std::span<const std::size_t> simple,
                               const Weight& lambda) {
  Weight w = lambda;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s : simple) {
      const auto v = pairing(w, rd.coroots[s]);
      if (v < 0) {
        w = w - v * rd.roots[s];
        changed = true;
      }
    }
  }
  return w;
}

std::vector<Weight> dominant_hilbert_basis(const RootDatum& rd, const LeviDatum* levi) {
  const std::vector<std::size_t>& simple = levi ? levi->simple_roots : rd.simple_roots;
  const std::size_t k = simple.size();
  const IntegerMatrix a = coroot_rows(rd, simple);
  const auto lineality = integer_kernel(a);

  // The image lattice A Z^n inside Z^k; y is in it iff (U y)_i = 0 mod d_i.
  const SmithForm snf = smith_normal_form(a);
  auto in_image = [&](const IntegerVector& y) {
    const IntegerVector uy = snf.U * y;
    for (std::size_t i = 0; i < k; ++i)
      if (!mpz_divisible_p(uy[i].get_mpz_t(), snf.S(i, i).get_mpz_t())) return false;
    return true;
  };
  Integer index = 1;
  for (std::size_t i = 0; i < k; ++i) index *= snf.S(i, i);

  // Smallest positive multiple of each unit vector in the image.
  std::vector<long> box(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (long m = 1; m <= index.get_si(); ++m) {
      IntegerVector y(k);
      y[i] = m;
      if (in_image(y)) {
        box[i] = m;
        break;
      }
    }
  }

  // Minimal nonzero lattice points of the positive orthant, inside the box
  // spanned by the extreme-ray generators.
  std::vector<IntegerVector> points;
  if (k > 0) {
    std::vector<long> y(k, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < k && y[i] == box[i]) y[i++] = 0;
      if (i == k) break;
      ++y[i];
      IntegerVector v = to_integer_vector(y);
      if (in_image(v)) points.push_back(std::move(v));
    }
  }
  std::sort(points.begin(), points.end());
  std::vector<IntegerVector> minimal;
  for (const auto& y : points) {
    bool reducible = false;
    for (const auto& z : points) {
      if (z == y) continue;
      bool below = true;
      for (std::size_t i = 0; i < k && below; ++i) below = z[i] <= y[i];
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) minimal.push_back(y);
  }

  std::vector<Weight> out;
  for (const auto& y : minimal) {
    const auto sol = solve_linear_diophantine(a, y);
    out.push_back(to_weight(reduce_modulo(sol->particular, lineality)));
  }
  for (const auto& v : lineality) {
    out.push_back(to_weight(v));
    out.push_back(-to_weight(v));
  }
  return out;
}

}  // namespace zipk
