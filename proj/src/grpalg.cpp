#include "zipk/grpalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zipk/error.hpp"

namespace zipk {

LaurentPolynomial LaurentPolynomial::monomial(const Weight& exponent, const Integer& coeff) {
  LaurentPolynomial f(exponent.size());
  f.add_term(exponent, coeff);
  return f;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const Integer& c) {
  return monomial(Weight(rank, 0), c);
}

Integer LaurentPolynomial::coefficient(const Weight& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const Weight& exponent, const Integer& coeff) {
  if (exponent.size() != rank_)
    throw ValidationError(ValidationError::Kind::DimensionMismatch,
                          "exponent of rank " + std::to_string(exponent.size()) +
                              " in group algebra of rank " + std::to_string(rank_));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::check_rank(const LaurentPolynomial& other) const {
  if (rank_ != other.rank_)
    throw ValidationError(ValidationError::Kind::DimensionMismatch,
                          "group algebra rank mismatch");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  check_rank(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  check_rank(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_rank(b);
  LaurentPolynomial out(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(rank_, 1);
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& rhs) const {
  return rank_ == rhs.rank_ && terms_ == rhs.terms_;
}

Integer LaurentPolynomial::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  static const char* short_names[] = {"x", "y", "z", "w"};
  auto var = [this](std::size_t i) {
    return rank_ <= 4 ? std::string(short_names[i]) : "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (is_const || mag != 1) os << mag;
    bool need_star = !is_const && mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (need_star ? "*" : "") << var(i);
      if (e[i] != 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

LaurentPolynomial weyl_act(const LatticeMap& w, const LaurentPolynomial& f) {
  LaurentPolynomial out(f.rank());
  for (const auto& [e, c] : f.terms()) out.add_term(w.apply(e), c);
  return out;
}

std::vector<Weight> orbit(const WeylGroup& weyl, const Weight& lambda) {
  std::set<Weight> pts;
  for (const auto& w : weyl.elements) pts.insert(w.apply(lambda));
  return {pts.begin(), pts.end()};
}

LaurentPolynomial orbit_sum(const WeylGroup& weyl, const Weight& lambda) {
  LaurentPolynomial f(lambda.size());
  for (const auto& nu : orbit(weyl, lambda)) f.add_term(nu, 1);
  return f;
}

bool is_invariant(const WeylGroup& weyl, const LaurentPolynomial& f) {
  for (const auto& w : weyl.elements)
    if (weyl_act(w, f) != f) return false;
  return true;
}

LaurentPolynomial frobenius(const LaurentPolynomial& f, long p,
                            const std::optional<LatticeMap>& twist) {
  LaurentPolynomial out(f.rank());
  for (const auto& [e, c] : f.terms()) {
    const Weight t = twist ? twist->apply(e) : e;
    out.add_term(static_cast<std::int64_t>(p) * t, c);
  }
  return out;
}

LaurentPolynomial divide_by_one_minus(const LaurentPolynomial& f, const Weight& alpha) {
  std::size_t axis = 0;
  while (axis < alpha.size() && alpha[axis] == 0) ++axis;
  if (axis == alpha.size()) throw InternalError("division by 1 - e^0");
  // Orient beta = +-alpha with positive coordinate on `axis`; every exponent
  // is chi0 + k beta with chi0[axis] in [0, beta[axis]).
  const std::int64_t sign = alpha[axis] > 0 ? 1 : -1;
  const Weight beta = sign * alpha;
  const std::int64_t step = beta[axis];

  // coset representative -> (power of y = e^{-alpha}) -> coefficient
  std::map<Weight, std::map<std::int64_t, Integer>> strings;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t k = e[axis] / step;
    if (e[axis] % step < 0) --k;
    const Weight chi0 = e - k * beta;
    // e = chi0 + k beta = chi0 + (sign k) alpha, i.e. y^{-sign k}
    strings[chi0][-sign * k] += c;
  }

  LaurentPolynomial q(f.rank());
  for (const auto& [chi0, poly] : strings) {
    // (1 - y) q(y) = P(y): q_j = sum_{i <= j} c_i, exact iff sum c_i = 0.
    const std::int64_t lo = poly.begin()->first;
    const std::int64_t hi = poly.rbegin()->first;
    Integer running = 0;
    for (std::int64_t j = lo; j <= hi; ++j) {
      const auto it = poly.find(j);
      if (it != poly.end()) running += it->second;
      if (j < hi) q.add_term(chi0 - (j * sign) * beta, running);
    }
    if (running != 0)
      throw InternalError("inexact division by 1 - e^{-alpha} in the Demazure numerator");
  }
  return q;
}

LaurentPolynomial demazure(const RootDatum& rd, std::size_t root, const LaurentPolynomial& f) {
  const Weight& alpha = rd.roots.at(root);
  const LatticeMap s = LatticeMap::reflection(alpha, rd.coroots.at(root));
  const LaurentPolynomial shifted = LaurentPolynomial::monomial(-alpha) * weyl_act(s, f);
  return divide_by_one_minus(f - shifted, alpha);
}

LaurentPolynomial demazure_word(const RootDatum& rd, const WeylGroup& weyl,
                                std::span<const std::size_t> word, const LaurentPolynomial& f) {
  for (std::size_t pos : word)
    if (pos >= weyl.generators.size())
      throw ValidationError(ValidationError::Kind::NotReduced, "word letter out of range");
  const auto idx = weyl.index_of(weyl.element_of_word(rd, word));
  if (!idx || weyl.reduced_words[*idx].size() != word.size())
    throw ValidationError(ValidationError::Kind::NotReduced, "word is not reduced");
  LaurentPolynomial out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = demazure(rd, weyl.generators[*it], out);
  return out;
}

LaurentPolynomial demazure_character(const RootDatum& rd, const WeylGroup& weyl,
                                     const Weight& lambda) {
  if (!is_dominant(rd, weyl.generators, lambda))
    throw ValidationError(ValidationError::Kind::NotDominant,
                          "weight " + to_string(lambda) + " is not dominant");
  return demazure_word(rd, weyl, weyl.reduced_words[weyl.longest],
                       LaurentPolynomial::monomial(lambda));
}

// ---------------------------------------------------------------------------
// Window computations

std::vector<Weight> window_points(std::size_t rank, long bound) {
  std::vector<Weight> pts;
  Weight w(rank, -bound);
  for (;;) {
    pts.push_back(w);
    std::size_t i = rank;
    while (i > 0 && w[i - 1] == bound) w[--i] = -bound;
    if (i == 0) return pts;
    ++w[i - 1];
  }
}

std::vector<LaurentPolynomial> WindowLattice::elements() const {
  std::vector<LaurentPolynomial> out;
  const std::size_t rank = points.empty() ? 0 : points.front().size();
  for (const auto& v : basis) {
    LaurentPolynomial f(rank);
    for (std::size_t i = 0; i < points.size(); ++i) f.add_term(points[i], v[i]);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::map<Weight, std::size_t> index_points(const std::vector<Weight>& pts) {
  std::map<Weight, std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i], i);
  return idx;
}

// Kernel of the linear map sending window basis vector j to images[j].
WindowLattice kernel_of(const std::vector<Weight>& pts,
                        const std::vector<std::vector<LaurentPolynomial>>& images_per_constraint) {
  std::map<std::pair<std::size_t, Weight>, std::size_t> rows;
  for (std::size_t c = 0; c < images_per_constraint.size(); ++c)
    for (const auto& img : images_per_constraint[c])
      for (const auto& [e, coeff] : img.terms()) rows.try_emplace({c, e}, rows.size());
  IntegerMatrix m(rows.size(), pts.size());
  for (std::size_t c = 0; c < images_per_constraint.size(); ++c)
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (const auto& [e, coeff] : images_per_constraint[c][j].terms())
        m(rows.at({c, e}), j) = coeff;
  WindowLattice out;
  out.points = pts;
  out.basis = integer_kernel(m);
  return out;
}

}  // namespace

WindowLattice window_span(std::size_t rank, long bound,
                          const std::vector<LaurentPolynomial>& elements) {
  WindowLattice out;
  out.points = window_points(rank, bound);
  const auto idx = index_points(out.points);
  std::vector<IntegerVector> vecs;
  for (const auto& f : elements) {
    IntegerVector v(out.points.size());
    for (const auto& [e, c] : f.terms()) {
      const auto it = idx.find(e);
      if (it == idx.end())
        throw ValidationError(ValidationError::Kind::DimensionMismatch,
                              "element leaves the window");
      v[it->second] = c;
    }
    vecs.push_back(std::move(v));
  }
  out.basis = lattice_basis(out.points.size(), vecs);
  return out;
}

WindowLattice hecke_invariants_window(const RootDatum& rd, std::span<const std::size_t> simple,
                                      long bound) {
  const auto pts = window_points(rd.rank, bound);
  std::vector<std::vector<LaurentPolynomial>> images;
  for (std::size_t s : simple) {
    const LatticeMap refl = LatticeMap::reflection(rd.roots[s], rd.coroots[s]);
    std::vector<LaurentPolynomial> dem, refl_img;
    for (const auto& p : pts) {
      const auto mono = LaurentPolynomial::monomial(p);
      dem.push_back(demazure(rd, s, mono) - mono);
      refl_img.push_back(weyl_act(refl, mono) - mono);
    }
    images.push_back(std::move(dem));
    images.push_back(std::move(refl_img));
  }
  return kernel_of(pts, images);
}

WindowLattice weyl_invariants_window(const RootDatum& rd, const WeylGroup& weyl, long bound) {
  const auto pts = window_points(rd.rank, bound);
  std::vector<std::vector<LaurentPolynomial>> images;
  for (const auto& w : weyl.elements) {
    std::vector<LaurentPolynomial> img;
    for (const auto& p : pts) {
      const auto mono = LaurentPolynomial::monomial(p);
      img.push_back(weyl_act(w, mono) - mono);
    }
    images.push_back(std::move(img));
  }
  return kernel_of(pts, images);
}

}  // namespace zipk
