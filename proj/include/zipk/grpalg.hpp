#pragma once

// The group algebra Z[X*(T)] = R(T): finite Z-combinations of characters
// e^chi, with the Weyl action, Frobenius twist and Demazure operators.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zipk/lattice.hpp"
#include "zipk/rootdata.hpp"

namespace zipk {

class LaurentPolynomial {
 public:
  using TermMap = std::map<Weight, Integer>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

  static LaurentPolynomial monomial(const Weight& exponent, const Integer& coeff = 1);
  static LaurentPolynomial constant(std::size_t rank, const Integer& c);

  std::size_t rank() const noexcept { return rank_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coefficient(const Weight& exponent) const;

  void add_term(const Weight& exponent, const Integer& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const Integer& k);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Integer& k) { return a *= k; }
  friend LaurentPolynomial operator*(const Integer& k, LaurentPolynomial a) { return a *= k; }
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial pow(unsigned e) const;

  bool operator==(const LaurentPolynomial& rhs) const;

  /// Value at every torus coordinate equal to 1 (the dimension of a character).
  Integer evaluate_at_one() const;

  /// x, y, z, w for rank <= 4, otherwise x1, x2, ...
  std::string to_string() const;

 private:
  void check_rank(const LaurentPolynomial& other) const;

  std::size_t rank_ = 0;
  TermMap terms_;
};

/// e^chi -> e^{w chi}, extended linearly.
LaurentPolynomial weyl_act(const LatticeMap& w, const LaurentPolynomial& f);

/// Sorted W-orbit of lambda.
std::vector<Weight> orbit(const WeylGroup& weyl, const Weight& lambda);

/// m_lambda: each orbit element once.
LaurentPolynomial orbit_sum(const WeylGroup& weyl, const Weight& lambda);

bool is_invariant(const WeylGroup& weyl, const LaurentPolynomial& f);

/// e^chi -> e^{p * twist(chi)}.
LaurentPolynomial frobenius(const LaurentPolynomial& f, long p,
                            const std::optional<LatticeMap>& twist = std::nullopt);

/// Exact quotient of f by (1 - e^{-alpha}); throws InternalError if the
/// division leaves a remainder.
LaurentPolynomial divide_by_one_minus(const LaurentPolynomial& f, const Weight& alpha);

/// delta_alpha(f) = (f - e^{-alpha} s_alpha(f)) / (1 - e^{-alpha}).
LaurentPolynomial demazure(const RootDatum& rd, std::size_t root, const LaurentPolynomial& f);

/// delta_{a_1} o ... o delta_{a_k}(f) for a word of positions into
/// weyl.generators. Throws ValidationError(NotReduced) for non-reduced words.
LaurentPolynomial demazure_word(const RootDatum& rd, const WeylGroup& weyl,
                                std::span<const std::size_t> word, const LaurentPolynomial& f);

/// delta_{w0}(e^lambda) for lambda dominant.
LaurentPolynomial demazure_character(const RootDatum& rd, const WeylGroup& weyl,
                                     const Weight& lambda);

/// Box [-bound, bound]^rank of exponents, in lexicographic order.
std::vector<Weight> window_points(std::size_t rank, long bound);

/// A finite-rank Z-lattice of group-algebra elements supported in a window,
/// stored as a canonical (Hermite) basis of coefficient vectors over
/// `points`.
struct WindowLattice {
  std::vector<Weight> points;
  std::vector<IntegerVector> basis;

  std::size_t rank() const noexcept { return basis.size(); }
  std::vector<LaurentPolynomial> elements() const;
  bool operator==(const WindowLattice&) const = default;
};

/// Canonical lattice spanned by `elements` inside the window; throws if an
/// element leaves the window.
WindowLattice window_span(std::size_t rank, long bound,
                          const std::vector<LaurentPolynomial>& elements);

/// Z-basis of {f supported in [-bound, bound]^rank : (delta_alpha - 1) f = 0
/// and (s_alpha - 1) f = 0 for every simple alpha in `simple`}.
WindowLattice hecke_invariants_window(const RootDatum& rd, std::span<const std::size_t> simple,
                                      long bound);

/// Z-basis of the window elements fixed by every element of `weyl`.
WindowLattice weyl_invariants_window(const RootDatum& rd, const WeylGroup& weyl, long bound);

}  // namespace zipk
