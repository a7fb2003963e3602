#pragma once

// Root data, Weyl groups and the Levi subgroup cut out by a cocharacter.
//
// Characters X*(T) and cocharacters X_*(T) are both modelled as Z^rank with
// the dot product as pairing. A RootDatum lists roots and coroots paired by
// index; simple roots are given by index into `roots`.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zipk/lattice.hpp"

namespace zipk {

using Weight = std::vector<std::int64_t>;

std::int64_t pairing(const Weight& character, const Weight& cocharacter);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(std::int64_t k, const Weight& a);
std::string to_string(const Weight& w);

/// Square integer matrix acting on Z^n by v -> M v (row-major storage).
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(std::size_t n);
  LatticeMap(std::size_t n, std::vector<std::int64_t> entries);

  static LatticeMap identity(std::size_t n);
  /// s(v) = v - <v, coroot> root.
  static LatticeMap reflection(const Weight& root, const Weight& coroot);

  std::size_t dim() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const noexcept { return m_; }

  Weight apply(const Weight& v) const;
  LatticeMap operator*(const LatticeMap& rhs) const;
  LatticeMap transpose() const;
  /// Integer inverse; nullopt unless |det| = 1.
  std::optional<LatticeMap> inverse() const;
  IntegerMatrix to_matrix() const;

  auto operator<=>(const LatticeMap&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> m_;
};

struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<Weight> roots;
  std::vector<Weight> coroots;
  std::vector<std::size_t> simple_roots;
  /// Finite-order automorphism of X*(T) permuting the simple roots; the
  /// Frobenius acts on characters by chi -> p * twist(chi).
  std::optional<LatticeMap> twist;
};

/// Throws ValidationError naming the first violated root-datum axiom.
void validate(const RootDatum& rd);

/// Root datum by preset name: SL2 SL3 SL4 GL2 GL3 Sp4 PGL2 Gm Gm^2 A1xA1.
RootDatum preset(std::string_view name);
std::vector<std::string> preset_names();

/// Simply connected semisimple datum with the given Cartan matrix
/// a[i][j] = <alpha_j, alpha_i^vee>, in fundamental-weight coordinates.
RootDatum simply_connected_from_cartan(const std::vector<std::vector<std::int64_t>>& cartan,
                                       std::string name = {});

/// Coordinates of a root in the basis of `simple` (nullopt if not in span).
std::optional<std::vector<Rational>> simple_coordinates(const RootDatum& rd,
                                                        std::span<const std::size_t> simple,
                                                        const Weight& root);

/// Indices of positive roots relative to the simple system `simple`, among
/// the candidate indices `within` (all roots when empty).
std::vector<std::size_t> positive_roots(const RootDatum& rd, std::span<const std::size_t> simple,
                                        std::span<const std::size_t> within = {});

std::optional<std::size_t> find_root(const RootDatum& rd, const Weight& root);

/// Cartan matrix a[i][j] = <alpha_j, alpha_i^vee> over the given simple roots.
std::vector<std::vector<std::int64_t>> cartan_matrix(const RootDatum& rd,
                                                     std::span<const std::size_t> simple);

struct WeylGroup {
  std::size_t rank = 0;
  /// Root indices of the generating simple reflections; reduced words use
  /// positions into this list.
  std::vector<std::size_t> generators;
  std::vector<LatticeMap> elements;
  std::vector<std::vector<std::size_t>> reduced_words;
  std::size_t longest = 0;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const LatticeMap& w) const;
  /// Product of the simple reflections along `word`.
  LatticeMap element_of_word(const RootDatum& rd, std::span<const std::size_t> word) const;

 private:
  friend WeylGroup weyl_enumerate(const RootDatum&, std::span<const std::size_t>, std::size_t);
  std::map<std::vector<std::int64_t>, std::size_t> lookup_;
};

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// Breadth-first closure of the simple reflections; each element carries a
/// shortest (hence reduced) word. Throws ResourceError past `cap` elements.
WeylGroup weyl_enumerate(const RootDatum& rd, std::span<const std::size_t> simple,
                         std::size_t cap = kDefaultWeylCap);
WeylGroup weyl_enumerate(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

/// Number of positive roots (among `positive`) sent to negative roots by w.
std::size_t inversion_count(const RootDatum& rd, std::span<const std::size_t> positive,
                            const LatticeMap& w);

/// pi_1 = X_*(T) / Z Phi^vee.
AbelianGroup fundamental_group(const RootDatum& rd);
bool is_derived_simply_connected(const RootDatum& rd);

/// eta_alpha in X*(T) (x) Q, <eta_alpha, beta^vee> = delta, lying in span(Phi).
std::vector<std::vector<Rational>> fundamental_weights(const RootDatum& rd);

/// Integral weights with <omega_alpha, beta^vee> = delta over the given simple
/// roots; nullopt when none exist (derived group not simply connected).
std::optional<std::vector<Weight>> integral_fundamental_weights(
    const RootDatum& rd, std::span<const std::size_t> simple);

struct LeviDatum {
  Weight mu;
  std::vector<std::size_t> roots;           // <alpha, mu> = 0
  std::vector<std::size_t> positive_roots;  // roots intersected with Phi+
  std::vector<std::size_t> simple_roots;
  std::vector<std::size_t> parabolic_minus;  // <alpha, mu> <= 0
  std::vector<std::size_t> parabolic_plus;   // <alpha, mu> >= 0
  WeylGroup weyl;
};

LeviDatum levi_from_cocharacter(const RootDatum& rd, const Weight& mu);
/// The Levi datum of mu = 0, i.e. G itself.
LeviDatum full_levi(const RootDatum& rd);

/// Generators of the monoid {lambda : <lambda, alpha^vee> >= 0} over the
/// simple roots of `levi` (of G when null): the Hilbert basis of the pointed
/// part followed by +/- a basis of the lineality lattice.
std::vector<Weight> dominant_hilbert_basis(const RootDatum& rd, const LeviDatum* levi = nullptr);

/// Whether lambda pairs non-negatively with every simple coroot in `simple`.
bool is_dominant(const RootDatum& rd, std::span<const std::size_t> simple, const Weight& lambda);

/// The representative of W.lambda that is dominant for `simple`.
Weight dominant_representative(const RootDatum& rd, std::span<const std::size_t> simple,
                               const Weight& lambda);

}  // namespace zipk
