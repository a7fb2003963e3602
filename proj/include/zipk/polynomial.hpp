#pragma once

// Multivariate polynomials over Z with a fixed monomial order. Laurent rings
// are modelled by pairing a variable with an explicit inverse variable.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zipk/lattice.hpp"

namespace zipk {

inline constexpr std::size_t kMaxVariables = 32;

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;
  std::uint32_t support = 0;  // bit i set iff exp[i] > 0

  static Monomial from_exponents(std::span<const std::uint32_t> e);

  bool divides(const Monomial& other) const noexcept;
  bool operator==(const Monomial& other) const noexcept { return exp == other.exp; }
  bool is_one() const noexcept { return degree == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.support & b.support) == 0;
  }
};

enum class OrderKind { Grevlex, Lex, BlockGrevlex };

/// Block orders compare the blocks (consecutive runs of variables, in
/// order) one after another, each by graded reverse lexicographic order.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<std::size_t> block_sizes;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder block(std::vector<std::size_t> sizes) {
    return {OrderKind::BlockGrevlex, std::move(sizes)};
  }
  bool operator==(const MonomialOrder&) const = default;
};

class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, MonomialOrder order = {},
           std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs = {});

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& inverse_pairs() const noexcept {
    return inverse_pairs_;
  }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  std::string monomial_string(const Monomial& m) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;  // [begin, end)
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = {},
                  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs = {});

struct Term {
  Monomial m;
  Integer c;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts and combines like terms; zero coefficients are dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Integer& c);
  static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  /// Terms in strictly decreasing monomial order.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().m; }
  const Integer& leading_coefficient() const { return terms_.front().c; }
  std::uint32_t total_degree() const;
  bool involves(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Integer& k, const Monomial& shift) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& rhs) const;

  std::string to_string() const;

 private:
  friend class Reducer;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses expressions such as "2*x^3 - x*y + (y - 1)^2" over `ring`.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Moves f into `target`, sending variable i to variable var_map[i].
Polynomial change_ring(const Polynomial& f, const RingPtr& target,
                       const std::vector<std::size_t>& var_map);

}  // namespace zipk
