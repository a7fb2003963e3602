#include "zipk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "zipk/error.hpp"

namespace zipk {

Monomial Monomial::from_exponents(std::span<const std::uint32_t> e) {
  if (e.size() > kMaxVariables) throw ResourceError("too many polynomial variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0xFFFF) throw ResourceError("exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e[i]);
    m.degree += e[i];
    if (e[i]) m.support |= (1u << i);
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree > other.degree || (support & ~other.support)) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint32_t s = std::uint32_t{a.exp[i]} + b.exp[i];
    if (s > 0xFFFF) throw ResourceError("exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(s);
  }
  m.degree = a.degree + b.degree;
  m.support = a.support | b.support;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    if (m.exp[i]) m.support |= (1u << i);
  }
  m.degree = a.degree - b.degree;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  m.support = a.support | b.support;
  return m;
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order,
                   std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs)
    : names_(std::move(names)), order_(std::move(order)), inverse_pairs_(std::move(inverse_pairs)) {
  if (names_.size() > kMaxVariables) throw ResourceError("too many polynomial variables");
  std::vector<bool> used(names_.size(), false);
  for (auto [a, b] : inverse_pairs_) {
    if (a >= names_.size() || b >= names_.size() || a == b || used[a] || used[b])
      throw ParseError("inverse pairs must be disjoint pairs of distinct variables");
    used[a] = used[b] = true;
  }
  if (order_.kind == OrderKind::BlockGrevlex) {
    std::size_t begin = 0;
    for (std::size_t s : order_.block_sizes) {
      blocks_.emplace_back(begin, begin + s);
      begin += s;
    }
    if (begin != names_.size()) throw ParseError("elimination blocks must partition the variables");
  } else {
    blocks_.emplace_back(0, names_.size());
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (order_.kind == OrderKind::Lex) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    return 0;
  }
  if (blocks_.size() == 1) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    for (std::size_t i = names_.size(); i-- > 0;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    return 0;
  }
  for (auto [begin, end] : blocks_) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = begin; i < end; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = end; i-- > begin;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

std::string PolyRing::monomial_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m.exp[i] != 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order,
                  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs) {
  return std::make_shared<const PolyRing>(std::move(names), std::move(order),
                                          std::move(inverse_pairs));
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const PolyRing& r = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Integer& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(ring->num_vars(), 0);
  e.at(index) = power;
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::from_exponents(e), 1});
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.m.exp[var]) return true;
  return false;
}

namespace {

// a + k * b, both sorted decreasingly.
std::vector<Term> merge_add(const PolyRing& r, const std::vector<Term>& a, const std::vector<Term>& b,
                            const Integer& k) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = r.compare(a[i].m, b[j].m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].m, k * b[j].c});
      ++j;
    } else {
      Integer c = a[i].c + k * b[j].c;
      if (c != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a && b && a != b && (a->names() != b->names() || !(a->order() == b->order())))
    throw ValidationError(ValidationError::Kind::DimensionMismatch,
                          "polynomials from different rings");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_ring(ring_, rhs.ring_);
  if (!ring_) ring_ = rhs.ring_;
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_add(*ring_, terms_, rhs.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_ring(ring_, rhs.ring_);
  if (!ring_) ring_ = rhs.ring_;
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_add(*ring_, terms_, rhs.terms_, -1);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a.ring_, b.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
  return Polynomial::from_terms(a.ring_ ? a.ring_ : b.ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Integer& k, const Monomial& shift) const {
  Polynomial out(ring_);
  if (k == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.m * shift, k * t.c});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == rhs.terms_[i].m) || terms_[i].c != rhs.terms_[i].c) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Integer mag = abs(t.c);
    if (first)
      os << (t.c < 0 ? "-" : "");
    else
      os << (t.c < 0 ? " - " : " + ");
    first = false;
    if (t.m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << ring_->monomial_string(t.m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }
  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }
  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  Polynomial primary() {
    skip_ws();
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target,
                       const std::vector<std::size_t>& var_map) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(target->num_vars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (!t.m.exp[i]) continue;
      if (var_map[i] >= e.size()) throw ValidationError(ValidationError::Kind::DimensionMismatch,
                                                        "variable not present in target ring");
      e[var_map[i]] += t.m.exp[i];
    }
    for (std::size_t i = var_map.size(); i < kMaxVariables; ++i)
      if (t.m.exp[i])
        throw ValidationError(ValidationError::Kind::DimensionMismatch,
                              "variable not covered by the ring map");
    terms.push_back({Monomial::from_exponents(e), t.c});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace zipk
