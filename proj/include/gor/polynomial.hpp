#pragma once

// Standard graded polynomial rings k[x_1..x_n]: monomials, monomial orders,
// sparse polynomials, and the text grammar used by ideal files.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gor/error.hpp"
#include "gor/field.hpp"

namespace gor {

class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;

  Monomial() = default;

  explicit Monomial(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw InfeasibleSize("more than 32 variables");
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t i) {
    Monomial m;
    m.set(i, 1);
    return m;
  }

  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, int e) {
    if (e < 0 || e > 255) throw BadParameter("exponent out of range");
    deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + e);
    e_[i] = static_cast<std::uint8_t>(e);
  }

  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i]) s |= 1u << i;
    return s;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      int e = e_[i] + o.e_[i];
      if (e > 255) throw BadParameter("exponent overflow");
      r.e_[i] = static_cast<std::uint8_t>(e);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return r;
  }

  /// Quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = std::max(e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  bool coprime(const Monomial& o) const { return (support() & o.support()) == 0; }

  /// Index of the first variable with a positive exponent, or -1.
  int first_variable() const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i]) return static_cast<int>(i);
    return -1;
  }
  int last_variable() const {
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (e_[i]) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : e_) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { grevlex, lex, elimination };

/// A monomial order. `elimination` compares the first `block` variables by
/// grevlex first and breaks ties by grevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block = 0;

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < Monomial::kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::elimination: {
        if (int c = grevlex_range(a, b, 0, block); c != 0) return c;
        return grevlex_range(a, b, block, Monomial::kMaxVars);
      }
      case OrderKind::grevlex:
      default:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = Monomial::kMaxVars; i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
  }

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

template <class F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> names, MonomialOrder order = {})
      : field_(std::move(field)), names_(std::move(names)), order_(order) {
    if (names_.empty()) throw BadParameter("a polynomial ring needs at least one variable");
    if (names_.size() > Monomial::kMaxVars)
      throw InfeasibleSize("rings with more than " + std::to_string(Monomial::kMaxVars) + " variables are not supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& s = names_[i];
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        throw BadParameter("bad variable name '" + s + "'");
      for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw BadParameter("bad variable name '" + s + "'");
      if (!index_.emplace(s, static_cast<int>(i)).second) throw BadParameter("duplicate variable '" + s + "'");
    }
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  int var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  bool operator==(const PolyRing& o) const {
    return names_ == o.names_ && field_.spec() == o.field_.spec() && order_ == o.order_;
  }

  std::string monomial_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names_[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  /// All monomials of the given degree, ascending in the ring order.
  std::vector<Monomial> monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    std::vector<int> e(nvars(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == nvars()) {
        e[i] = left;
        out.emplace_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (d >= 0) rec(0, d);
    std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return compare(a, b) < 0; });
    return out;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::unordered_map<std::string, int> index_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names, MonomialOrder order = {}) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(names), order);
}

/// Sparse polynomial with terms sorted strictly descending in the ring order.
template <class F>
class Polynomial {
 public:
  using E = typename F::Element;
  using Term = std::pair<Monomial, E>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Normalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& R = *p.ring_;
    std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) { return R.compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = R.field().add(p.terms_.back().second, t.second);
        if (R.field().is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!R.field().is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, E c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    return p;
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    auto one = ring->field().one();
    return monomial(std::move(ring), Monomial::variable(i), one);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const E& leading_coefficient() const { return terms_.front().second; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.degree() != terms_.front().first.degree()) return false;
    return true;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, ring_->field().one()); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, ring_->field().neg(ring_->field().one())); }

  /// this + c * m * o
  Polynomial add_multiple(const Polynomial& o, const E& c, const Monomial& m) const {
    check_ring(o);
    const auto& R = *ring_;
    const auto& K = R.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial mj = o.terms_[j].first * m;
      int cmp = i == terms_.size() ? -1 : R.compare(terms_[i].first, mj);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.emplace_back(mj, K.mul(c, o.terms_[j].second));
        ++j;
      } else {
        E v = K.add(terms_[i].second, K.mul(c, o.terms_[j].second));
        if (!K.is_zero(v)) r.terms_.emplace_back(mj, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r = r.add_multiple(o, c, m);
    return r;
  }

  Polynomial scaled(const E& c) const {
    Polynomial r(ring_);
    if (ring_->field().is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second = ring_->field().mul(t.second, c);
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, c] : terms_) r.terms_.emplace_back(mm * m, c);
    return r;
  }

  /// Removes the leading term.
  void drop_leading() { terms_.erase(terms_.begin()); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coefficient()));
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].first != o.terms_[i].first || !ring_->field().equal(terms_[i].second, o.terms_[i].second))
        return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto& K = ring_->field();
    std::string s;
    for (const auto& [m, c] : terms_) {
      bool neg = K.is_negative(c);
      E a = neg ? K.neg(c) : c;
      if (neg) s += '-';
      else if (!s.empty()) s += '+';
      if (m.is_one()) {
        s += K.to_string(a);
      } else {
        if (!K.is_one(a)) s += K.to_string(a) + "*";
        s += ring_->monomial_string(m);
      }
    }
    return s;
  }

 private:
  Polynomial combine(const Polynomial& o, const E& c) const { return add_multiple(o, c, Monomial{}); }

  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && *ring_ == *o.ring_)) throw RingMismatch();
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Generators of a homogeneous ideal.
template <class F>
struct Ideal {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> generators;

  Ideal() = default;
  Ideal(RingPtr<F> r, std::vector<Polynomial<F>> gens) : ring(std::move(r)), generators(std::move(gens)) {
    for (const auto& g : generators) {
      if (!g.is_zero() && g.ring() != ring && !(*g.ring() == *ring)) throw RingMismatch();
      if (!g.is_homogeneous()) throw BadParameter("ideal generator '" + g.to_string() + "' is not homogeneous");
    }
  }
};

namespace detail {

// Grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor | '/' integer)*
//   factor  := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
template <class F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr<F>& ring) : s_(text), ring_(ring) {}

  Polynomial<F> parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial<F> p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> constant(const BigRational& q) const {
    return Polynomial<F>::monomial(ring_, Monomial{}, ring_->field().from_rational(q));
  }

  Polynomial<F> expr() {
    Polynomial<F> acc(ring_);
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!eat('+') && !first) break;
      first = false;
      Polynomial<F> t = term();
      acc = neg ? acc - t : acc + t;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        skip();
        std::size_t at = pos_;
        BigInt d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        acc = acc * constant(BigRational(BigInt(1), d));
      } else {
        skip();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '('))
          throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
        return acc;
      }
    }
  }

  Polynomial<F> factor() {
    Polynomial<F> base = primary();
    if (eat('^')) {
      skip();
      std::size_t at = pos_;
      BigInt e = integer();
      if (e > 255) throw ParseError("exponent too large", at);
      Polynomial<F> r = constant(BigRational(1));
      for (long k = 0; k < e.get_si(); ++k) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial<F> primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(BigRational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->var_index(name);
      if (idx < 0) throw UnknownVariable(name, start);
      return Polynomial<F>::variable(ring_, static_cast<std::size_t>(idx));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).parse();
}

template <class F>
Ideal<F> parse_ideal(const std::vector<std::string>& gens, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
  return Ideal<F>(ring, std::move(ps));
}

}  // namespace gor
