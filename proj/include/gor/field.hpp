#pragma once

// Exact coefficient fields: the rationals (GMP) and word-sized prime fields.
//
// Algorithms are templated on a field policy with a nested `Element` type and
// member functions for the field operations. Elements are plain values; the
// policy object carries the characteristic.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "gor/error.hpp"

namespace gor {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Deterministic primality test for 32-bit integers (Miller-Rabin, bases 2, 7, 61).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for n < 3.4e14; 12 bases cover all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p <= 2) throw BadParameter("prime field characteristic must exceed 2");
    if (p >= (1ull << 31)) throw BadParameter("prime field characteristic must be below 2^31");
    if (!is_prime(p)) throw BadParameter("characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::prime, static_cast<std::uint32_t>(p)};
  }

  /// Parses "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "fp:") {
      auto digits = text.substr(3);
      if (digits.empty() || digits.size() > 12) throw BadParameter("bad field '" + std::string(text) + "'");
      std::uint64_t p = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') throw BadParameter("bad field '" + std::string(text) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return prime(p);
    }
    throw BadParameter("bad field '" + std::string(text) + "' (expected q or fp:<p>)");
  }

  std::string str() const { return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p); }

  std::uint64_t characteristic() const { return kind == Kind::rationals ? 0 : p; }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && (kind == Kind::rationals || p == o.p); }
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(FieldSpec::prime(p).p) {}

  FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p_}; }
  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_bigint(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_rational(const BigRational& q) const {
    return div(from_bigint(q.get_num()), from_bigint(q.get_den()));
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// a - b*c
  Element sub_mul(Element a, Element b, Element c) const { return sub(a, mul(b, c)); }

  Element inv(Element a) const {
    if (a == 0) throw DivisionByZero();
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
      std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2].
  long long to_int(Element a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_) : static_cast<long long>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_int(a)); }
  bool is_negative(Element a) const { return to_int(a) < 0; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = BigRational;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_bigint(const BigInt& v) const { return Element(v); }
  Element from_rational(const BigRational& q) const { return q; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub_mul(const Element& a, const Element& b, const Element& c) const { return a - b * c; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw DivisionByZero();
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
};

/// Invokes `fn` with the field policy object named by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

inline BigInt binomial(const BigInt& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline BigInt binomial(long n, long k) { return binomial(BigInt(n), k); }

/// The bracket [x] = max{x, 0}.
inline BigInt truncate_nonneg(const BigInt& x) { return x < 0 ? BigInt(0) : x; }

}  // namespace gor
