#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ineq {

/// Exact arbitrary-precision rational, always in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
///
/// Serializes as "num/den" in base 10, or plain "num" when the
/// denominator is 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "n" or "n/d" (optionally signed). Throws std::invalid_argument
  /// on malformed input or a zero denominator.
  static Rational parse(std::string_view s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_one() const { return v_ == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational reciprocal() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // gmpxx keeps results canonical for arithmetic; ctors canonicalize
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// Exact integer power. e = 0 yields 1 (including 0^0); a zero base with
/// e < 0 is a domain error.
Rational pow_int(const Rational& x, long e);

/// Exact q-th root when one exists: the unique r with r^q = x (x >= 0, or
/// q odd). Returns nullopt when x has no rational q-th root.
std::optional<Rational> exact_root(const Rational& x, unsigned long q);

/// Exact rational power x^e when the result is rational: integer e always,
/// fractional e = p/q only when x is a perfect q-th power.
std::optional<Rational> pow_exact(const Rational& x, const Rational& e);

/// lcm of the (integer) values of a rational vector; every element must be
/// a positive integer.
mpz_class integer_lcm(const std::vector<Rational>& values);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ineq
