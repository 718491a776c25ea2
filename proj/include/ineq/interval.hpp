#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "ineq/rational.hpp"

namespace ineq {

/// Three-way outcome of comparing two enclosures. Touching or overlapping
/// enclosures are Overlap: a certain order is only reported when the
/// enclosures are strictly separated, so equal values never separate no
/// matter the precision.
enum class TriOrder { CertainlyLE, CertainlyGT, Overlap };

const char* tri_order_name(TriOrder o);

/// Outward-rounded enclosure [lo, hi] of a real value. Endpoints are MPFR
/// binary floats at a fixed precision; lo is always rounded toward -inf and
/// hi toward +inf, so the exact result of any supported operation on any
/// points of the inputs lies inside the output.
class Interval {
 public:
  Interval();  // [0, 0] at 64 bits
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  /// Tightest enclosure of an exact rational at the given precision
  /// (a point when the value is representable).
  static Interval of(const Rational& x, mpfr_prec_t bits);
  static Interval of_long(long x, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return bits_; }

  bool lo_finite() const { return mpfr_number_p(lo_) != 0; }
  bool hi_finite() const { return mpfr_number_p(hi_) != 0; }
  bool finite() const { return lo_finite() && hi_finite(); }

  /// Exact value of an endpoint (binary floats are rationals). Finite only.
  Rational lo_rational() const;
  Rational hi_rational() const;
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const { return (lo_double() + hi_double()) / 2; }

  bool is_point() const { return finite() && mpfr_equal_p(lo_, hi_); }
  bool contains(const Rational& q) const;
  bool contains_zero() const;

  /// Exact hi - lo; requires finite endpoints.
  Rational width_bound() const;

  std::string str() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Division by an enclosure containing 0 is a domain error.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  /// Enclosure of {t^e : t in this}. Integer e uses directed endpoint
  /// powers; fractional e requires lo >= 0 and goes through exp(e * ln t)
  /// with outward rounding at every elementary step, with an exact shortcut
  /// when the interval is a point whose power is rational.
  Interval pow(const Rational& e) const;

  friend TriOrder rigorous_compare(const Interval& a, const Interval& b);

 private:
  Interval(mpfr_prec_t bits, bool);  // uninitialized endpoints (internal)

  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t bits_;
};

TriOrder rigorous_compare(const Interval& a, const Interval& b);

}  // namespace ineq
