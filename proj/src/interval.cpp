#include "ineq/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace ineq {

const char* tri_order_name(TriOrder o) {
  switch (o) {
    case TriOrder::CertainlyLE: return "certainly_le";
    case TriOrder::CertainlyGT: return "certainly_gt";
    case TriOrder::Overlap: return "overlap";
  }
  return "?";
}

namespace {

// A NaN endpoint (e.g. 0 * inf in a corner product) is widened to the
// corresponding infinity so the enclosure stays sound.
void fix_nan_lo(mpfr_t x) {
  if (mpfr_nan_p(x)) mpfr_set_inf(x, -1);
}
void fix_nan_hi(mpfr_t x) {
  if (mpfr_nan_p(x)) mpfr_set_inf(x, 1);
}

}  // namespace

Interval::Interval() : Interval(64, true) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(mpfr_prec_t bits, bool) : bits_(bits) {
  if (bits < MPFR_PREC_MIN) throw std::invalid_argument("interval: precision too small");
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

Interval::Interval(const Interval& o) : Interval(o.bits_, true) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : bits_(o.bits_) {
  mpfr_init2(lo_, o.bits_);
  mpfr_init2(hi_, o.bits_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.bits_);
    mpfr_set_prec(hi_, o.bits_);
    bits_ = o.bits_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(bits_, o.bits_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::of(const Rational& x, mpfr_prec_t bits) {
  Interval r(bits, true);
  mpfr_set_q(r.lo_, x.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, x.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::of_long(long x, mpfr_prec_t bits) {
  Interval r(bits, true);
  mpfr_set_si(r.lo_, x, MPFR_RNDD);
  mpfr_set_si(r.hi_, x, MPFR_RNDU);
  return r;
}

Rational Interval::lo_rational() const {
  if (!lo_finite()) throw std::domain_error("interval: non-finite lower endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return Rational(mpz_class(q.get_num()), mpz_class(q.get_den()));
}

Rational Interval::hi_rational() const {
  if (!hi_finite()) throw std::domain_error("interval: non-finite upper endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return Rational(mpz_class(q.get_num()), mpz_class(q.get_den()));
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.raw().get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Rational Interval::width_bound() const { return hi_rational() - lo_rational(); }

std::string Interval::str() const {
  char* ls = nullptr;
  char* hs = nullptr;
  mpfr_asprintf(&ls, "%.8Rg", lo_);
  mpfr_asprintf(&hs, "%.8Rg", hi_);
  std::string out = std::string("[") + ls + ", " + hs + "]";
  mpfr_free_str(ls);
  mpfr_free_str(hs);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.bits_, b.bits_), true);
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  fix_nan_lo(r.lo_);
  fix_nan_hi(r.hi_);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.bits_, b.bits_), true);
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  fix_nan_lo(r.lo_);
  fix_nan_hi(r.hi_);
  return r;
}

Interval Interval::operator-() const {
  Interval r(bits_, true);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

namespace {

// min over the four corner products/quotients rounded down, max rounded up
template <typename Op>
void corner_bounds(mpfr_t out_lo, mpfr_t out_hi, const mpfr_t alo, const mpfr_t ahi,
                   const mpfr_t blo, const mpfr_t bhi, Op op) {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(out_lo));
  const mpfr_srcptr as[2] = {alo, ahi};
  const mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto a : as)
    for (auto b : bs) {
      op(t, a, b, MPFR_RNDD);
      fix_nan_lo(t);
      if (first || mpfr_less_p(t, out_lo)) mpfr_set(out_lo, t, MPFR_RNDD);
      op(t, a, b, MPFR_RNDU);
      fix_nan_hi(t);
      if (first || mpfr_greater_p(t, out_hi)) mpfr_set(out_hi, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.bits_, b.bits_), true);
  corner_bounds(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_,
                [](mpfr_t t, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_mul(t, x, y, rnd); });
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval: division by enclosure containing zero");
  Interval r(std::max(a.bits_, b.bits_), true);
  corner_bounds(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_,
                [](mpfr_t t, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_div(t, x, y, rnd); });
  return r;
}

Interval Interval::pow(const Rational& e) const {
  if (e.is_zero()) return of_long(1, bits_);

  if (e.is_integer() && e.num().fits_slong_p()) {
    long el = e.num().get_si();
    if (el < 0) {
      Interval p = pow(Rational(-el));
      return of_long(1, bits_) / p;
    }
    Interval r(bits_, true);
    bool even = (el % 2 == 0);
    if (!even || mpfr_sgn(lo_) >= 0) {
      mpfr_pow_si(r.lo_, lo_, el, MPFR_RNDD);
      mpfr_pow_si(r.hi_, hi_, el, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
      mpfr_pow_si(r.lo_, hi_, el, MPFR_RNDD);
      mpfr_pow_si(r.hi_, lo_, el, MPFR_RNDU);
    } else {  // straddles zero, even power
      mpfr_set_zero(r.lo_, 1);
      mpfr_t t;
      mpfr_init2(t, bits_);
      mpfr_pow_si(t, lo_, el, MPFR_RNDU);
      mpfr_pow_si(r.hi_, hi_, el, MPFR_RNDU);
      if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      mpfr_clear(t);
    }
    fix_nan_lo(r.lo_);
    fix_nan_hi(r.hi_);
    return r;
  }

  // fractional exponent
  if (is_point()) {
    if (auto v = pow_exact(lo_rational(), e)) return of(*v, bits_);
  }
  if (e.sign() < 0) {
    if (mpfr_sgn(lo_) <= 0)
      throw std::domain_error("interval: negative fractional power of enclosure reaching zero");
    return of_long(1, bits_) / pow(-e);
  }
  if (mpfr_sgn(lo_) < 0)
    throw std::domain_error("interval: fractional power of negative base");

  // exp(e * ln t), outward at every step; ln(0) = -inf, exp(-inf) = 0
  Interval ln(bits_, true);
  mpfr_log(ln.lo_, lo_, MPFR_RNDD);
  mpfr_log(ln.hi_, hi_, MPFR_RNDU);
  Interval prod = of(e, bits_) * ln;
  Interval r(bits_, true);
  mpfr_exp(r.lo_, prod.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, prod.hi_, MPFR_RNDU);
  return r;
}

TriOrder rigorous_compare(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi_, b.lo_)) return TriOrder::CertainlyLE;
  if (mpfr_greater_p(a.lo_, b.hi_)) return TriOrder::CertainlyGT;
  return TriOrder::Overlap;
}

}  // namespace ineq
