#include "ineq/rational.hpp"

#include <cctype>
#include <ostream>

namespace ineq {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);  // operator/ canonicalizes
}

Rational Rational::parse(std::string_view s) {
  auto valid = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string_view numpart = s, denpart;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    numpart = s.substr(0, slash);
    denpart = s.substr(slash + 1);
    if (!valid(denpart)) throw std::invalid_argument("rational: bad denominator in '" + std::string(s) + "'");
  }
  if (!valid(numpart)) throw std::invalid_argument("rational: bad numerator in '" + std::string(s) + "'");

  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
  if (v.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(s) + "'");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("rational: reciprocal of zero");
  return Rational(1) / *this;
}

Rational pow_int(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x.is_zero() && e < 0) throw std::domain_error("rational: zero base with negative exponent");
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), x.num().get_mpz_t(), ue);
  mpz_pow_ui(pd.get_mpz_t(), x.den().get_mpz_t(), ue);
  return e > 0 ? Rational(pn, pd) : Rational(pd, pn);
}

std::optional<Rational> exact_root(const Rational& x, unsigned long q) {
  if (q == 0) throw std::domain_error("rational: zeroth root");
  if (q == 1) return x;
  if (x.sign() < 0 && q % 2 == 0) return std::nullopt;
  mpz_class rn, rd;
  // mpz_root returns nonzero iff the root is exact
  if (mpz_root(rn.get_mpz_t(), x.num().get_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), x.den().get_mpz_t(), q) == 0) return std::nullopt;
  return Rational(rn, rd);
}

std::optional<Rational> pow_exact(const Rational& x, const Rational& e) {
  if (e.is_integer()) {
    if (!e.num().fits_slong_p()) return std::nullopt;
    return pow_int(x, e.num().get_si());
  }
  if (!e.den().fits_ulong_p() || !e.num().fits_slong_p()) return std::nullopt;
  auto root = exact_root(x, e.den().get_ui());
  if (!root) return std::nullopt;
  return pow_int(*root, e.num().get_si());
}

mpz_class integer_lcm(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    if (!v.is_integer() || v.sign() <= 0)
      throw std::invalid_argument("integer_lcm: values must be positive integers");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.num().get_mpz_t());
  }
  return l;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ineq
