#include "ineq/checkers.hpp"

#include <stdexcept>

namespace ineq {

namespace {

Verdict exact_claim_le(const Rational& dominated, const Rational& dominating, const char* note) {
  if (dominated < dominating) return Verdict::holds();
  if (dominated == dominating) return Verdict::holds_with_equality();
  return Verdict::violated({dominated.str(), dominating.str(), note});
}

Verdict refine_claim_le(const Expr& dominated, const Expr& dominating, const CheckConfig& cfg,
                        const char* note) {
  RefineOutcome out = refine_until_ordered(dominated, dominating, cfg.precision_schedule);
  switch (out.order) {
    case TriOrder::CertainlyLE:
      return Verdict::holds();
    case TriOrder::CertainlyGT: {
      Interval l = dominated.enclosure(out.decided_at);
      Interval r = dominating.enclosure(out.decided_at);
      return Verdict::violated({l.str(), r.str(), note});
    }
    case TriOrder::Overlap:
      return Verdict::undetermined(out.gap_bound);
  }
  throw std::logic_error("unreachable");
}

void validate_holder_shape(const NonNegMatrix& m, const ExponentVector& p, bool require_conjugate) {
  if (m.cols() != p.size())
    throw std::invalid_argument("holder: matrix has " + std::to_string(m.cols()) +
                                " columns but " + std::to_string(p.size()) + " exponents");
  if (m.cols() < 2) throw std::invalid_argument("holder: at least 2 columns required");
  if (require_conjugate && !p.is_conjugate())
    throw std::invalid_argument("holder: exponents are not conjugate (defect " +
                                p.defect().str() + ")");
}

Rational product_sum_lhs(const NonNegMatrix& m) {
  Rational lhs(0);
  for (std::size_t i = 0; i < m.rows(); ++i) lhs += m.row_product(i);
  return lhs;
}

Expr holder_rhs_expr(const NonNegMatrix& m, const ExponentVector& p) {
  std::vector<Expr> factors;
  factors.reserve(m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    std::vector<Expr> terms;
    terms.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      terms.push_back(Expr::pow(Expr::constant(m.at(i, k)), p.at(k)));
    factors.push_back(Expr::pow(Expr::sum(std::move(terms)), p.at(k).reciprocal()));
  }
  return Expr::product(std::move(factors));
}

// lhs^L vs prod_k S_k^{L/p_k} with L = lcm(p): both exact once all p_k are
// integers, and equality is decided exactly.
std::optional<std::pair<Rational, Rational>> holder_cleared_sides(const NonNegMatrix& m,
                                                                  const ExponentVector& p) {
  if (!p.all_integer()) return std::nullopt;
  mpz_class lcm = integer_lcm(p.values());
  if (!lcm.fits_slong_p()) return std::nullopt;
  long l = lcm.get_si();
  Rational lhs_pow = pow_int(product_sum_lhs(m), l);
  Rational rhs_pow(1);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    long pk = p.at(k).num().get_si();
    rhs_pow *= pow_int(m.col_pow_sum(k, pk), l / pk);
  }
  return std::make_pair(std::move(lhs_pow), std::move(rhs_pow));
}

Verdict check_holder_impl(const NonNegMatrix& m, const ExponentVector& p, const CheckConfig& cfg) {
  if (cfg.mode == CheckMode::ExactIfPossible) {
    if (auto cleared = holder_cleared_sides(m, p))
      return exact_claim_le(cleared->first, cleared->second,
                            "product-sum inequality, sides raised to the lcm of the exponents");
  }
  Expr lhs = Expr::constant(product_sum_lhs(m));
  Expr rhs = holder_rhs_expr(m, p);
  return refine_claim_le(lhs, rhs, cfg, "product-sum inequality");
}

}  // namespace

std::pair<Expr, Expr> holder_sides(const NonNegMatrix& m, const ExponentVector& p) {
  validate_holder_shape(m, p, /*require_conjugate=*/true);
  return {Expr::constant(product_sum_lhs(m)), holder_rhs_expr(m, p)};
}

Verdict check_holder(const NonNegMatrix& m, const ExponentVector& p, const CheckConfig& cfg) {
  validate_holder_shape(m, p, /*require_conjugate=*/true);
  return check_holder_impl(m, p, cfg);
}

Verdict check_holder_raw(const NonNegMatrix& m, const ExponentVector& p, const CheckConfig& cfg) {
  validate_holder_shape(m, p, /*require_conjugate=*/false);
  return check_holder_impl(m, p, cfg);
}

Verdict check_cbs(const NonNegMatrix& m, const CheckConfig& cfg) {
  if (m.cols() < 2) throw std::invalid_argument("cbs: at least 2 columns required");
  long mm = static_cast<long>(m.cols());
  Rational lhs = pow_int(product_sum_lhs(m), mm);
  Rational rhs(1);
  for (std::size_t k = 0; k < m.cols(); ++k) rhs *= m.col_pow_sum(k, mm);
  const char* note = "m-th power of the product sum vs product of m-th power sums";
  if (cfg.mode == CheckMode::ExactIfPossible) return exact_claim_le(lhs, rhs, note);
  return refine_claim_le(Expr::constant(lhs), Expr::constant(rhs), cfg, note);
}

Verdict check_minkowski(const NonNegMatrix& m, const Rational& p, const CheckConfig& cfg) {
  if (p < Rational(1)) throw std::domain_error("minkowski: p must be at least 1");
  // p = 1 and m = 1 collapse both sides to the same sum
  if (p == Rational(1) || m.cols() == 1) return Verdict::holds_with_equality();
  if (cfg.equality_detection && columns_pairwise_proportional(m))
    return Verdict::holds_with_equality();

  std::vector<Expr> lhs_terms;
  for (const Rational& rs : m.row_sums())
    lhs_terms.push_back(Expr::pow(Expr::constant(rs), p));
  Expr lhs = Expr::pow(Expr::sum(std::move(lhs_terms)), p.reciprocal());

  std::vector<Expr> rhs_terms;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    std::vector<Expr> col_terms;
    for (std::size_t i = 0; i < m.rows(); ++i)
      col_terms.push_back(Expr::pow(Expr::constant(m.at(i, k)), p));
    rhs_terms.push_back(Expr::pow(Expr::sum(std::move(col_terms)), p.reciprocal()));
  }
  Expr rhs = Expr::sum(std::move(rhs_terms));
  return refine_claim_le(lhs, rhs, cfg, "p-norm of the column sum vs sum of column p-norms");
}

namespace {

// dominated side is the product of column means; claim is mean-of-products >= it
std::pair<Rational, Rational> chebyshev_sides(const NonNegMatrix& m) {
  Rational n(static_cast<long>(m.rows()));
  Rational lhs = product_sum_lhs(m) / n;
  Rational rhs(1);
  for (std::size_t k = 0; k < m.cols(); ++k) rhs *= m.col_sum(k) / n;
  return {std::move(lhs), std::move(rhs)};
}

Verdict check_chebyshev_impl(const NonNegMatrix& m, const CheckConfig& cfg) {
  auto [lhs, rhs] = chebyshev_sides(m);
  const char* note = "mean of row products vs product of column means (claim: >=)";
  if (cfg.mode == CheckMode::ExactIfPossible) return exact_claim_le(rhs, lhs, note);
  return refine_claim_le(Expr::constant(rhs), Expr::constant(lhs), cfg, note);
}

}  // namespace

Verdict check_chebyshev(const SortedMatrix& s, const CheckConfig& cfg) {
  return check_chebyshev_impl(s.matrix(), cfg);
}

Verdict check_chebyshev_raw(const NonNegMatrix& m, const CheckConfig& cfg) {
  return check_chebyshev_impl(m, cfg);
}

Verdict check_application(const std::pair<Rational, Rational>& a,
                          const std::pair<Rational, Rational>& b,
                          const std::pair<Rational, Rational>& c, const CheckConfig& cfg) {
  for (const auto* v : {&a.first, &a.second, &b.first, &b.second, &c.first, &c.second})
    if (v->sign() < 0) throw std::domain_error("application: values must be nonnegative");
  Rational lhs = pow_int(a.first * b.first * c.first + a.second * b.second * c.second, 6);
  auto sixth = [](const std::pair<Rational, Rational>& v) {
    return pow_int(v.first, 6) + pow_int(v.second, 6);
  };
  Rational rhs = Rational(8) * sixth(a) * sixth(b) * sixth(c);
  const char* note = "sixth power of the triple product sum vs 8 times the sixth-power sums";
  if (cfg.mode == CheckMode::ExactIfPossible) return exact_claim_le(lhs, rhs, note);
  return refine_claim_le(Expr::constant(lhs), Expr::constant(rhs), cfg, note);
}

Verdict check_menelaus(const MenelausInstance& inst, const CheckConfig&) {
  Rational product(1);
  if (inst.forced_points) {
    const auto& pts = *inst.forced_points;
    if (pts.size() != inst.polygon.size())
      throw std::invalid_argument("menelaus: forced point count does not match polygon size");
    for (std::size_t i = 0; i < pts.size(); ++i)
      product *= collinear_ratio(pts[i], inst.polygon.vertex(i), inst.polygon.vertex(i + 1));
  } else {
    product = menelaus_product(inst.polygon, inst.line);
  }
  if (product == Rational(1)) return Verdict::holds_with_equality();
  return Verdict::violated({product.str(), "1", "transversal ratio product differs from 1"});
}

Verdict check_instance(const Instance& inst, const CheckConfig& cfg) {
  struct Visitor {
    const CheckConfig& cfg;
    Verdict operator()(const HolderInstance& h) { return check_holder(h.matrix, h.exponents, cfg); }
    Verdict operator()(const CbsInstance& c) { return check_cbs(c.matrix, cfg); }
    Verdict operator()(const MinkowskiInstance& mk) { return check_minkowski(mk.matrix, mk.p, cfg); }
    Verdict operator()(const ChebyshevInstance& ch) {
      return check_chebyshev(SortedMatrix::validated(ch.matrix), cfg);
    }
    Verdict operator()(const ApplicationInstance& ap) {
      return check_application(ap.a, ap.b, ap.c, cfg);
    }
    Verdict operator()(const MenelausInstance& me) { return check_menelaus(me, cfg); }
  };
  return std::visit(Visitor{cfg}, inst);
}

void validate_holder_instance(const NonNegMatrix& m, const ExponentVector& p) {
  validate_holder_shape(m, p, /*require_conjugate=*/true);
}

std::optional<std::strong_ordering> compare_power_products(
    const std::vector<std::pair<Rational, Rational>>& lhs,
    const std::vector<std::pair<Rational, Rational>>& rhs) {
  mpz_class clear(1);
  for (const auto* side : {&lhs, &rhs})
    for (const auto& [base, exp] : *side) {
      if (exp.sign() <= 0) throw std::invalid_argument("power products: exponents must be positive");
      if (base.sign() < 0) throw std::invalid_argument("power products: bases must be nonnegative");
      mpz_lcm(clear.get_mpz_t(), clear.get_mpz_t(), exp.den().get_mpz_t());
    }
  // x <= y iff x^N <= y^N for nonnegative sides, so compare the cleared sides
  auto side_value = [&](const std::vector<std::pair<Rational, Rational>>& side)
      -> std::optional<Rational> {
    Rational v(1);
    for (const auto& [base, exp] : side) {
      Rational cleared = exp * Rational(clear);
      if (!cleared.num().fits_slong_p()) return std::nullopt;
      long e = cleared.num().get_si();
      if (e > 1000000) return std::nullopt;
      v *= pow_int(base, e);
    }
    return v;
  };
  auto l = side_value(lhs);
  auto r = side_value(rhs);
  if (!l || !r) return std::nullopt;
  return *l <=> *r;
}

bool powered_vectors_proportional(const std::vector<Rational>& x, const Rational& px,
                                  const std::vector<Rational>& y, const Rational& py) {
  if (x.size() != y.size()) throw std::invalid_argument("proportionality: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      auto c = compare_power_products({{x[i], px}, {y[j], py}}, {{x[j], px}, {y[i], py}});
      if (!c || *c != std::strong_ordering::equal) return false;
    }
  return true;
}

bool is_holder_equality_case(const NonNegMatrix& m, const ExponentVector& p) {
  validate_holder_shape(m, p, /*require_conjugate=*/true);
  if (!p.all_integer())
    throw std::domain_error("holder equality predictor: integer exponents required");
  NonNegMatrix powered(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    long pk = p.at(k).num().get_si();
    for (std::size_t i = 0; i < m.rows(); ++i) powered.set(i, k, pow_int(m.at(i, k), pk));
  }
  return columns_pairwise_proportional(powered);
}

namespace {

bool has_all_zero_column(const NonNegMatrix& m) {
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (m.col_sum(k).is_zero()) return true;
  return false;
}

Slack exact_slack(Rational value, mpfr_prec_t bits) {
  Interval enc = Interval::of(value, bits);
  return Slack{std::move(value), std::move(enc)};
}

}  // namespace

Slack slack_ratio(const Instance& inst, const CheckConfig& cfg) {
  const mpfr_prec_t bits = cfg.precision_schedule.back();
  struct Visitor {
    const CheckConfig& cfg;
    mpfr_prec_t bits;

    Slack operator()(const HolderInstance& h) {
      validate_holder_shape(h.matrix, h.exponents, true);
      if (has_all_zero_column(h.matrix))
        throw std::domain_error("slack: dominating side is zero");
      Rational lhs = product_sum_lhs(h.matrix);
      if (lhs.is_zero()) return exact_slack(Rational(0), bits);
      if (auto cleared = holder_cleared_sides(h.matrix, h.exponents))
        if (cleared->first == cleared->second) return exact_slack(Rational(1), bits);
      Expr rhs = holder_rhs_expr(h.matrix, h.exponents);
      return Slack{std::nullopt, Interval::of(lhs, bits) / rhs.enclosure(bits)};
    }
    Slack operator()(const CbsInstance& c) {
      if (c.matrix.cols() < 2) throw std::invalid_argument("cbs: at least 2 columns required");
      long mm = static_cast<long>(c.matrix.cols());
      Rational rhs(1);
      for (std::size_t k = 0; k < c.matrix.cols(); ++k) rhs *= c.matrix.col_pow_sum(k, mm);
      if (rhs.is_zero()) throw std::domain_error("slack: dominating side is zero");
      Rational lhs = pow_int(product_sum_lhs(c.matrix), mm);
      return exact_slack(lhs / rhs, bits);
    }
    Slack operator()(const MinkowskiInstance& mk) {
      if (mk.p < Rational(1)) throw std::domain_error("minkowski: p must be at least 1");
      bool all_zero = true;
      for (std::size_t k = 0; k < mk.matrix.cols() && all_zero; ++k)
        all_zero = mk.matrix.col_sum(k).is_zero();
      if (all_zero) throw std::domain_error("slack: dominating side is zero");
      if (mk.p == Rational(1) || mk.matrix.cols() == 1 ||
          columns_pairwise_proportional(mk.matrix))
        return exact_slack(Rational(1), bits);
      std::vector<Expr> lhs_terms, rhs_terms;
      for (const Rational& rs : mk.matrix.row_sums())
        lhs_terms.push_back(Expr::pow(Expr::constant(rs), mk.p));
      Expr lhs = Expr::pow(Expr::sum(std::move(lhs_terms)), mk.p.reciprocal());
      for (std::size_t k = 0; k < mk.matrix.cols(); ++k) {
        std::vector<Expr> col_terms;
        for (std::size_t i = 0; i < mk.matrix.rows(); ++i)
          col_terms.push_back(Expr::pow(Expr::constant(mk.matrix.at(i, k)), mk.p));
        rhs_terms.push_back(Expr::pow(Expr::sum(std::move(col_terms)), mk.p.reciprocal()));
      }
      Expr rhs = Expr::sum(std::move(rhs_terms));
      return Slack{std::nullopt, lhs.enclosure(bits) / rhs.enclosure(bits)};
    }
    Slack operator()(const ChebyshevInstance& ch) {
      SortedMatrix::validated(ch.matrix);
      auto [lhs, rhs] = chebyshev_sides(ch.matrix);
      if (lhs.is_zero()) throw std::domain_error("slack: dominating side is zero");
      return exact_slack(rhs / lhs, bits);  // reciprocal orientation keeps the ratio <= 1
    }
    Slack operator()(const ApplicationInstance& ap) {
      auto sixth = [](const std::pair<Rational, Rational>& v) {
        return pow_int(v.first, 6) + pow_int(v.second, 6);
      };
      Rational rhs = Rational(8) * sixth(ap.a) * sixth(ap.b) * sixth(ap.c);
      if (rhs.is_zero()) throw std::domain_error("slack: dominating side is zero");
      Rational lhs = pow_int(ap.a.first * ap.b.first * ap.c.first +
                                 ap.a.second * ap.b.second * ap.c.second,
                             6);
      return exact_slack(lhs / rhs, bits);
    }
    Slack operator()(const MenelausInstance&) {
      throw std::invalid_argument("slack: not defined for the transversal identity");
    }
  };
  return std::visit(Visitor{cfg, bits}, inst);
}

}  // namespace ineq
