#pragma once

#include <utility>

#include "ineq/expr.hpp"
#include "ineq/instances.hpp"
#include "ineq/verdict.hpp"

namespace ineq {

/// The two sides of the m-fold product-sum inequality
///   sum_i prod_k a[i][k]  <=  prod_k (sum_i a[i][k]^{p_k})^{1/p_k}
/// as evaluables. The left side is an exact rational constant; the right
/// side is exactly comparable via lcm clearing when every p_k is an integer
/// and rigorously enclosable otherwise.
std::pair<Expr, Expr> holder_sides(const NonNegMatrix& m, const ExponentVector& p);

Verdict check_holder(const NonNegMatrix& m, const ExponentVector& p, const CheckConfig& cfg);

/// (sum_i prod_k a[i][k])^m <= prod_k sum_i a[i][k]^m, fully exact.
Verdict check_cbs(const NonNegMatrix& m, const CheckConfig& cfg);

/// (sum_i (sum_k a[i][k])^p)^{1/p} <= sum_k (sum_i a[i][k]^p)^{1/p} for
/// p >= 1. No general exact path; p = 1, m = 1 and pairwise-proportional
/// columns short-circuit to exact equality.
Verdict check_minkowski(const NonNegMatrix& m, const Rational& p, const CheckConfig& cfg);

/// (1/n) sum_i prod_k a[i][k] >= (1/n^m) prod_k sum_i a[i][k] for
/// column-sorted input, fully exact.
Verdict check_chebyshev(const SortedMatrix& s, const CheckConfig& cfg);

/// (a1 b1 c1 + a2 b2 c2)^6 <= 8 (a1^6 + a2^6)(b1^6 + b2^6)(c1^6 + c2^6)
/// for nonnegative values, fully exact.
Verdict check_application(const std::pair<Rational, Rational>& a,
                          const std::pair<Rational, Rational>& b,
                          const std::pair<Rational, Rational>& c, const CheckConfig& cfg);

/// Transversal product identity: the Menelaus product equals 1 exactly.
Verdict check_menelaus(const MenelausInstance& inst, const CheckConfig& cfg);

/// Dispatch with full hypothesis validation (Chebyshev input is checked for
/// sortedness and rejected with the offending position).
Verdict check_instance(const Instance& inst, const CheckConfig& cfg);

/// Hypothesis-skipping evaluators for negative controls: they evaluate the
/// raw inequality on input the public checkers would reject.
Verdict check_holder_raw(const NonNegMatrix& m, const ExponentVector& p, const CheckConfig& cfg);
Verdict check_chebyshev_raw(const NonNegMatrix& m, const CheckConfig& cfg);

/// Exact equality predictor for integer exponents: true iff the columns of
/// powers (a[i][k]^{p_k})_i are pairwise proportional, the classical
/// equality condition of the inequality.
bool is_holder_equality_case(const NonNegMatrix& m, const ExponentVector& p);

/// Ratio of the dominated side to the dominating side (at most 1 up to
/// enclosure width). Exact when the ratio is provably rational: always for
/// the integer-power statements, and at certified equality otherwise.
struct Slack {
  std::optional<Rational> exact;
  Interval enclosure;
};

Slack slack_ratio(const Instance& inst, const CheckConfig& cfg);

/// Exact three-way comparison of two products of rational powers
/// (bases nonnegative, exponents positive), cleared by raising both sides to
/// the lcm of the exponent denominators. nullopt when a cleared exponent
/// would be impractically large.
std::optional<std::strong_ordering> compare_power_products(
    const std::vector<std::pair<Rational, Rational>>& lhs,
    const std::vector<std::pair<Rational, Rational>>& rhs);

/// Exact test that the vectors (x_i^{px})_i and (y_i^{py})_i are
/// proportional (entries nonnegative, powers positive). Cross products are
/// compared through compare_power_products, so no roots are evaluated.
bool powered_vectors_proportional(const std::vector<Rational>& x, const Rational& px,
                                  const std::vector<Rational>& y, const Rational& py);

void validate_holder_instance(const NonNegMatrix& m, const ExponentVector& p);

}  // namespace ineq
