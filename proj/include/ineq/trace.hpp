#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ineq/checkers.hpp"
#include "ineq/expr.hpp"
#include "ineq/geometry.hpp"
#include "ineq/instances.hpp"
#include "ineq/verdict.hpp"

namespace ineq {

/// One induction step of the product-sum inequality: the last exponent pair
/// (p_left, p_right) is merged into derived_p with
///   1/derived_p = 1/p_left + 1/p_right,
/// and the split is justified by the two-term base case with conjugate
/// exponents t1 = p_left/derived_p, t2 = p_right/derived_p. The step claims
///   (sum_i (x_i y_i)^derived_p)^{1/derived_p}
///     <= (sum_i x_i^{p_left})^{1/p_left} * (sum_i y_i^{p_right})^{1/p_right}
/// on the two merged columns x = col_left, y = col_right.
struct HolderSplitStep {
  std::size_t level;  // column count before the split
  Rational p_left, p_right;
  Rational derived_p, t1, t2;
  std::vector<Rational> col_left, col_right;

  Expr lhs_bound() const;
  Expr rhs_bound() const;
};

/// One induction step of the m-fold triangle inequality: the first column is
/// peeled off and the two-term base case is applied to (peeled column, row
/// sums of the remaining columns):
///   (sum_i (x_i + r_i)^p)^{1/p} <= (sum_i x_i^p)^{1/p} + (sum_i r_i^p)^{1/p}.
struct MinkowskiPeelStep {
  std::size_t level;  // column count before the peel
  Rational p;
  std::vector<Rational> peeled_col;
  std::vector<Rational> rest_row_sums;

  Expr lhs_bound() const;
  Expr rhs_bound() const;
};

/// One induction step of the sorted product-mean inequality: the last column
/// is peeled and the two-sequence base case is applied to the intermediate
/// product sequence u_i = prod_{k < level} a[i][k] and the peeled column.
/// The recorded product sequence must itself be nonincreasing (the hidden
/// lemma the induction needs).
struct ChebyshevPeelStep {
  std::size_t level;  // column count before the peel
  std::vector<Rational> product_prefix;
  std::vector<Rational> peeled_col;
};

/// One diagonal cut of the transversal identity: the polygon A_1 A_2 .. A_n
/// is split along diagonal (A_2, A_n) at the cut point M into the triangle
/// A_1 A_2 A_n and the (n-1)-gon A_n A_2 A_3 .. A_{n-1}. The two cut-point
/// factors |MA_2|/|MA_n| and |MA_n|/|MA_2| cancel in the composed product.
struct MenelausCutStep {
  std::size_t level;  // polygon size before the cut
  Point a1, a2, an;
  Point cut_point;
  Point m1, mn;                 // transversal points on sides a1-a2 and an-a1
  Rational r1, cut_ratio, rn;   // triangle section ratios

  Rational triangle_product() const { return r1 * cut_ratio * rn; }
};

using TraceStep =
    std::variant<HolderSplitStep, MinkowskiPeelStep, ChebyshevPeelStep, MenelausCutStep>;

/// A full self-recurrence decomposition: the chain of base-case applications
/// that proves the m-fold claim, ending at the statement's own base case.
/// Steps carry the concrete instance data they claim about, so each one is
/// independently re-checkable from the serialized trace alone.
struct ProofTrace {
  Statement kind;
  Instance instance;       // the full claim
  std::vector<TraceStep> steps;
  Instance base_instance;  // the terminal base case
  std::size_t base_case_count = 0;  // base applications: steps + terminal claim
};

ProofTrace holder_trace(const NonNegMatrix& m, const ExponentVector& p);
ProofTrace minkowski_trace(const NonNegMatrix& m, const Rational& p);
ProofTrace chebyshev_trace(const SortedMatrix& s);

/// Recursive diagonal-cut decomposition of the transversal identity; cuts
/// always run along diagonal (A_2, A_n), and configurations where that cut
/// degenerates raise a dedicated error even though the direct product check
/// remains available.
ProofTrace menelaus_decompose(const Polygon& polygon, const Line& line);

ProofTrace trace_instance(const Instance& inst);

struct StepCheck {
  Verdict verdict;
  bool bookkeeping_ok = true;
  std::string detail;
};

struct TraceVerdict {
  std::vector<StepCheck> step_results;
  Verdict base_result;
  Verdict overall;
  bool bookkeeping_ok = true;
};

/// Re-verifies a trace from its recorded data: every bookkeeping identity is
/// re-checked exactly, every step inequality is checked (exact where
/// available, interval otherwise), the chain is re-folded and compared to
/// the recorded base case, and the composed verdict is returned. Overall is
/// Holds/HoldsWithEquality only if every step and the base case are, and all
/// bookkeeping holds.
TraceVerdict verify_trace(const ProofTrace& trace, const CheckConfig& cfg);

}  // namespace ineq
