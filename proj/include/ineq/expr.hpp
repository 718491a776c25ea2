#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineq/interval.hpp"
#include "ineq/rational.hpp"

namespace ineq {

/// Immutable arithmetic expression over exact rationals with sums, products
/// and rational powers. Evaluates two ways: exactly (when every power node
/// has a rational value, e.g. integer exponents or perfect roots) and as a
/// rigorous enclosure at any requested precision.
class Expr {
 public:
  static Expr constant(Rational v);
  static Expr sum(std::vector<Expr> terms);       // empty sum is 0
  static Expr product(std::vector<Expr> factors); // empty product is 1
  static Expr pow(Expr base, Rational exponent);

  /// Exact rational value, or nullopt when the expression is irrational
  /// (or not provably rational by per-node perfect-power shortcuts).
  std::optional<Rational> exact() const;

  /// Rigorous enclosure at the given endpoint precision. Subtrees with an
  /// exact rational value are enclosed directly for tightness.
  Interval enclosure(mpfr_prec_t bits) const;

  std::string str() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct RefineOutcome {
  TriOrder order = TriOrder::Overlap;
  /// Upper bound on |lhs - rhs| at the precision that decided (or at the
  /// last precision, for Overlap). Absent when an endpoint overflowed.
  std::optional<Rational> gap_bound;
  mpfr_prec_t decided_at = 0;
};

/// Evaluates both expressions at successive precisions and returns the first
/// strict separation, or Overlap with the final gap bound once the schedule
/// is exhausted. The schedule must be non-empty and strictly increasing.
RefineOutcome refine_until_ordered(const Expr& lhs, const Expr& rhs,
                                   std::span<const mpfr_prec_t> schedule);

}  // namespace ineq
