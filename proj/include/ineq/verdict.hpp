#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "ineq/rational.hpp"

namespace ineq {

enum class Statement { Holder, Cbs, Minkowski, Chebyshev, Application, Menelaus };

const char* statement_name(Statement s);
std::optional<Statement> statement_from_name(const std::string& name);

enum class Outcome { Holds, HoldsWithEquality, Violated, Undetermined };

const char* outcome_name(Outcome o);

/// Violation evidence: the two sides as exact rationals or interval bounds,
/// re-checkable together with the instance.
struct Evidence {
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct Verdict {
  Outcome outcome = Outcome::Undetermined;
  std::optional<Rational> gap_bound;   // Undetermined only
  std::optional<Evidence> evidence;    // Violated only

  static Verdict holds() { return {Outcome::Holds, std::nullopt, std::nullopt}; }
  static Verdict holds_with_equality() { return {Outcome::HoldsWithEquality, std::nullopt, std::nullopt}; }
  static Verdict violated(Evidence e) { return {Outcome::Violated, std::nullopt, std::move(e)}; }
  static Verdict undetermined(std::optional<Rational> gap) {
    return {Outcome::Undetermined, std::move(gap), std::nullopt};
  }

  bool ok() const { return outcome == Outcome::Holds || outcome == Outcome::HoldsWithEquality; }
};

enum class CheckMode { ExactIfPossible, IntervalOnly };

struct CheckConfig {
  CheckMode mode = CheckMode::ExactIfPossible;
  std::vector<mpfr_prec_t> precision_schedule = {64, 128, 256, 512, 1024};
  bool equality_detection = true;

  /// Drops schedule entries above `cap` (keeps at least the first one).
  CheckConfig with_precision_cap(mpfr_prec_t cap) const;
};

}  // namespace ineq
