#include "ineq/verdict.hpp"

namespace ineq {

const char* statement_name(Statement s) {
  switch (s) {
    case Statement::Holder: return "holder";
    case Statement::Cbs: return "cbs";
    case Statement::Minkowski: return "minkowski";
    case Statement::Chebyshev: return "chebyshev";
    case Statement::Application: return "application";
    case Statement::Menelaus: return "menelaus";
  }
  return "?";
}

std::optional<Statement> statement_from_name(const std::string& name) {
  for (Statement s : {Statement::Holder, Statement::Cbs, Statement::Minkowski,
                      Statement::Chebyshev, Statement::Application, Statement::Menelaus})
    if (name == statement_name(s)) return s;
  return std::nullopt;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::HoldsWithEquality: return "holds_with_equality";
    case Outcome::Violated: return "violated";
    case Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

CheckConfig CheckConfig::with_precision_cap(mpfr_prec_t cap) const {
  CheckConfig out = *this;
  std::vector<mpfr_prec_t> kept;
  for (mpfr_prec_t b : precision_schedule)
    if (b <= cap) kept.push_back(b);
  if (kept.empty() && !precision_schedule.empty()) kept.push_back(precision_schedule.front());
  out.precision_schedule = std::move(kept);
  return out;
}

}  // namespace ineq
