#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ineq/gen.hpp"
#include "ineq/serialize.hpp"

namespace ineq {

inline constexpr const char* kToolVersion = "0.1.0";

struct TrialOutcome {
  std::size_t index = 0;
  Outcome outcome = Outcome::Undetermined;
  std::optional<Rational> gap_bound;
};

/// Campaign result. Every field except runtime_ms is a deterministic
/// function of (command, seed, parameters).
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Statement statement = Statement::Holder;
  Json parameters;
  std::size_t holds = 0, equality = 0, undetermined = 0, violated = 0;
  std::vector<Json> violated_witnesses;  // {trial, instance, verdict}
  std::vector<TrialOutcome> outcomes;    // per-trial rows (CSV projection only)
  std::int64_t runtime_ms = 0;
  std::string version = kToolVersion;
};

Report run_verify_campaign(const GenSpec& spec, std::size_t trials, std::uint64_t seed,
                           const CheckConfig& cfg, std::string command_echo);

Json report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

Json genspec_parameters_json(const GenSpec& spec, const CheckConfig& cfg);

}  // namespace ineq
