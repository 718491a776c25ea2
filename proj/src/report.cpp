#include "ineq/report.hpp"

#include <chrono>
#include <sstream>

namespace ineq {

Json genspec_parameters_json(const GenSpec& spec, const CheckConfig& cfg) {
  Json pool = Json::array();
  for (const auto& p : spec.minkowski_p_pool) pool.push_back(p.str());
  Json schedule = Json::array();
  for (auto b : cfg.precision_schedule) schedule.push_back(static_cast<std::int64_t>(b));
  return Json{
      {"statement", statement_name(spec.statement)},
      {"n_min", spec.n_min},
      {"n_max", spec.n_max},
      {"m_min", spec.m_min},
      {"m_max", spec.m_max},
      {"numer_bits", spec.numer_bits},
      {"denom_bits", spec.denom_bits},
      {"exponent_mode",
       spec.exponent_mode == GenSpec::ExponentMode::IntegerTuples ? "integer" : "rational"},
      {"minkowski_p_pool", std::move(pool)},
      {"require_decomposable", spec.require_decomposable},
      {"mode", cfg.mode == CheckMode::ExactIfPossible ? "exact" : "interval"},
      {"precision_schedule", std::move(schedule)},
      {"equality_detection", cfg.equality_detection},
  };
}

Report run_verify_campaign(const GenSpec& spec, std::size_t trials, std::uint64_t seed,
                           const CheckConfig& cfg, std::string command_echo) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = std::move(command_echo);
  r.seed = seed;
  r.trials = trials;
  r.statement = spec.statement;
  r.parameters = genspec_parameters_json(spec, cfg);
  r.outcomes.reserve(trials);

  for (std::size_t idx = 0; idx < trials; ++idx) {
    Instance inst = gen_instance(spec, seed, idx);
    Verdict v = check_instance(inst, cfg);
    switch (v.outcome) {
      case Outcome::Holds: ++r.holds; break;
      case Outcome::HoldsWithEquality: ++r.equality; break;
      case Outcome::Undetermined: ++r.undetermined; break;
      case Outcome::Violated:
        ++r.violated;
        r.violated_witnesses.push_back(Json{{"trial", idx},
                                            {"instance", instance_to_json(inst)},
                                            {"verdict", verdict_to_json(v)}});
        break;
    }
    r.outcomes.push_back({idx, v.outcome, v.gap_bound});
  }

  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

Json report_to_json(const Report& r) {
  return Json{
      {"command", r.command},
      {"seed", r.seed},
      {"trials", r.trials},
      {"statement", statement_name(r.statement)},
      {"parameters", r.parameters},
      {"counts",
       Json{{"holds", r.holds},
            {"equality", r.equality},
            {"undetermined", r.undetermined},
            {"violated", r.violated}}},
      {"violated", r.violated_witnesses},
      {"runtime_ms", r.runtime_ms},
      {"version", r.version},
  };
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "trial,outcome,gap_bound\n";
  for (const auto& t : r.outcomes) {
    os << t.index << ',' << outcome_name(t.outcome) << ',';
    if (t.gap_bound) os << t.gap_bound->str();
    os << '\n';
  }
  return os.str();
}

}  // namespace ineq
