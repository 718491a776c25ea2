#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ineq/report.hpp"
#include "ineq/serialize.hpp"
#include "ineq/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 3;

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << text;
}

ineq::Statement parse_statement(const std::string& name) {
  auto s = ineq::statement_from_name(name);
  if (!s) throw std::invalid_argument("unknown statement '" + name + "'");
  return *s;
}

struct VerifyOptions {
  std::string statement;
  std::optional<std::size_t> n, m, n_min, n_max, m_min, m_max;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string mode = "exact";
  long precision_cap = 0;
  std::string out;
  std::string format = "json";
  long max_undetermined = 0;
  std::string config;
  std::string exponents = "integer";
  bool no_equality_detection = false;
};

// --config supplies defaults under the same field names as the flags;
// explicitly passed flags win.
void apply_config(VerifyOptions& o, const CLI::App* sub) {
  if (o.config.empty()) return;
  std::ifstream f(o.config);
  if (!f) throw std::invalid_argument("cannot open config file '" + o.config + "'");
  ineq::Json j = ineq::Json::parse(f);
  auto unset = [&](const char* flag) { return sub->count(flag) == 0; };
  if (j.contains("statement") && unset("statement")) o.statement = j["statement"].get<std::string>();
  auto opt_size = [&](const char* key, const char* flag, std::optional<std::size_t>& slot) {
    if (j.contains(key) && unset(flag)) slot = j[key].get<std::size_t>();
  };
  opt_size("n", "--n", o.n);
  opt_size("m", "--m", o.m);
  opt_size("n_min", "--n-min", o.n_min);
  opt_size("n_max", "--n-max", o.n_max);
  opt_size("m_min", "--m-min", o.m_min);
  opt_size("m_max", "--m-max", o.m_max);
  if (j.contains("trials") && unset("--trials")) o.trials = j["trials"].get<std::size_t>();
  if (j.contains("seed") && unset("--seed")) o.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("mode") && unset("--mode")) o.mode = j["mode"].get<std::string>();
  if (j.contains("precision_cap") && unset("--precision-cap"))
    o.precision_cap = j["precision_cap"].get<long>();
  if (j.contains("out") && unset("--out")) o.out = j["out"].get<std::string>();
  if (j.contains("format") && unset("--format")) o.format = j["format"].get<std::string>();
  if (j.contains("max_undetermined") && unset("--max-undetermined"))
    o.max_undetermined = j["max_undetermined"].get<long>();
  if (j.contains("exponents") && unset("--exponents")) o.exponents = j["exponents"].get<std::string>();
}

ineq::CheckConfig make_check_config(const std::string& mode, long precision_cap,
                                    bool no_equality_detection) {
  ineq::CheckConfig cfg;
  if (mode == "interval")
    cfg.mode = ineq::CheckMode::IntervalOnly;
  else if (mode == "exact")
    cfg.mode = ineq::CheckMode::ExactIfPossible;
  else
    throw std::invalid_argument("mode must be 'exact' or 'interval'");
  if (precision_cap > 0) cfg = cfg.with_precision_cap(precision_cap);
  cfg.equality_detection = !no_equality_detection;
  return cfg;
}

ineq::GenSpec make_gen_spec(const VerifyOptions& o) {
  ineq::GenSpec spec;
  spec.statement = parse_statement(o.statement);
  if (spec.statement == ineq::Statement::Menelaus) {
    spec.n_min = 3;
    spec.n_max = 12;
  }
  if (o.n) spec.n_min = spec.n_max = *o.n;
  if (o.n_min) spec.n_min = *o.n_min;
  if (o.n_max) spec.n_max = *o.n_max;
  if (o.m) spec.m_min = spec.m_max = *o.m;
  if (o.m_min) spec.m_min = *o.m_min;
  if (o.m_max) spec.m_max = *o.m_max;
  if (o.exponents == "rational")
    spec.exponent_mode = ineq::GenSpec::ExponentMode::RationalWeights;
  else if (o.exponents != "integer")
    throw std::invalid_argument("exponents must be 'integer' or 'rational'");
  spec.validate();

  switch (spec.statement) {
    case ineq::Statement::Holder:
    case ineq::Statement::Cbs:
      if (spec.m_min < 2) throw std::invalid_argument("this statement requires m >= 2");
      break;
    case ineq::Statement::Menelaus:
      if (spec.n_min < 3) throw std::invalid_argument("the transversal identity requires n >= 3");
      break;
    default:
      break;
  }
  return spec;
}

int cmd_verify(const VerifyOptions& o, const std::string& command) {
  ineq::GenSpec spec = make_gen_spec(o);
  ineq::CheckConfig cfg = make_check_config(o.mode, o.precision_cap, o.no_equality_detection);
  ineq::Report report = ineq::run_verify_campaign(spec, o.trials, o.seed, cfg, command);

  std::string text;
  if (o.format == "json")
    text = ineq::report_to_json(report).dump(2) + "\n";
  else if (o.format == "csv")
    text = ineq::report_to_csv(report);
  else
    throw std::invalid_argument("format must be 'json' or 'csv'");
  write_output(text, o.out);

  std::cerr << "verify " << ineq::statement_name(spec.statement) << ": " << report.trials
            << " trials, holds " << report.holds << ", equality " << report.equality
            << ", undetermined " << report.undetermined << ", violated " << report.violated
            << " (" << report.runtime_ms << " ms)\n";
  if (report.violated > 0) return kExitViolated;
  if (report.undetermined > static_cast<std::size_t>(std::max(0L, o.max_undetermined)))
    return kExitUndetermined;
  return kExitOk;
}

int cmd_trace(const std::string& statement, const std::string& instance_path,
              const std::string& out, const std::string& mode, long precision_cap) {
  std::ifstream f(instance_path);
  if (!f) throw std::invalid_argument("cannot open instance file '" + instance_path + "'");
  ineq::Json j = ineq::Json::parse(f);
  ineq::Instance inst = ineq::instance_from_json(j);
  if (ineq::statement_name(ineq::statement_of(inst)) != statement)
    throw std::invalid_argument("instance file statement does not match '" + statement + "'");

  ineq::CheckConfig cfg = make_check_config(mode, precision_cap, false);
  ineq::ProofTrace trace = ineq::trace_instance(inst);
  ineq::TraceVerdict tv = ineq::verify_trace(trace, cfg);
  ineq::Json outj{{"trace", ineq::trace_to_json(trace)},
                  {"verification", ineq::trace_verdict_to_json(tv)}};
  write_output(outj.dump(2) + "\n", out);

  std::cerr << "trace " << statement << ": " << trace.steps.size() << " steps, overall "
            << ineq::outcome_name(tv.overall.outcome)
            << (tv.bookkeeping_ok ? "" : " (bookkeeping failed)") << "\n";
  if (tv.overall.outcome == ineq::Outcome::Violated) return kExitViolated;
  if (!tv.overall.ok()) return kExitUndetermined;
  return kExitOk;
}

int cmd_enumerate(unsigned m, const std::string& out) {
  auto tuples = ineq::enumerate_integer_conjugate_tuples(m);
  if (out.empty()) {
    for (const auto& t : tuples) {
      for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? " " : "") << t[i];
      std::cout << "\n";
    }
  } else {
    ineq::Json j{{"m", m}, {"tuples", tuples}};
    write_output(j.dump(2) + "\n", out);
  }
  std::cerr << "enumerate-exponents: m = " << m << ", " << tuples.size() << " tuples\n";
  return kExitOk;
}

int cmd_search_tight(const std::string& statement, std::size_t budget, std::uint64_t seed,
                     std::size_t n, std::size_t m, const std::string& out) {
  ineq::GenSpec spec;
  spec.statement = parse_statement(statement);
  spec.n_min = spec.n_max = n;
  spec.m_min = spec.m_max = m;
  spec.validate();
  ineq::CheckConfig cfg;
  ineq::TightnessResult res = ineq::tightness_search(spec, budget, seed, cfg);

  ineq::Json j{{"statement", statement},
               {"budget", budget},
               {"seed", seed},
               {"evaluations", res.evaluations},
               {"best_instance", ineq::instance_to_json(res.best)},
               {"slack_lo", res.slack.enclosure.lo_double()},
               {"slack_hi", res.slack.enclosure.hi_double()}};
  if (res.slack.exact) j["slack_exact"] = res.slack.exact->str();
  write_output(j.dump(2) + "\n", out);
  std::cerr << "search-tight " << statement << ": best slack in ["
            << res.slack.enclosure.lo_double() << ", " << res.slack.enclosure.hi_double()
            << "] after " << res.evaluations << " evaluations\n";
  return kExitOk;
}

int cmd_mutate(const std::string& statement, const std::string& break_kind, std::size_t budget,
               std::uint64_t seed, const std::string& out) {
  auto kind = ineq::mutation_kind_from_name(break_kind);
  if (!kind)
    throw std::invalid_argument("unknown mutation '" + break_kind +
                                "' (expected conjugacy, direction, sort or point)");
  ineq::SearchSpec spec;
  spec.gen.statement = parse_statement(statement);
  spec.mutation = kind;
  if (spec.gen.statement == ineq::Statement::Menelaus) {
    spec.gen.n_min = 3;
    spec.gen.n_max = 8;
  }
  if (*kind == ineq::MutationKind::SortViolation) spec.gen.n_min = std::max<std::size_t>(2, spec.gen.n_min);
  spec.gen.validate();

  ineq::CheckConfig cfg;
  ineq::CounterexampleResult res = ineq::counterexample_search(spec, budget, seed, cfg);

  ineq::Json j{{"statement", statement},
               {"mutation", break_kind},
               {"budget", budget},
               {"seed", seed},
               {"found", res.witness.has_value()},
               {"trials_used", res.trials_used},
               {"shrink_steps", res.shrink_steps}};
  if (res.witness) {
    j["witness"] = ineq::instance_to_json(res.witness->instance);
    j["broken_hypothesis"] = res.witness->broken_hypothesis;
    j["verdict"] = ineq::verdict_to_json(res.verdict);
  }
  write_output(j.dump(2) + "\n", out);
  std::cerr << "mutate " << statement << " --break " << break_kind << ": "
            << (res.witness ? "violation found" : "no violation found") << " after "
            << res.trials_used << " trials\n";
  // finding the violation is the pass condition for a negative control
  return res.witness ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous verification of classical inequality generalizations and the n-gon "
               "transversal identity"};
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run a randomized verification campaign");
  verify->add_option("statement", vo.statement,
                     "holder | cbs | minkowski | chebyshev | application | menelaus")
      ->required();
  verify->add_option("--n", vo.n, "fix the row count (polygon size for menelaus)");
  verify->add_option("--m", vo.m, "fix the column count");
  verify->add_option("--n-min", vo.n_min);
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--m-min", vo.m_min);
  verify->add_option("--m-max", vo.m_max);
  verify->add_option("--trials", vo.trials, "number of instances");
  verify->add_option("--seed", vo.seed, "campaign seed");
  verify->add_option("--mode", vo.mode, "exact | interval");
  verify->add_option("--precision-cap", vo.precision_cap, "drop schedule entries above this");
  verify->add_option("--out", vo.out, "write the report here instead of stdout");
  verify->add_option("--format", vo.format, "json | csv");
  verify->add_option("--max-undetermined", vo.max_undetermined,
                     "exit 2 when undetermined exceeds this");
  verify->add_option("--config", vo.config, "JSON config with the same field names as the flags");
  verify->add_option("--exponents", vo.exponents, "integer | rational exponent generation");
  verify->add_flag("--no-equality-detection", vo.no_equality_detection,
                   "disable symbolic equality shortcuts");

  std::string tr_statement, tr_instance, tr_out, tr_mode = "exact";
  long tr_cap = 0;
  auto* trace = app.add_subcommand("trace", "decompose an instance into base-case steps and verify them");
  trace->add_option("statement", tr_statement, "statement kind of the instance file")->required();
  trace->add_option("--instance", tr_instance, "instance JSON file")->required();
  trace->add_option("--out", tr_out);
  trace->add_option("--mode", tr_mode, "exact | interval");
  trace->add_option("--precision-cap", tr_cap);

  unsigned en_m = 2;
  std::string en_out;
  auto* enumerate = app.add_subcommand("enumerate-exponents",
                                       "all integer conjugate exponent tuples for a given m");
  enumerate->add_option("--m", en_m, "tuple length")->required();
  enumerate->add_option("--out", en_out);

  std::string st_statement, st_out;
  std::size_t st_budget = 500, st_n = 2, st_m = 2;
  std::uint64_t st_seed = 0;
  auto* tight = app.add_subcommand("search-tight", "hill-climb the slack ratio toward 1");
  tight->add_option("statement", st_statement)->required();
  tight->add_option("--budget", st_budget, "slack evaluations");
  tight->add_option("--seed", st_seed);
  tight->add_option("--n", st_n);
  tight->add_option("--m", st_m);
  tight->add_option("--out", st_out);

  std::string mu_statement, mu_break, mu_out;
  std::size_t mu_budget = 1000;
  std::uint64_t mu_seed = 0;
  auto* mutate = app.add_subcommand("mutate", "negative control: break one hypothesis and search");
  mutate->add_option("statement", mu_statement)->required();
  mutate->add_option("--break", mu_break, "conjugacy | direction | sort | point")->required();
  mutate->add_option("--budget", mu_budget);
  mutate->add_option("--seed", mu_seed);
  mutate->add_option("--out", mu_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      apply_config(vo, verify);
      return cmd_verify(vo, command);
    }
    if (trace->parsed()) return cmd_trace(tr_statement, tr_instance, tr_out, tr_mode, tr_cap);
    if (enumerate->parsed()) return cmd_enumerate(en_m, en_out);
    if (tight->parsed()) return cmd_search_tight(st_statement, st_budget, st_seed, st_n, st_m, st_out);
    if (mutate->parsed()) return cmd_mutate(mu_statement, mu_break, mu_budget, mu_seed, mu_out);
  } catch (const ineq::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
