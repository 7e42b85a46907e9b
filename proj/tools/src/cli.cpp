#include "lfpscsc/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "lfpscsc/lfpscsc.hpp"

namespace lfpscsc::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kCscTol = 1e-7;

struct Options {
  std::string input;
  std::string approach = "both";
  double tol = 1e-9;
  double pos_tol = 1e-7;
  std::string format = "text";
  bool validate_denominator = false;
};

struct ApproachRun {
  std::string name;
  StrictComplementarySolution sol;
  CscReport csc;
  ScscReport scsc;
  std::optional<OptimalPartition> partition;
  double millis = 0.0;

  bool passed() const { return csc.passed && scsc.passed && partition.has_value(); }
};

struct Report {
  std::string status = "ok";
  std::string error;
  std::optional<double> denominator_min;
  std::optional<double> theta_star;
  std::vector<ApproachRun> runs;
  std::optional<OptimalPartition> partition;
  std::optional<bool> cross_check;
  std::vector<std::pair<std::string, double>> timings;
};

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfeasibleRegion:
      return kInfeasible;
    case ErrorCode::UnboundedObjective:
    case ErrorCode::UnboundedValidation:
    case ErrorCode::NonpositiveDenominator:
      return kUnbounded;
    case ErrorCode::ParseError:
    case ErrorCode::DimensionError:
    case ErrorCode::ValueError:
    case ErrorCode::InvalidArgument:
      return kInputError;
    default:
      return kNumericalFailure;
  }
}

std::string status_for(int code) {
  switch (code) {
    case kOk:
      return "ok";
    case kInfeasible:
      return "infeasible";
    case kUnbounded:
      return "unbounded";
    case kInputError:
      return "input_error";
    default:
      return "numerical_failure";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ApproachRun run_approach(const std::string& name, const LFPProblem& p,
                         const SolverOptions& opts, double pos_tol) {
  const auto start = Clock::now();
  ApproachRun run;
  run.name = name;
  run.sol = name == "one" ? approach_one(p, opts) : approach_two(p, opts);
  run.millis = millis_since(start);
  run.csc = verify_csc(run.sol, kCscTol);
  run.scsc = verify_scsc(run.sol, pos_tol);
  if (run.csc.passed && run.scsc.passed) {
    try {
      run.partition = optimal_partitions(run.sol, pos_tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PartitionViolation) throw;
    }
  }
  return run;
}

json to_json(const Eigen::VectorXd& v) { return std::vector<double>(v.begin(), v.end()); }

json one_based(const IndexSet& set) {
  json out = json::array();
  for (Index k : set) out.push_back(k + 1);
  return out;
}

json to_json(const CscReport& r) {
  return {{"x_dot_v", r.x_dot_v}, {"y_dot_u", r.y_dot_u}, {"tol", r.tol}, {"passed", r.passed}};
}

json to_json(const ScscReport& r) {
  json warnings = json::array();
  for (const NumericalWarning& w : r.warnings) {
    warnings.push_back({{"component", w.component}, {"index", w.index + 1}, {"value", w.value}});
  }
  return {{"min_x_plus_v", r.min_x_plus_v}, {"min_y_plus_u", r.min_y_plus_u},
          {"tol", r.tol},                   {"failing_n", one_based(r.failing_n)},
          {"failing_m", one_based(r.failing_m)}, {"warnings", warnings},
          {"passed", r.passed}};
}

json to_json(const OptimalPartition& part) {
  return {{"sigma_x", one_based(part.sigma_x)}, {"sigma_v", one_based(part.sigma_v)},
          {"sigma_u", one_based(part.sigma_u)}, {"sigma_y", one_based(part.sigma_y)}};
}

void write_json(const Report& report, std::ostream& out) {
  json doc;
  doc["status"] = report.status;
  if (!report.error.empty()) doc["error"] = report.error;
  if (report.denominator_min) doc["denominator_min"] = *report.denominator_min;
  if (report.theta_star) doc["theta_star"] = *report.theta_star;
  if (!report.runs.empty()) {
    json approaches = json::object();
    json primal = json::object();
    json dual = json::object();
    json checks = json::object();
    for (const ApproachRun& run : report.runs) {
      const StrictComplementarySolution& s = run.sol;
      approaches[run.name] = {{"x", to_json(s.primal.x)}, {"u", to_json(s.primal.u)},
                              {"t", s.t_star},            {"y", to_json(s.dual.y)},
                              {"z", s.dual.z},            {"v", to_json(s.dual.v)},
                              {"csc", to_json(run.csc)},  {"scsc", to_json(run.scsc)}};
      primal[run.name] = {{"x", to_json(s.primal.x)}, {"u", to_json(s.primal.u)},
                          {"t", s.t_star}};
      dual[run.name] = {{"y", to_json(s.dual.y)}, {"z", s.dual.z}, {"v", to_json(s.dual.v)}};
      checks[run.name] = {{"csc", to_json(run.csc)}, {"scsc", to_json(run.scsc)}};
    }
    doc["approaches"] = approaches;
    doc["primal"] = primal;
    doc["dual"] = dual;
    doc["checks"] = checks;
  }
  if (report.partition) doc["partition"] = to_json(*report.partition);
  if (report.cross_check) doc["cross_check"] = *report.cross_check;
  json timings = json::object();
  for (const auto& [stage, ms] : report.timings) timings[stage + "_ms"] = ms;
  doc["timings"] = timings;
  out << doc.dump(2) << '\n';
}

std::string num(double value) {
  std::ostringstream os;
  os << std::setprecision(6) << value;
  return os.str();
}

std::string vec(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + num(v[k]);
  return s + ")";
}

std::string set(const IndexSet& indices) {
  if (indices.empty()) return "{}";
  std::string s = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    s += (k ? "," : "") + std::to_string(indices[k] + 1);
  }
  return s + "}";
}

void write_text(const Report& report, std::ostream& out) {
  auto line = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(16) << key << value << '\n';
  };
  if (report.denominator_min) line("denominator_min", num(*report.denominator_min));
  if (report.theta_star) line("theta_star", num(*report.theta_star));
  for (const ApproachRun& run : report.runs) {
    const StrictComplementarySolution& s = run.sol;
    out << "approach " << run.name << '\n';
    line("  x", vec(s.primal.x));
    line("  u", vec(s.primal.u));
    line("  t", num(s.t_star));
    line("  y", vec(s.dual.y));
    line("  z", num(s.dual.z));
    line("  v", vec(s.dual.v));
    line("  csc", "x.v=" + num(run.csc.x_dot_v) + " y.u=" + num(run.csc.y_dot_u) +
                      (run.csc.passed ? " passed" : " FAILED"));
    std::string scsc = "min(x+v)=" + num(run.scsc.min_x_plus_v) +
                       " min(y+u)=" + num(run.scsc.min_y_plus_u);
    if (!run.scsc.passed) {
      scsc += " FAILED n" + set(run.scsc.failing_n) + " m" + set(run.scsc.failing_m);
    } else {
      scsc += " passed";
    }
    line("  scsc", scsc);
  }
  if (report.partition) {
    const OptimalPartition& part = *report.partition;
    out << "partition\n";
    line("  sigma_x", set(part.sigma_x));
    line("  sigma_v", set(part.sigma_v));
    line("  sigma_u", set(part.sigma_u));
    line("  sigma_y", set(part.sigma_y));
  }
  if (report.cross_check) line("cross_check", *report.cross_check ? "true" : "false");
  line("status", report.status);
  if (report.timings.empty()) return;
  std::string timings;
  for (const auto& [stage, ms] : report.timings) {
    timings += (timings.empty() ? "" : " ") + stage + "=" + num(ms) + "ms";
  }
  line("timings", timings);
}

int execute(const Options& options, Report& report, std::ostream& err) {
  const auto total_start = Clock::now();
  SolverOptions opts;
  opts.feas_tol = options.tol;
  opts.opt_tol = options.tol;

  const LFPProblem p = parse_problem(read_file(options.input));

  if (options.validate_denominator) {
    const auto start = Clock::now();
    report.denominator_min = validate_denominator(p, opts);
    report.timings.emplace_back("denominator", millis_since(start));
    if (*report.denominator_min <= options.tol) {
      throw Error(ErrorCode::NonpositiveDenominator,
                  "denominator minimum over X is " + num(*report.denominator_min));
    }
  }

  const auto stage1 = Clock::now();
  report.theta_star = solve_theta_star(p, opts);
  report.timings.emplace_back("stage1", millis_since(stage1));

  std::vector<std::string> names;
  if (options.approach != "two") names.push_back("one");
  if (options.approach != "one") names.push_back("two");
  for (const std::string& name : names) {
    report.runs.push_back(run_approach(name, p, opts, options.pos_tol));
    report.timings.emplace_back(name, report.runs.back().millis);
  }

  bool ok = true;
  for (const ApproachRun& run : report.runs) {
    for (const NumericalWarning& w : run.scsc.warnings) {
      err << "warning: approach " << run.name << ": " << w.component << "[" << w.index + 1
          << "] = " << w.value << " is close to pos-tol\n";
    }
    if (!run.passed()) {
      err << "approach " << run.name << ": strict complementarity verification failed\n";
      ok = false;
    }
    if (!report.partition && run.partition) report.partition = run.partition;
  }
  if (report.runs.size() == 2) {
    const auto& a = report.runs[0].partition;
    const auto& b = report.runs[1].partition;
    report.cross_check = a && b && *a == *b;
    if (!*report.cross_check) {
      err << "partition cross-check between approaches failed\n";
      ok = false;
    }
  }
  report.timings.emplace_back("total", millis_since(total_start));
  if (!ok) {
    report.status = "verification_failed";
    return kNumericalFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strict complementary solutions and optimal partitions for linear "
               "fractional programs",
               "lfp_scsc"};
  Options options;
  app.add_option("--input", options.input, "Problem file (JSON)")->required();
  app.add_option("--approach", options.approach, "Which approach to run")
      ->check(CLI::IsMember({"one", "two", "both"}))
      ->capture_default_str();
  app.add_option("--tol", options.tol, "Feasibility and optimality tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--pos-tol", options.pos_tol, "Positivity threshold for supports")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--validate-denominator", options.validate_denominator,
               "Certify d.x + beta > 0 over X with an extra LP");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Report report;
  int code = kOk;
  try {
    code = execute(options, report, err);
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    report.status = status_for(code);
    report.error = e.what();
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    code = kNumericalFailure;
    report.status = status_for(code);
    report.error = e.what();
    err << "error: " << e.what() << '\n';
  }

  if (options.format == "json") {
    write_json(report, out);
  } else {
    write_text(report, out);
  }
  return code;
}

}  // namespace lfpscsc::cli
