#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "umbra/basic_sequence.hpp"
#include "umbra/delta_series.hpp"
#include "umbra/errors.hpp"
#include "umbra/euler.hpp"
#include "umbra/identities.hpp"
#include "umbra/serialization.hpp"

namespace umbra::cli {
namespace {

using nlohmann::json;

constexpr const char* kCsvColumns =
    "CSV columns (one header line, then one row per record):\n"
    "  basic-polys   n,power,coefficient\n"
    "  discretize    n,c_nm2,c_nm1,c_nn\n"
    "  solve         basis,free_index,n,value\n"
    "  verify        n,residual\n"
    "  limit-study   h,error,ratio   (ratio empty when undefined)\n"
    "  identities    identity,n_max,samples,checks,passed\n"
    "Rationals are always written as p/q in lowest terms.\n"
    "UMBRA_TRUNCATION_BOUND overrides the operator truncation degree (default 64).";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string subcommand;
  std::string op = "forward";
  std::string a;
  std::string b;
  std::string h = "1";
  std::string x;
  std::string h_list;
  std::string values_path;
  std::string samples;
  std::size_t degree = 0;
  std::size_t n_max = 0;
  std::size_t r = 0;
  std::string format = "json";
  std::string output;
};

struct CommandResult {
  int status = kExitOk;
  std::string body;
};

Rational flag_rational(const char* flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Rational flag_spacing(const char* flag, const std::string& text) {
  Rational h = flag_rational(flag, text);
  if (sgn(h) <= 0) throw UsageError(std::string(flag) + ": spacing must be positive");
  return h;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::size_t truncation_bound(const Environment& env) {
  if (!env.truncation_bound) return kDefaultTruncationBound;
  const std::string& s = *env.truncation_bound;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw UsageError("UMBRA_TRUNCATION_BOUND: expected a positive integer, got '" + s + "'");
  }
  return value;
}

std::string json_body(const json& doc) { return doc.dump(2) + "\n"; }

CommandResult basic_polys(const CliConfig& cfg, bool csv, const Environment& env) {
  const auto kind = parse_delta_kind(cfg.op);
  if (!kind) throw UsageError("--op: expected forward, backward, symmetric or derivative");
  const Rational h = flag_spacing("--h", cfg.h);
  const std::size_t bound = truncation_bound(env);
  if (cfg.degree > bound) {
    throw UsageError("--degree: " + std::to_string(cfg.degree) +
                     " exceeds the truncation bound " + std::to_string(bound));
  }
  const DeltaSeries q = make_delta(*kind, h, std::max<std::size_t>(bound, 1));
  const BasicSequence seq = basic_sequence(q, cfg.degree);
  const bool axioms = check_basic(q, seq).passed();

  if (csv) {
    std::string body = "n,power,coefficient\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
      const auto coeffs = seq[n].coefficients();
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        body += std::to_string(n) + "," + std::to_string(k) + "," + to_string(coeffs[k]) + "\n";
      }
    }
    return {kExitOk, body};
  }
  json polys = json::array();
  for (const auto& p : seq.polys) {
    json row = json::array();
    for (const auto& c : p.coefficients()) row.push_back(to_string(c));
    polys.push_back(std::move(row));
  }
  return {kExitOk, json_body(json{{"op", cfg.op},
                                  {"h", to_string(h)},
                                  {"degree", cfg.degree},
                                  {"axioms_hold", axioms},
                                  {"polys", std::move(polys)}})};
}

EulerProblem problem_from(const CliConfig& cfg) {
  return EulerProblem{flag_rational("--a", cfg.a), flag_rational("--b", cfg.b)};
}

CommandResult discretize(const CliConfig& cfg, bool csv) {
  const DiscreteEulerEquation equation(problem_from(cfg));
  if (csv) {
    std::string body = "n,c_nm2,c_nm1,c_nn\n";
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
      const auto c = equation.coefficients(n);
      body += std::to_string(n) + "," + to_string(c.c_nm2) + "," + to_string(c.c_nm1) + "," +
              to_string(c.c_nn) + "\n";
    }
    return {kExitOk, body};
  }
  json doc = equation_table_json(equation, cfg.n_max);
  doc["indicial"] = to_json(indicial_roots(equation.problem()));
  return {kExitOk, json_body(doc)};
}

CommandResult solve(const CliConfig& cfg, bool csv) {
  const SolutionSpace space =
      solve_recurrence(problem_from(cfg), cfg.n_max, flag_spacing("--h", cfg.h));
  if (csv) {
    std::string body = "basis,free_index,n,value\n";
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
      const auto& values = space.basis[i].values;
      for (std::size_t n = 0; n < values.size(); ++n) {
        body += std::to_string(i) + "," + std::to_string(space.free_indices[i]) + "," +
                std::to_string(n) + "," + to_string(values[n]) + "\n";
      }
    }
    return {kExitOk, body};
  }
  return {kExitOk, json_body(to_json(space))};
}

CommandResult verify(const CliConfig& cfg, bool csv) {
  const EulerProblem problem = problem_from(cfg);
  std::ifstream in(cfg.values_path);
  if (!in) throw UsageError("--values: cannot open '" + cfg.values_path + "'");
  LatticeFunction u;
  try {
    u = lattice_function_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(std::string("--values: ") + e.what());
  } catch (const ParseError& e) {
    throw UsageError(std::string("--values: ") + e.what());
  }
  if (u.values.size() < 3) throw UsageError("--values: need at least three lattice values");

  const auto residuals = verify_solution(u, problem);
  bool passed = true;
  for (const auto& r : residuals) passed = passed && sgn(r.value) == 0;
  const int status = passed ? kExitOk : kExitCheckFailed;

  if (csv) {
    std::string body = "n,residual\n";
    for (const auto& r : residuals) body += std::to_string(r.n) + "," + to_string(r.value) + "\n";
    return {status, body};
  }
  json rows = json::array();
  for (const auto& r : residuals) rows.push_back(json{{"n", r.n}, {"residual", to_string(r.value)}});
  return {status, json_body(json{{"a", to_string(problem.a)},
                                 {"b", to_string(problem.b)},
                                 {"h", to_string(u.h)},
                                 {"residuals", std::move(rows)},
                                 {"passed", passed}})};
}

CommandResult limit_study(const CliConfig& cfg, bool csv) {
  const Rational x = flag_rational("--x", cfg.x);
  if (sgn(x) <= 0) throw UsageError("--x: must be positive");
  std::vector<Rational> hs;
  for (const auto& part : split(cfg.h_list, ',')) hs.push_back(flag_spacing("--h-list", part));
  if (hs.empty()) throw UsageError("--h-list: no spacings given");

  std::vector<LimitRow> rows;
  try {
    rows = continuous_limit_study(cfg.r, x, hs);
  } catch (const LatticeMismatchError& e) {
    throw UsageError(std::string("--h-list: ") + e.what());
  }
  if (csv) {
    std::string body = "h,error,ratio\n";
    for (const auto& row : rows) {
      body += to_string(row.h) + "," + to_string(row.error) + "," +
              (row.ratio ? to_string(*row.ratio) : std::string()) + "\n";
    }
    return {kExitOk, body};
  }
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back(json{{"h", to_string(row.h)},
                       {"error", to_string(row.error)},
                       {"ratio", row.ratio ? json(to_string(*row.ratio)) : json(nullptr)}});
  }
  return {kExitOk, json_body(json{{"r", cfg.r}, {"x", to_string(x)}, {"rows", std::move(out)}})};
}

CommandResult identities(const CliConfig& cfg, bool csv) {
  std::vector<EulerProblem> samples;
  if (cfg.samples.empty()) {
    samples = default_identity_samples();
  } else {
    for (const auto& pair : split(cfg.samples, ',')) {
      const auto ab = split(pair, ':');
      if (ab.size() != 2) throw UsageError("--samples: expected a:b pairs, got '" + pair + "'");
      samples.push_back({flag_rational("--samples", ab[0]), flag_rational("--samples", ab[1])});
    }
  }
  const auto reports = run_identity_suite(cfg.n_max, samples);
  bool passed = true;
  std::string body = csv ? "identity,n_max,samples,checks,passed\n" : "";
  for (const auto& report : reports) {
    passed = passed && report.passed();
    if (csv) {
      body += report.name + "," + std::to_string(report.n_max) + "," +
              std::to_string(report.samples) + "," + std::to_string(report.checks) + "," +
              (report.passed() ? "true" : "false") + "\n";
    } else {
      body += to_json(report).dump() + "\n";
    }
  }
  return {passed ? kExitOk : kExitCheckFailed, body};
}

void build_app(CLI::App& app, CliConfig& cfg) {
  app.description("Exact umbral discretization toolkit for the Euler equation x^2u'' + axu' + bu = 0");
  app.footer(kCsvColumns);
  // -h would collide with the --h spacing flag.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Write the report to this file instead of stdout");

  auto* basic = app.add_subcommand("basic-polys", "Basic polynomial sequence of a delta operator");
  basic->add_option("--op", cfg.op, "forward, backward, symmetric or derivative")
      ->capture_default_str();
  basic->add_option("--h", cfg.h, "Lattice spacing p/q")->capture_default_str();
  basic->add_option("--degree", cfg.degree, "Highest degree N")->required();

  auto* disc = app.add_subcommand("discretize", "Coefficient table of the discrete Euler equation");
  disc->add_option("--a", cfg.a, "Coefficient a (p/q)")->required();
  disc->add_option("--b", cfg.b, "Coefficient b (p/q)")->required();
  disc->add_option("--n-max", cfg.n_max, "Last row index")->required();

  auto* sol = app.add_subcommand("solve", "Solution space of the discrete Euler equation");
  sol->add_option("--a", cfg.a, "Coefficient a (p/q)")->required();
  sol->add_option("--b", cfg.b, "Coefficient b (p/q)")->required();
  sol->add_option("--n-max", cfg.n_max, "Last lattice index")->required();
  sol->add_option("--h", cfg.h, "Lattice spacing attached to the basis")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Residuals of lattice values against the equation");
  ver->add_option("--a", cfg.a, "Coefficient a (p/q)")->required();
  ver->add_option("--b", cfg.b, "Coefficient b (p/q)")->required();
  ver->add_option("--values", cfg.values_path, "LatticeFunction JSON file")->required();

  auto* lim = app.add_subcommand("limit-study", "Lattice solution error against x^r as h shrinks");
  lim->add_option("--r", cfg.r, "Exponent r")->required();
  lim->add_option("--x", cfg.x, "Evaluation point x > 0")->required();
  lim->add_option("--h-list", cfg.h_list, "Comma-separated spacings, each dividing x")->required();

  auto* ids = app.add_subcommand("identities", "Check the alternating binomial identities");
  ids->add_option("--n-max", cfg.n_max, "Largest n checked")->required();
  ids->add_option("--samples", cfg.samples, "Comma-separated a:b pairs (default: built-in set)");

  for (auto* sub : {basic, disc, sol, ver, lim, ids}) {
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* bound = std::getenv("UMBRA_TRUNCATION_BOUND")) env.truncation_bound = bound;
  return env;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const Environment& env) {
  CliConfig cfg;
  CLI::App app{"", "umbra"};
  build_app(app, cfg);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "umbra: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool csv = cfg.format == "csv";
  CommandResult result;
  try {
    if (cfg.subcommand == "basic-polys") {
      result = basic_polys(cfg, csv, env);
    } else if (cfg.subcommand == "discretize") {
      result = discretize(cfg, csv);
    } else if (cfg.subcommand == "solve") {
      result = solve(cfg, csv);
    } else if (cfg.subcommand == "verify") {
      result = verify(cfg, csv);
    } else if (cfg.subcommand == "limit-study") {
      result = limit_study(cfg, csv);
    } else {
      result = identities(cfg, csv);
    }
  } catch (const UsageError& e) {
    err << "umbra " << cfg.subcommand << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "umbra " << cfg.subcommand << ": " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    out << result.body;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "umbra: --output: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
    file << result.body;
  }
  return result.status;
}

}  // namespace umbra::cli
