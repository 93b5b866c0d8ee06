#include "eigenop/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "eigenop/classify.hpp"
#include "eigenop/json_io.hpp"
#include "eigenop/rng.hpp"
#include "eigenop/selftest.hpp"
#include "eigenop/verify.hpp"

namespace eigenop::cli {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  try {
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
    std::ifstream in(text);
    if (!in) usage("cannot read " + text);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    usage("malformed JSON in " + text + ": " + e.what());
  }
}

NamedSeries parse_target(const std::string& text, std::size_t index) {
  const auto eq = text.find('=');
  const auto brace = text.find_first_of("[{");
  if (eq != std::string::npos && (brace == std::string::npos || eq < brace)) {
    return {text.substr(0, eq), series_from_json(load_json(text.substr(eq + 1)))};
  }
  return {"target" + std::to_string(index), series_from_json(load_json(text))};
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::classify: return "classify";
    case Command::orbit: return "orbit";
    case Command::construct: return "construct";
    case Command::verify: return "verify";
    case Command::selftest: return "selftest";
  }
  return "unknown";
}

Json budget_json(const Budget& b) {
  return {{"max_degree", b.max_degree},
          {"leibniz_work", b.leibniz_work},
          {"mn_search_cap", b.mn_search_cap},
          {"max_iterations", b.max_iterations},
          {"schedule_window", b.schedule_window}};
}

struct Outcome {
  Json json;
  std::string csv;  // used instead of json when non-empty
  bool ok = true;
};

Outcome run_verify(const ExperimentConfig& c) {
  const EigenOp& op = *c.op;
  Rng rng = Rng(c.seed).split("verify/" + c.lemma);
  LemmaReport report;
  if (c.lemma == "iteracionpolinomio") {
    report = verify_iteracionpolinomio(op, c.M, c.n_max ? c.n_max : 5, c.samples, rng, c.budget);
  } else if (c.lemma == "infinf") {
    const std::size_t m = c.m ? c.m : c.n * op.d() + 1;
    report = verify_infinf(c.n, op.d(), op.lambda(), c.samples, m, rng);
  } else if (c.lemma == "supsup") {
    report = verify_supsup(op, c.n_max ? c.n_max : 5, c.samples, rng);
  } else {
    report = verify_modulo1_estimate(op, c.M, c.n, c.s_max, c.budget);
  }
  Json j = to_json(report);
  j["op"] = to_json(op);
  j["seed"] = c.seed;
  return {j, {}, report.passed()};
}

Outcome execute(const ExperimentConfig& c) {
  switch (c.command) {
    case Command::classify: {
      Json j = {{"op", to_json(*c.op)}};
      const Json verdicts = to_json(classify(*c.op));
      for (auto& [k, v] : verdicts.items()) j[k] = v;
      return {j, {}, true};
    }
    case Command::orbit: {
      const auto seminorms = c.seminorms.empty() ? std::vector<Seminorm>{Seminorm::rho(1.0)} : c.seminorms;
      const auto record = orbit(*c.op, *c.start, c.n_max ? c.n_max : 20, seminorms, c.targets, c.projective, c.budget);
      if (c.format == Format::csv) {
        std::ostringstream s;
        write_orbit_csv(s, record);
        return {{}, s.str(), true};
      }
      return {to_json(record), {}, true};
    }
    case Command::construct: {
      const Seminorm s = c.seminorms.empty() ? Seminorm::rho(1.0) : c.seminorms.front();
      const auto report = construct_supercyclic(*c.op, c.targets, c.tol, s, c.budget);
      Json j = {{"op", to_json(*c.op)}};
      const Json body = to_json(report);
      for (auto& [k, v] : body.items()) j[k] = v;
      return {j, {}, true};
    }
    case Command::verify:
      return run_verify(c);
    case Command::selftest: {
      Json j = selftest(c.seed, c.budget);
      const bool ok = j.at("passed").get<bool>();
      return {j, {}, ok};
    }
  }
  usage("unknown command");
}

void write_meta(const ExperimentConfig& c, std::chrono::system_clock::time_point started, double elapsed) {
  const std::time_t t = std::chrono::system_clock::to_time_t(started);
  std::ostringstream stamp;
  stamp << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  const Json meta = {{"command", std::string(command_name(c.command))},
                     {"lemma", c.lemma},
                     {"seed", c.seed},
                     {"started_utc", stamp.str()},
                     {"elapsed_seconds", elapsed},
                     {"budget", budget_json(c.budget)}};
  std::ofstream out(c.out_path + ".meta.json");
  out << meta.dump(2) << '\n';
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) usage("cannot write " + path);
  file << text;
}

}  // namespace

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::precondition:
      return kExitUsage;
    case ErrorCode::budget:
    case ErrorCode::truncation:
    case ErrorCode::numeric:
      return kExitBudget;
  }
  return kExitUsage;
}

void validate(const ExperimentConfig& c) {
  if (c.command != Command::selftest && !c.op) usage("--op is required for " + std::string(command_name(c.command)));
  if (c.format == Format::csv && c.command != Command::orbit) usage("--format csv is only available for orbit");
  switch (c.command) {
    case Command::orbit:
      if (!c.start) usage("orbit needs a starting vector (--f)");
      if (c.projective && c.targets.empty()) usage("--projective needs at least one --target");
      break;
    case Command::construct:
      if (c.targets.empty()) usage("construct needs at least one --target");
      if (!(c.tol > 0.0)) usage("--tol must be > 0");
      break;
    case Command::verify:
      if (c.lemma != "iteracionpolinomio" && c.lemma != "infinf" && c.lemma != "supsup" &&
          c.lemma != "modulo1_estimate") {
        usage("unknown lemma '" + c.lemma + "' (iteracionpolinomio, infinf, supsup, modulo1_estimate)");
      }
      if (c.samples == 0) usage("--samples must be >= 1");
      break;
    default:
      break;
  }
}

int run(const ExperimentConfig& config, std::ostream& out) {
  validate(config);
  const auto started = std::chrono::system_clock::now();
  const auto tick = std::chrono::steady_clock::now();
  const Outcome outcome = execute(config);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - tick).count();

  emit(outcome.csv.empty() ? outcome.json.dump(2) + "\n" : outcome.csv, config.out_path, out);
  if (!config.out_path.empty()) write_meta(config, started, elapsed);
  return outcome.ok ? kExitOk : kExitFailure;
}

std::string schema_text() {
  return R"(eigenop_lab input and output formats

complex   [re, im]  (a bare number is read as a real value)
series    [[re, im], ...]  coefficients a_0..a_N, lowest degree first;
          {"coeffs": series} and construct output (its "vector") are accepted too
phi       {"poly": [complex, ...], "b": complex, "builtin": "none"|"cos"|"sin_over_z"|"cosh"}
          phi(z) = P(z) exp(b z) builtin(z)
op        {"lambda": complex, "phi": phi}
seminorm  rho:M | rho(M) | sup:r | sup_disk(r)
target    id=<series JSON or file>

classify  {"op", "hc", "sc", "hc_inf", "sc_inf"}, each class {"verdict", "citation", "note"}
orbit     {"op", "start", "projective", "seminorms", "targets",
           "entries": [{"n", "scalar", "seminorms", "seminorms_upper", "target_distances"}]}
construct {"op", "vector", "schedule": [{"target", "k", "mu", "achieved_distance", "basis_degree"}],
           "tolerance", "seminorm"}
verify    {"lemma", "parameters", "thresholds", "sampling", "checked", "violations",
           "worst_margin", "passed", "op", "seed"}
selftest  {"seed", "passed", "checks": [{"name", "passed", "value", "limit"}]}
error     {"error": {"code", "exit_status", "message"}}

orbit CSV columns, in order:
  n, scalar_re, scalar_im,
  one column per --seminorm named rho(M) or sup_disk(r); sup_disk adds sup_disk(r)_upper (rho_r bound),
  dist_<id> per --target (rho_1 distance of the scaled iterate to the target)

exit status: 0 ok, 1 verification or selftest failure, 2 usage or validation error,
             3 budget, truncation or numeric error
--out PATH also writes PATH.meta.json (timestamp, elapsed time, budget)
)";
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"eigenop_lab: experiments with extended eigenoperators L = R_lambda phi(D)"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  ExperimentConfig config;
  bool schema = false;
  std::string op_text;
  std::string start_text;
  std::vector<std::string> target_texts;
  std::vector<std::string> seminorm_texts;
  std::string format = "json";

  app.add_flag("--schema", schema, "Print input/output formats and CSV columns");
  app.add_option("--op", op_text, "Operator JSON (file or inline)");
  app.add_option("--f", start_text, "Starting vector for orbit (series JSON, file or inline)");
  app.add_option("--target", target_texts, "Target id=<series>; repeatable");
  app.add_option("--seminorm", seminorm_texts, "rho:M or sup:r; repeatable");
  app.add_flag("--projective", config.projective, "Scale each iterate toward the first target");
  app.add_option("--n-max", config.n_max, "Orbit length / largest n");
  app.add_option("--tol", config.tol, "Construction tolerance");
  app.add_option("--samples", config.samples, "Random samples per lemma check");
  app.add_option("--seed", config.seed, "Seed for all random sampling");
  app.add_option("--M", config.M, "Seminorm radius for lemma checks");
  app.add_option("--n", config.n, "Iterate index for infinf / modulo1_estimate");
  app.add_option("--m", config.m, "Vanishing order for infinf (default n d + 1)");
  app.add_option("--s-max", config.s_max, "Largest monomial degree for modulo1_estimate");
  app.add_option("--out", config.out_path, "Output path (default stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* classify_cmd = app.add_subcommand("classify", "Place L in the HC / SC / HC_inf / SC_inf taxonomy");
  auto* orbit_cmd = app.add_subcommand("orbit", "Trace (projective) orbit seminorms");
  auto* construct_cmd = app.add_subcommand("construct", "Build an approximate supercyclic vector");
  auto* verify_cmd = app.add_subcommand("verify", "Check a lemma inequality numerically");
  verify_cmd->add_option("lemma", config.lemma, "iteracionpolinomio | infinf | supsup | modulo1_estimate")
      ->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");

  auto fail = [&](std::string_view code, int status, const std::string& message) {
    err << "eigenop_lab: " << message << '\n';
    const std::string text = error_envelope(code, status, message).dump(2) + "\n";
    try {
      emit(text, config.out_path, out);
    } catch (const Error&) {
      out << text;
    }
    return status;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail("usage", kExitUsage, e.what());
  }

  if (schema) {
    out << schema_text();
    return kExitOk;
  }
  if (app.get_subcommands().empty()) return fail("usage", kExitUsage, "a subcommand is required (see --help)");

  try {
    config.budget = Budget::from_env();
    config.format = format == "csv" ? Format::csv : Format::json;
    if (classify_cmd->parsed()) config.command = Command::classify;
    if (orbit_cmd->parsed()) config.command = Command::orbit;
    if (construct_cmd->parsed()) config.command = Command::construct;
    if (verify_cmd->parsed()) config.command = Command::verify;
    if (selftest_cmd->parsed()) config.command = Command::selftest;
    if (!op_text.empty()) config.op = op_from_json(load_json(op_text));
    if (!start_text.empty()) config.start = series_from_json(load_json(start_text));
    for (std::size_t i = 0; i < target_texts.size(); ++i) config.targets.push_back(parse_target(target_texts[i], i));
    for (const auto& s : seminorm_texts) config.seminorms.push_back(Seminorm::parse(s));
    return run(config, out);
  } catch (const Error& e) {
    return fail(to_string(e.code()), exit_status(e.code()), e.what());
  } catch (const Json::exception& e) {
    return fail("invalid_argument", kExitUsage, std::string("bad JSON value: ") + e.what());
  }
}

}  // namespace eigenop::cli
