#include "app.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "verify.hpp"

namespace relbell::cli {

namespace {

using json = nlohmann::ordered_json;

/// A bad flag value; `what()` already names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_flag(const std::string& flag, const std::string& why) {
  throw UsageError(flag + ": " + why);
}

double parse_real(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) bad_flag(flag, "expected a number, got '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

ThreeVector parse_vector(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) bad_flag(flag, "expected x,y,z, got '" + text + "'");
  const ThreeVector v(parse_real(parts[0], flag), parse_real(parts[1], flag), parse_real(parts[2], flag));
  if (v.norm() == 0.0) bad_flag(flag, "vector must be non-zero");
  return v;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

/// Writes to stdout, or to `path` via a temporary file renamed on success.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("--out: cannot write '" + path + "'");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw UsageError("--out: write to '" + path + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageError("--out: cannot rename into '" + path + "'");
  }
}

BoostParams make_boost(const RunConfig& cfg, double beta) {
  if (!(beta >= 0.0) || beta > kBetaMax) bad_flag("--beta", "speed " + format_number(beta) + " outside [0, 0.999999]");
  return BoostParams(beta, UnitVector::normalize(cfg.boost_dir), cfg.mass);
}

std::vector<double> betas(const RunConfig& cfg) {
  if (!cfg.beta_grid.empty()) return cfg.beta_grid;
  if (cfg.beta) return {*cfg.beta};
  bad_flag("--beta-grid", "a beta grid (or --beta) is required");
}

MeasurementSettings settings_for(const RunConfig& cfg) {
  const auto plane = boost_plane(UnitVector::normalize(cfg.boost_dir));
  const MeasurementSettings canon = canonical_settings(plane);
  const std::array<UnitVector, 4> defaults{canon.a, canon.a_prime, canon.b, canon.b_prime};
  std::array<UnitVector, 4> v = defaults;
  for (std::size_t i = 0; i < 4; ++i)
    if (cfg.directions[i]) v[i] = UnitVector::normalize(*cfg.directions[i]);
  return {v[0], v[1], v[2], v[3]};
}

json vec_json(const ThreeVector& v) { return json::array({v[0], v[1], v[2]}); }

int run_correlator(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.beta) bad_flag("--beta", "the correlator command needs a single --beta");
  const BoostParams boost = make_boost(cfg, *cfg.beta);
  const MeasurementSettings s = settings_for(cfg);
  const std::vector<OperatorKind> kinds =
      cfg.operators.empty() ? std::vector<OperatorKind>{OperatorKind::PauliLubanski} : cfg.operators;

  std::string text;
  json records = json::array();
  if (cfg.format == Format::Csv) {
    std::vector<std::string> head{"beta", "boost_x", "boost_y", "boost_z", "operator"};
    for (const char* name : {"a", "a_prime", "b", "b_prime"})
      for (const char* axis : {"_x", "_y", "_z"}) head.push_back(std::string(name) + axis);
    for (const char* e : {"E_ab", "E_a_prime_b", "E_a_b_prime", "E_a_prime_b_prime", "chsh", "converged"})
      head.emplace_back(e);
    text += join(head);
  }
  for (OperatorKind kind : kinds) {
    const auto e = chsh_correlators(s, boost, kind);
    const double chsh = std::abs(e[0] + e[1] + e[2] - e[3]);
    const ThreeVector dir = boost.direction().vec();
    if (cfg.format == Format::Csv) {
      std::vector<std::string> row{format_number(boost.speed()), format_number(dir[0]), format_number(dir[1]),
                                   format_number(dir[2]), std::string(to_string(kind))};
      for (const UnitVector* u : {&s.a, &s.a_prime, &s.b, &s.b_prime})
        for (int i = 0; i < 3; ++i) row.push_back(format_number((*u)[i]));
      for (double x : e) row.push_back(format_number(x));
      row.push_back(format_number(chsh));
      row.push_back(csv_bool(true));
      text += join(row);
    } else {
      records.push_back({{"beta", boost.speed()},
                         {"boost_dir", vec_json(dir)},
                         {"operator", to_string(kind)},
                         {"settings",
                          {{"a", vec_json(s.a.vec())},
                           {"a_prime", vec_json(s.a_prime.vec())},
                           {"b", vec_json(s.b.vec())},
                           {"b_prime", vec_json(s.b_prime.vec())}}},
                         {"E_ab", e[0]},
                         {"E_a_prime_b", e[1]},
                         {"E_a_b_prime", e[2]},
                         {"E_a_prime_b_prime", e[3]},
                         {"chsh", chsh},
                         {"converged", true}});
    }
  }
  if (cfg.format == Format::Json) text = records.dump(2) + '\n';
  emit(cfg.out_path, text, out);
  return 0;
}

int run_chsh_scan(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> grid = betas(cfg);
  std::vector<BoostParams> boosts;
  for (double b : grid) boosts.push_back(make_boost(cfg, b));
  const std::vector<OperatorKind> kinds =
      cfg.operators.empty() ? std::vector<OperatorKind>{OperatorKind::PauliLubanski, OperatorKind::Czachor}
                            : cfg.operators;

  OptimizerConfig opt = cfg.optimizer;
  opt.parallel = false;
  std::vector<std::future<ChshResult>> jobs;
  for (const BoostParams& b : boosts)
    for (OperatorKind kind : kinds)
      jobs.push_back(std::async(std::launch::async, [=] { return chsh_maximize(b, kind, opt, cfg.restriction); }));

  std::string text;
  json rows = json::array();
  if (cfg.format == Format::Csv) text += "beta,operator,restriction,chsh_max,converged,iterations\n";
  for (auto& job : jobs) {
    const ChshResult r = job.get();
    if (cfg.format == Format::Csv) {
      text += join({format_number(r.boost.speed()), std::string(to_string(r.kind)), std::string(to_string(r.restriction)),
                    format_number(r.value), csv_bool(r.converged), std::to_string(r.iterations)});
    } else {
      rows.push_back({{"beta", r.boost.speed()},
                      {"operator", to_string(r.kind)},
                      {"restriction", to_string(r.restriction)},
                      {"chsh_max", r.value},
                      {"converged", r.converged},
                      {"iterations", r.iterations}});
    }
  }
  if (cfg.format == Format::Json) text = rows.dump(2) + '\n';
  emit(cfg.out_path, text, out);
  return 0;
}

int run_compare(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> grid = betas(cfg);
  const MeasurementSettings s = settings_for(cfg);
  std::string text;
  json rows = json::array();
  if (cfg.format == Format::Csv) text += "beta,E_pauli_lubanski,E_czachor,delta\n";
  for (double beta : grid) {
    const BoostParams boost = make_boost(cfg, beta);
    const double pl = correlator(s.a, s.b, boost);
    const double cz = czachor_correlator(s.a, s.b, boost.velocity());
    if (cfg.format == Format::Csv) {
      text += join({format_number(beta), format_number(pl), format_number(cz), format_number(cz - pl)});
    } else {
      rows.push_back({{"beta", beta}, {"E_pauli_lubanski", pl}, {"E_czachor", cz}, {"delta", cz - pl}});
    }
  }
  if (cfg.format == Format::Json) text = rows.dump(2) + '\n';
  emit(cfg.out_path, text, out);
  return 0;
}

int run_verify_command(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.inject_fault = cfg.inject_fault;
  const auto checks = run_verify(opts);
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;

  std::string text;
  if (cfg.format == Format::Json) {
    json report = {{"passed", all}, {"checks", json::array()}};
    for (const auto& c : checks)
      report["checks"].push_back(
          {{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"tolerance", c.tolerance}});
    text = report.dump(2) + '\n';
  } else {
    for (const auto& c : checks)
      text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " residual=" + format_number(c.residual) +
              " tol=" + format_number(c.tolerance) + '\n';
  }
  emit(cfg.out_path, text, out);
  return all ? 0 : 1;
}

}  // namespace

std::vector<double> parse_beta_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) bad_flag("--beta-grid", "expected start:stop:step, got '" + spec + "'");
  const double start = parse_real(parts[0], "--beta-grid");
  const double stop = parse_real(parts[1], "--beta-grid");
  const double step = parse_real(parts[2], "--beta-grid");
  if (step <= 0.0) bad_flag("--beta-grid", "step must be positive");
  if (start < 0.0 || stop < start) bad_flag("--beta-grid", "need 0 <= start <= stop");
  if (stop > kBetaMax) bad_flag("--beta-grid", "stop exceeds 0.999999");
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) bad_flag("--beta-grid", "grid has too many points");
  std::vector<double> grid;
  for (long k = 0; k < count; ++k) {
    // snap to 12 decimals so 0.11 * 9 prints as 0.99
    const double v = std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12;
    grid.push_back(std::min(v, stop));
  }
  return grid;
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic Bell correlations with Dirac spinors", "relbell"};
  app.require_subcommand(1);

  std::string beta, grid, boost_dir, op, format = "csv";
  std::array<std::string, 4> dirs;
  bool plane_angles = false;
  bool json_flag = false;
  RunConfig cfg;

  app.add_option("--mass", cfg.mass, "particle mass (natural units)");
  app.add_option("--beta", beta, "boost speed as a fraction of c");
  app.add_option("--beta-grid", grid, "inclusive grid start:stop:step");
  app.add_option("--boost-dir", boost_dir, "boost direction x,y,z (normalized)");
  app.add_option("--a", dirs[0], "setting a: x,y,z or degrees with --plane");
  app.add_option("--a-prime", dirs[1], "setting a'");
  app.add_option("--b", dirs[2], "setting b");
  app.add_option("--b-prime", dirs[3], "setting b'");
  app.add_flag("--plane", plane_angles, "read settings as angles in degrees within the boost plane");
  app.add_option("--operator", op, "pauli-lubanski | czachor | both");
  app.add_flag("--restrict-plane", "confine CHSH settings to the plane containing the boost");
  app.add_option("--seed", cfg.optimizer.seed, "optimizer seed");
  app.add_option("--tol", cfg.optimizer.tol, "optimizer value tolerance");
  app.add_option("--starts", cfg.optimizer.starts, "optimizer multistart count");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv | json");
  app.add_flag("--json", json_flag, "same as --format json");
  app.add_flag("--inject-fault", cfg.inject_fault, "")->group("");

  app.add_subcommand("verify", "run the invariant suite; exit 1 on any failure")->fallthrough();
  app.add_subcommand("correlator", "four correlators and the CHSH value at one speed")->fallthrough();
  app.add_subcommand("chsh-scan", "maximize CHSH over settings along a speed grid")->fallthrough();
  app.add_subcommand("compare", "E(a,b) under both spin operators along a speed grid")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!(cfg.mass > 0.0) || !std::isfinite(cfg.mass)) bad_flag("--mass", "must be positive");
    if (!(cfg.optimizer.tol > 0.0)) bad_flag("--tol", "must be positive");
    if (cfg.optimizer.starts < 1) bad_flag("--starts", "must be at least 1");
    if (!beta.empty()) cfg.beta = parse_real(beta, "--beta");
    if (cfg.beta && (*cfg.beta < 0.0 || *cfg.beta > kBetaMax)) bad_flag("--beta", "must lie in [0, 0.999999]");
    if (!grid.empty()) cfg.beta_grid = parse_beta_grid(grid);
    if (!boost_dir.empty()) cfg.boost_dir = parse_vector(boost_dir, "--boost-dir");
    cfg.restriction = app.count("--restrict-plane") ? PlaneRestriction::BoostPlane : PlaneRestriction::None;

    static const std::array<std::string, 4> kFlags{"--a", "--a-prime", "--b", "--b-prime"};
    const auto plane = boost_plane(UnitVector::normalize(cfg.boost_dir));
    for (std::size_t i = 0; i < 4; ++i) {
      if (dirs[i].empty()) continue;
      cfg.directions[i] = plane_angles ? planar_direction(plane, parse_real(dirs[i], kFlags[i])).vec()
                                       : parse_vector(dirs[i], kFlags[i]);
    }

    if (op == "pauli-lubanski")
      cfg.operators = {OperatorKind::PauliLubanski};
    else if (op == "czachor")
      cfg.operators = {OperatorKind::Czachor};
    else if (op == "both")
      cfg.operators = {OperatorKind::PauliLubanski, OperatorKind::Czachor};
    else if (!op.empty())
      bad_flag("--operator", "expected pauli-lubanski, czachor or both, got '" + op + "'");

    if (json_flag) format = "json";
    if (format == "csv")
      cfg.format = Format::Csv;
    else if (format == "json")
      cfg.format = Format::Json;
    else
      bad_flag("--format", "expected csv or json, got '" + format + "'");

    if (cfg.command == "verify") return run_verify_command(cfg, out);
    if (cfg.command == "correlator") return run_correlator(cfg, out);
    if (cfg.command == "chsh-scan") return run_chsh_scan(cfg, out);
    return run_compare(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace relbell::cli
