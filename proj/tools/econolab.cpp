// Command-line front end: deterministic simulate / fit / verify drivers over
// the econolab library. Exit codes: 0 success, 1 usage, 2 I/O, 3 domain or
// fit error, 4 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "econolab/errors.hpp"
#include "econolab/estimate/garch.hpp"
#include "econolab/estimate/hill.hpp"
#include "econolab/estimate/jls_fit.hpp"
#include "econolab/estimate/regimes.hpp"
#include "econolab/io.hpp"
#include "econolab/random.hpp"
#include "econolab/series.hpp"
#include "econolab/simulate/ecology.hpp"
#include "econolab/simulate/impact.hpp"
#include "econolab/simulate/jls.hpp"
#include "econolab/simulate/kinematic.hpp"
#include "econolab/simulate/wiener.hpp"
#include "econolab/verify.hpp"
#include "econolab/version.hpp"

namespace {

using econolab::IoError;
using econolab::core::RandomSource;
using json = nlohmann::ordered_json;

struct OutputSpec {
  std::string path = "-";
  std::string format = "csv";
  std::uint64_t seed = 0;
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("write to stdout failed");
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

json base_document(const std::string& command, const std::string& subkind,
                   const OutputSpec& out, const json& config) {
  json doc;
  doc["version"] = econolab::kVersion;
  doc["command"] = command;
  doc["subkind"] = subkind;
  doc["seed"] = out.seed;
  doc["config"] = config;
  return doc;
}

/// Series goes to CSV (with a sidecar config echo) or to one JSON document.
void emit_series(const OutputSpec& out, const std::string& subkind,
                 const json& config, const econolab::io::CsvTable& table,
                 const json& metadata) {
  if (out.format == "csv") {
    std::ostringstream csv;
    econolab::io::write_csv(csv, table);
    write_text(out.path, csv.str());
    if (out.path != "-") {
      json meta = base_document("simulate", subkind, out, config);
      meta["metadata"] = metadata;
      write_text(out.path + ".meta.json", meta.dump(2) + "\n");
    }
    return;
  }
  json doc = base_document("simulate", subkind, out, config);
  doc["series"]["label"] = {table.time_label, table.value_label};
  doc["series"]["t"] = table.times;
  doc["series"]["value"] = table.values;
  doc["metadata"] = metadata;
  write_text(out.path, doc.dump(2) + "\n");
}

econolab::io::CsvTable read_input(const std::string& path) {
  if (path == "-") return econolab::io::read_csv(std::cin);
  return econolab::io::read_csv_file(path);
}

econolab::io::CsvTable indexed_table(const std::vector<double>& values,
                                     std::string value_label = "value") {
  econolab::io::CsvTable table;
  table.value_label = std::move(value_label);
  table.times.reserve(values.size());
  table.values = values;
  for (std::size_t i = 0; i < values.size(); ++i)
    table.times.push_back(double(i));
  return table;
}

// ---- simulate -------------------------------------------------------------

int run_simulate_wiener(const OutputSpec& out,
                        const econolab::simulate::WienerConfig& cfg) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/wiener");
  const auto series = econolab::simulate::wiener_path(cfg, rng);
  json config{{"mu", cfg.mu0}, {"h", cfg.h0},   {"p0", cfg.p0},
              {"n", cfg.n},    {"dt", cfg.dt}};
  econolab::io::CsvTable table;
  table.value_label = "price";
  table.times = series.times();
  table.values = series.prices();
  emit_series(out, "wiener", config, table, json::object());
  return 0;
}

int run_simulate_jls(const OutputSpec& out,
                     const econolab::simulate::JlsPathConfig& cfg) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/jls");
  const auto result = econolab::simulate::jls_path(cfg, rng);
  json config{{"bprime", cfg.hazard.b_prime}, {"cprime", cfg.hazard.c_prime},
              {"m", cfg.hazard.m},            {"omega", cfg.hazard.omega},
              {"phi", cfg.hazard.phi_prime},  {"tc", cfg.hazard.t_c},
              {"k", cfg.k},                   {"sigma", cfg.sigma},
              {"p0", cfg.p0},                 {"n", cfg.n},
              {"dt", cfg.dt}};
  json metadata;
  if (result.crash_time)
    metadata["crash_time"] = *result.crash_time;
  else
    metadata["crash_time"] = nullptr;
  econolab::io::CsvTable table;
  table.value_label = "price";
  table.times = result.series.times();
  table.values = result.series.prices();
  emit_series(out, "jls", config, table, metadata);
  return 0;
}

int run_simulate_ticks(const OutputSpec& out,
                       const econolab::simulate::ImpactTickParams& params,
                       int n) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/ticks");
  const auto ticks = econolab::simulate::impact_tick_stream(params, n, rng);
  json config{{"p", params.p},   {"ds1", params.dS1}, {"ds2", params.dS2},
              {"pa", params.pA}, {"pb", params.pB},   {"ds3", params.dS3},
              {"n", n}};
  int big = 0;
  std::vector<double> moves;
  moves.reserve(ticks.size());
  for (const auto& tick : ticks) {
    moves.push_back(tick.move);
    if (tick.regime == econolab::simulate::TickRegime::BigPlayer) ++big;
  }
  json metadata{{"regular_ticks", int(ticks.size()) - big},
                {"big_player_ticks", big}};
  if (out.format == "json") {
    json doc = base_document("simulate", "ticks", out, config);
    doc["samples"] = json::array();
    for (std::size_t i = 0; i < ticks.size(); ++i)
      doc["samples"].push_back(
          {{"t", i},
           {"regime", ticks[i].regime == econolab::simulate::TickRegime::Regular
                          ? "regular"
                          : "big_player"},
           {"move", ticks[i].move}});
    doc["metadata"] = metadata;
    write_text(out.path, doc.dump(2) + "\n");
    return 0;
  }
  emit_series(out, "ticks", config, indexed_table(moves), metadata);
  return 0;
}

int run_simulate_ecology(const OutputSpec& out,
                         const econolab::simulate::FundEcology& eco, int n) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/ecology");
  const auto volumes = econolab::simulate::fund_ecology_volumes(eco, n, rng);
  json config{
      {"delta", eco.delta}, {"smin", eco.s_min}, {"smax", eco.s_max}, {"n", n}};
  emit_series(out, "ecology", config, indexed_table(volumes), json::object());
  return 0;
}

int run_simulate_kinematic(const OutputSpec& out,
                           const econolab::simulate::KinematicConfig& cfg) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/kinematic");
  const auto samples = econolab::simulate::kinematic_displacements(cfg, rng);
  json config{{"v0", cfg.v0}, {"accel", cfg.accel}, {"dtmax", cfg.dt_max},
              {"n", cfg.n}};
  emit_series(out, "kinematic", config, indexed_table(samples), json::object());
  return 0;
}

int run_simulate_twopop(const OutputSpec& out,
                        const econolab::simulate::TwoPopulationConfig& cfg) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/twopop");
  const auto result = econolab::simulate::two_population_ticks(cfg, rng);
  json config{{"p", cfg.p}, {"ds1", cfg.dS1}, {"n", cfg.n}};
  json metadata{{"sigma1_sq", result.sigma1_sq},
                {"sigma2_sq", result.sigma2_sq},
                {"sigma_sq", result.sigma_sq},
                {"sample_variance", result.sample_variance}};
  emit_series(out, "twopop", config, indexed_table(result.ticks), metadata);
  return 0;
}

int run_simulate_garch(const OutputSpec& out,
                       const econolab::estimate::GarchSpec& spec, int n,
                       double dt) {
  RandomSource rng = RandomSource::for_operation(out.seed, "simulate/garch");
  const auto series = econolab::estimate::garch_simulate(spec, n, rng, dt);
  json config{{"omega", spec.omega}, {"alpha", spec.alpha[0]},
              {"beta", spec.beta[0]}, {"mu", spec.mu},
              {"n", n},               {"dt", dt}};
  econolab::io::CsvTable table;
  table.times = series.times();
  table.values = series.returns();
  emit_series(out, "garch", config, table, json{{"dt", dt}});
  return 0;
}

// ---- fit --------------------------------------------------------------------

int run_fit_tail(const OutputSpec& out, const std::string& input,
                 double tail_fraction) {
  const auto table = read_input(input);
  const auto est = econolab::estimate::hill_tail_exponent(table.values,
                                                          tail_fraction);
  json doc = base_document("fit", "tail", out,
                           json{{"input", input}, {"tail_fraction", tail_fraction}});
  doc["result"] = {{"quantity", "ccdf tail exponent"},
                   {"exponent", est.exponent},
                   {"std_error", est.std_error},
                   {"k", est.k},
                   {"threshold", est.threshold}};
  write_text(out.path, doc.dump(2) + "\n");
  return 0;
}

int run_fit_garch(const OutputSpec& out, const std::string& input) {
  const auto table = read_input(input);
  double dt = 1.0;
  if (table.times.size() >= 2) dt = table.times[1] - table.times[0];
  econolab::core::ReturnSeries returns(table.times, table.values,
                                       dt > 0.0 ? dt : 1.0);
  const auto fit = econolab::estimate::garch_fit(returns);
  json doc = base_document("fit", "garch", out, json{{"input", input}});
  doc["result"] = {{"quantity", "conditional-variance recursion coefficients"},
                   {"mu", fit.spec.mu},
                   {"omega", fit.spec.omega},
                   {"alpha", fit.spec.alpha[0]},
                   {"beta", fit.spec.beta[0]},
                   {"log_likelihood", fit.log_likelihood},
                   {"converged", fit.converged},
                   {"iterations", fit.iterations},
                   {"stationary", fit.stationary},
                   {"std_errors",
                    {{"mu", fit.std_errors[0]},
                     {"omega", fit.std_errors[1]},
                     {"alpha", fit.std_errors[2]},
                     {"beta", fit.std_errors[3]}}}};
  write_text(out.path, doc.dump(2) + "\n");
  return fit.converged ? 0 : 3;
}

int run_fit_jls(const OutputSpec& out, const std::string& input,
                econolab::estimate::JlsSearchGrid grid, bool tc_given) {
  const auto table = read_input(input);
  econolab::core::PriceSeries series(table.times, table.values);
  if (!tc_given) {
    const double first = series.times().front();
    const double last = series.times().back();
    const double span = last - first;
    grid.tc_min = last + 0.01 * span;
    grid.tc_max = last + 0.5 * span;
  }
  const auto fit = econolab::estimate::jls_fit(series, grid);
  json doc = base_document(
      "fit", "jls", out,
      json{{"input", input},
           {"tc_min", grid.tc_min},
           {"tc_max", grid.tc_max},
           {"tc_count", grid.tc_count},
           {"m_min", grid.m_min},
           {"m_max", grid.m_max},
           {"m_count", grid.m_count},
           {"omega_min", grid.omega_min},
           {"omega_max", grid.omega_max},
           {"omega_count", grid.omega_count}});
  doc["result"] = {{"quantity", "log-periodic trend parameters"},
                   {"A", fit.params.A},
                   {"B", fit.params.B},
                   {"C", fit.params.C},
                   {"t_c", fit.params.t_c},
                   {"m", fit.params.m},
                   {"omega", fit.params.omega},
                   {"phi", fit.params.phi},
                   {"rmse", fit.rmse},
                   {"search_grid_size", fit.search_grid_size}};
  write_text(out.path, doc.dump(2) + "\n");
  return 0;
}

int run_fit_regimes(const OutputSpec& out, const std::string& input,
                    const std::vector<double>& breakpoints) {
  const auto table = read_input(input);
  const auto slopes = econolab::estimate::regime_slopes(table.values, breakpoints);
  json doc = base_document("fit", "regimes", out,
                           json{{"input", input}, {"breakpoints", breakpoints}});
  doc["result"] = {{"quantity", "piecewise log-log density slopes"},
                   {"breakpoints", slopes.breakpoints},
                   {"slopes", slopes.slopes},
                   {"slope_errors", slopes.slope_errors},
                   {"counts", slopes.counts}};
  write_text(out.path, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"econolab: market-model simulation, fitting, and verification"};
  app.set_config("--config", "", "key = value file; flags override file values");
  app.require_subcommand(1);

  OutputSpec out;

  // simulate ------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "generate synthetic data");
  simulate->require_subcommand(1);

  econolab::simulate::WienerConfig wiener_cfg;
  auto* sim_wiener = simulate->add_subcommand("wiener", "geometric diffusion path");
  sim_wiener->add_option("--mu", wiener_cfg.mu0, "drift rate per unit time");
  sim_wiener->add_option("--h", wiener_cfg.h0, "variance rate per unit time");
  sim_wiener->add_option("--p0", wiener_cfg.p0, "initial price");
  sim_wiener->add_option("--n", wiener_cfg.n, "step count");
  sim_wiener->add_option("--dt", wiener_cfg.dt, "step size");

  econolab::simulate::JlsPathConfig jls_cfg;
  auto* sim_jls = simulate->add_subcommand("jls", "log-periodic jump diffusion");
  sim_jls->add_option("--bprime", jls_cfg.hazard.b_prime, "hazard amplitude");
  sim_jls->add_option("--cprime", jls_cfg.hazard.c_prime, "hazard oscillation");
  sim_jls->add_option("--m", jls_cfg.hazard.m, "hazard exponent in (0,1)");
  sim_jls->add_option("--omega", jls_cfg.hazard.omega, "log-frequency");
  sim_jls->add_option("--phi", jls_cfg.hazard.phi_prime, "phase");
  sim_jls->add_option("--tc", jls_cfg.hazard.t_c, "critical time");
  sim_jls->add_option("--k", jls_cfg.k, "crash amplitude in [0,1)");
  sim_jls->add_option("--sigma", jls_cfg.sigma, "diffusion volatility");
  sim_jls->add_option("--p0", jls_cfg.p0, "initial price");
  sim_jls->add_option("--n", jls_cfg.n, "step count");
  sim_jls->add_option("--dt", jls_cfg.dt, "step size");

  double ticks_p = 0.5, ticks_ds1 = 1.0, ticks_ds2 = 0.0, ticks_pa = 0.0,
         ticks_pb = 0.0, ticks_ds3 = 0.0;
  int ticks_n = 100;
  auto* sim_ticks = simulate->add_subcommand("ticks", "mixed-regime tick stream");
  sim_ticks->add_option("--p", ticks_p, "expected-move probability");
  sim_ticks->add_option("--ds1", ticks_ds1, "expected move size");
  auto* ds2_opt =
      sim_ticks->add_option("--ds2", ticks_ds2,
                            "unexpected move (default balances the expected move)");
  sim_ticks->add_option("--pa", ticks_pa, "big-player probability");
  sim_ticks->add_option("--pb", ticks_pb, "compositional-move probability");
  sim_ticks->add_option("--ds3", ticks_ds3, "big-player move size");
  sim_ticks->add_option("--n", ticks_n, "tick count");

  econolab::simulate::FundEcology eco;
  int eco_n = 1000;
  auto* sim_ecology = simulate->add_subcommand("ecology", "fund-ecology volumes");
  sim_ecology->add_option("--delta", eco.delta, "volume-size elasticity");
  sim_ecology->add_option("--smin", eco.s_min, "smallest fund size");
  sim_ecology->add_option("--smax", eco.s_max, "largest fund size");
  sim_ecology->add_option("--n", eco_n, "sample count");

  econolab::simulate::KinematicConfig kin_cfg;
  auto* sim_kin = simulate->add_subcommand("kinematic", "displacement samples");
  sim_kin->add_option("--v0", kin_cfg.v0, "initial speed");
  sim_kin->add_option("--accel", kin_cfg.accel, "acceleration");
  sim_kin->add_option("--dtmax", kin_cfg.dt_max, "max sampled horizon");
  sim_kin->add_option("--n", kin_cfg.n, "sample count");

  econolab::simulate::TwoPopulationConfig twopop_cfg;
  auto* sim_twopop = simulate->add_subcommand("twopop", "two-population ticks");
  sim_twopop->add_option("--p", twopop_cfg.p, "informed-move probability");
  sim_twopop->add_option("--ds1", twopop_cfg.dS1, "informed move size");
  sim_twopop->add_option("--n", twopop_cfg.n, "tick count");

  econolab::estimate::GarchSpec garch_spec;
  double garch_alpha = 0.1, garch_beta = 0.8, garch_dt = 1.0;
  int garch_n = 1000;
  auto* sim_garch = simulate->add_subcommand("garch", "conditional-variance returns");
  sim_garch->add_option("--omega", garch_spec.omega, "variance floor");
  sim_garch->add_option("--alpha", garch_alpha, "innovation coefficient");
  sim_garch->add_option("--beta", garch_beta, "persistence coefficient");
  sim_garch->add_option("--mu", garch_spec.mu, "unconditional mean");
  sim_garch->add_option("--n", garch_n, "return count");
  sim_garch->add_option("--dt", garch_dt, "interval length");

  // fit -------------------------------------------------------------------
  auto* fit = app.add_subcommand("fit", "estimate model parameters from files");
  fit->require_subcommand(1);

  std::string input = "-";
  double tail_fraction = 0.05;
  auto* fit_tail = fit->add_subcommand("tail", "Hill tail exponent");
  fit_tail->add_option("--input", input, "samples CSV (- for stdin)");
  fit_tail->add_option("--tail-fraction", tail_fraction, "top fraction used");

  auto* fit_garch = fit->add_subcommand("garch", "GARCH(1,1) likelihood fit");
  fit_garch->add_option("--input", input, "returns CSV (- for stdin)");

  econolab::estimate::JlsSearchGrid jls_grid;
  auto* fit_jls = fit->add_subcommand("jls", "log-periodic trend fit");
  fit_jls->add_option("--input", input, "price CSV (- for stdin)");
  auto* tc_min_opt = fit_jls->add_option("--tc-min", jls_grid.tc_min,
                                         "critical-time search start");
  fit_jls->add_option("--tc-max", jls_grid.tc_max, "critical-time search end");
  fit_jls->add_option("--tc-count", jls_grid.tc_count, "critical-time grid points");
  fit_jls->add_option("--m-min", jls_grid.m_min, "exponent search start");
  fit_jls->add_option("--m-max", jls_grid.m_max, "exponent search end");
  fit_jls->add_option("--m-count", jls_grid.m_count, "exponent grid points");
  fit_jls->add_option("--omega-min", jls_grid.omega_min, "frequency search start");
  fit_jls->add_option("--omega-max", jls_grid.omega_max, "frequency search end");
  fit_jls->add_option("--omega-count", jls_grid.omega_count, "frequency grid points");

  std::vector<double> breakpoints;
  auto* fit_regimes = fit->add_subcommand("regimes", "piecewise density slopes");
  fit_regimes->add_option("--input", input, "samples CSV (- for stdin)");
  fit_regimes->add_option("--breakpoints", breakpoints,
                          "segment boundaries, comma separated")
      ->delimiter(',');

  // verify ------------------------------------------------------------------
  int threads = 1;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run the acceptance battery");
  verify->add_option("--threads", threads, "worker threads for batch checks");
  verify->add_option("--out", verify_out, "also write the report to a file");

  for (auto* cmd : {sim_wiener, sim_jls, sim_ticks, sim_ecology, sim_kin,
                    sim_twopop, sim_garch}) {
    cmd->add_option("--seed", out.seed, "master seed");
    cmd->add_option("--out", out.path, "output path (- for stdout)");
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  for (auto* cmd : {fit_tail, fit_garch, fit_jls, fit_regimes}) {
    cmd->add_option("--seed", out.seed, "master seed (echoed in the report)");
    cmd->add_option("--out", out.path, "output path (- for stdout)");
  }
  verify->add_option("--seed", out.seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (simulate->parsed()) {
      if (sim_wiener->parsed()) return run_simulate_wiener(out, wiener_cfg);
      if (sim_jls->parsed()) return run_simulate_jls(out, jls_cfg);
      if (sim_ticks->parsed()) {
        econolab::simulate::ImpactTickParams params;
        if (ds2_opt->count() > 0) {
          params.p = ticks_p;
          params.dS1 = ticks_ds1;
          params.dS2 = ticks_ds2;
          params.pA = ticks_pa;
          params.pB = ticks_pb;
          params.dS3 = ticks_ds3;
        } else {
          params = econolab::simulate::ImpactTickParams::martingale(
              ticks_p, ticks_ds1, ticks_pa, ticks_pb, ticks_ds3);
        }
        return run_simulate_ticks(out, params, ticks_n);
      }
      if (sim_ecology->parsed()) return run_simulate_ecology(out, eco, eco_n);
      if (sim_kin->parsed()) return run_simulate_kinematic(out, kin_cfg);
      if (sim_twopop->parsed()) return run_simulate_twopop(out, twopop_cfg);
      if (sim_garch->parsed()) {
        garch_spec.alpha = {garch_alpha};
        garch_spec.beta = {garch_beta};
        return run_simulate_garch(out, garch_spec, garch_n, garch_dt);
      }
    }
    if (fit->parsed()) {
      if (fit_tail->parsed()) return run_fit_tail(out, input, tail_fraction);
      if (fit_garch->parsed()) return run_fit_garch(out, input);
      if (fit_jls->parsed())
        return run_fit_jls(out, input, jls_grid, tc_min_opt->count() > 0);
      if (fit_regimes->parsed()) return run_fit_regimes(out, input, breakpoints);
    }
    if (verify->parsed()) {
      const auto report = econolab::verify::run_verification(out.seed, threads);
      const std::string text = econolab::verify::report_to_json(report);
      std::cout << text;
      if (!verify_out.empty() && verify_out != "-")
        write_text(verify_out, text);
      return report.overall_pass ? 0 : 4;
    }
  } catch (const IoError& e) {
    std::cerr << "econolab: " << e.what() << '\n';
    return 2;
  } catch (const econolab::Error& e) {
    std::cerr << "econolab: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
