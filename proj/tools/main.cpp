// Command-line driver: figure data emission, verification suites, state
// dumps and parameter sweeps for the nonlinear position-dependent-mass
// oscillator library.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pdem/algebra.hpp"
#include "pdem/bgcs.hpp"
#include "pdem/figures.hpp"
#include "pdem/model.hpp"
#include "pdem/runconfig.hpp"
#include "pdem/stats.hpp"
#include "pdem/verify.hpp"

namespace {

using pdem::cli::fmt17;
using pdem::cli::OutputFormat;
using pdem::cli::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitContractFailure = 1;
constexpr int kExitConfigError = 2;

struct CommonFlags {
  CLI::Option* alpha = nullptr;
  CLI::Option* lambda = nullptr;
  CLI::Option* lambda_prime = nullptr;
  CLI::Option* z_re = nullptr;
  CLI::Option* z_im = nullptr;
  CLI::Option* trunc = nullptr;
  CLI::Option* rel_tol = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* config = nullptr;

  double alpha_v = 1.0, lambda_v = 0.0, lambda_prime_v = 0.0;
  double z_re_v = 3.0, z_im_v = 0.0, rel_tol_v = 1e-12;
  int trunc_v = 200;
  std::string out_v, format_v = "csv", config_v;
};

void attach_common(CLI::App* cmd, CommonFlags& f) {
  f.alpha = cmd->add_option("--alpha", f.alpha_v, "oscillator frequency alpha > 0");
  f.lambda = cmd->add_option("--lambda", f.lambda_v, "nonlinearity lambda");
  f.lambda_prime =
      cmd->add_option("--lambda-prime", f.lambda_prime_v, "lambda' = lambda/(2 alpha)");
  f.z_re = cmd->add_option("--z-re", f.z_re_v, "Re z of the coherent-state label");
  f.z_im = cmd->add_option("--z-im", f.z_im_v, "Im z of the coherent-state label");
  f.trunc = cmd->add_option("--trunc", f.trunc_v, "Fock-basis truncation");
  f.rel_tol = cmd->add_option("--rel-tol", f.rel_tol_v, "relative tolerance");
  f.out = cmd->add_option("--out", f.out_v, "output path (stem for figures)");
  f.format = cmd->add_option("--format", f.format_v, "csv or json")
                 ->check(CLI::IsMember({"csv", "json"}));
  f.config = cmd->add_option("--config", f.config_v,
                             "key=value config file; flags override it");
}

// Config file first, explicit flags second.
RunConfig resolve(const CommonFlags& f) {
  RunConfig cfg;
  if (f.config->count() > 0) cfg = pdem::cli::load_config_file(f.config_v);
  if (f.alpha->count()) cfg.alpha = f.alpha_v;
  if (f.lambda->count()) cfg.lambda = f.lambda_v;
  if (f.lambda_prime->count()) cfg.lambda_prime = f.lambda_prime_v;
  if (f.z_re->count()) cfg.z_re = f.z_re_v;
  if (f.z_im->count()) cfg.z_im = f.z_im_v;
  if (f.trunc->count()) cfg.trunc = f.trunc_v;
  if (f.rel_tol->count()) cfg.rel_tol = f.rel_tol_v;
  if (f.out->count()) cfg.out = f.out_v;
  if (f.format->count())
    cfg.format = f.format_v == "json" ? OutputFormat::json : OutputFormat::csv;
  return cfg;
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw pdem::ConfigError("cannot open output file: " + path);
  return file;
}

void write_error_sidecar(const RunConfig& cfg, const std::string& msg) {
  const std::string path = cfg.out.empty() ? "pdem_error.log" : cfg.out + ".err";
  std::ofstream err(path);
  err << msg << "\n";
}

int cmd_model(const RunConfig& cfg) {
  if (!cfg.has_lambda()) throw pdem::ConfigError("model requires --lambda");
  const auto params = pdem::model::OscillatorParams::make(cfg.alpha, cfg.lambda);
  const double x_max = cfg.lambda < 0.0 ? 0.999 * params.domain_halfwidth : 6.0;
  std::ofstream file;
  std::ostream& os = open_or_stdout(file, cfg.out);
  os << "x,mass,potential\n";
  const int n = 601;
  for (int i = 0; i < n; ++i) {
    const double x = -x_max + 2.0 * x_max * i / (n - 1);
    const auto mp = pdem::model::evaluate_model(params, x);
    os << fmt17(x) << "," << fmt17(mp.mass) << "," << fmt17(mp.potential) << "\n";
  }
  return kExitOk;
}

int cmd_orbit(const RunConfig& cfg, double x0, double v0, double dt, int steps) {
  if (!cfg.has_lambda()) throw pdem::ConfigError("orbit requires --lambda");
  const auto params = pdem::model::OscillatorParams::make(cfg.alpha, cfg.lambda);
  const auto orbit = pdem::model::integrate_orbit(params, x0, v0, dt, steps);
  std::ofstream file;
  std::ostream& os = open_or_stdout(file, cfg.out);
  os << "t,x,v\n";
  for (std::size_t i = 0; i < orbit.times.size(); ++i) {
    os << fmt17(orbit.times[i]) << "," << fmt17(orbit.positions[i]) << ","
       << fmt17(orbit.velocities[i]) << "\n";
  }
  std::cerr << "measured_omega=" << fmt17(orbit.measured_omega)
            << " amplitude=" << fmt17(orbit.amplitude)
            << " energy_drift=" << fmt17(orbit.energy_drift) << "\n";
  return kExitOk;
}

int cmd_state(const RunConfig& cfg) {
  pdem::specfun::PrecisionConfig pc;
  pc.rel_tol = cfg.rel_tol;
  const std::complex<double> z{cfg.z_re, cfg.z_im};
  const auto st =
      pdem::bgcs::make_state(z, cfg.effective_lambda_prime(), cfg.trunc, pc);
  std::ofstream file;
  std::ostream& os = open_or_stdout(file, cfg.out);
  os << "n,re_c,im_c,p_n\n";
  for (int n = 0; n < st.truncation; ++n) {
    os << n << "," << fmt17(st.coeffs[n].real()) << ","
       << fmt17(st.coeffs[n].imag()) << "," << fmt17(std::norm(st.coeffs[n]))
       << "\n";
  }
  std::cerr << "norm_factor=" << fmt17(st.norm_factor)
            << " tail_bound=" << fmt17(st.tail_bound) << "\n";
  return kExitOk;
}

int cmd_moments(const RunConfig& cfg) {
  pdem::specfun::PrecisionConfig pc;
  pc.rel_tol = cfg.rel_tol;
  const std::complex<double> z{cfg.z_re, cfg.z_im};
  const auto s = pdem::stats::summarize(z, cfg.effective_lambda_prime(), pc);
  std::ofstream file;
  std::ostream& os = open_or_stdout(file, cfg.out);
  os << "quantity,direct,closed\n";
  const char* na = "nan";
  os << "mean," << fmt17(s.mean) << ","
     << (s.closed_available ? fmt17(s.mean_closed) : na) << "\n";
  os << "second_moment," << fmt17(s.second_moment) << ","
     << (s.closed_available ? fmt17(s.second_moment_closed) : na) << "\n";
  os << "variance," << fmt17(s.variance) << ","
     << (s.closed_available ? fmt17(s.variance_closed) : na) << "\n";
  os << "mandel_q," << fmt17(s.mandel_q) << ","
     << (s.closed_available ? fmt17(s.mandel_q_closed) : na) << "\n";
  os << "g2," << fmt17(s.g2) << ","
     << (s.closed_available ? fmt17(s.g2_closed) : na) << "\n";
  os << "cross_check_err," << fmt17(s.cross_check_err) << ",\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const auto rows = pdem::verify::run_suite(suite, cfg);
  std::printf("%-48s %-24s %-24s %s\n", "check", "measured", "bound", "status");
  for (const auto& r : rows) {
    std::printf("%-48s %-24s %-24s %s\n", r.name.c_str(),
                fmt17(r.measured).c_str(), fmt17(r.bound).c_str(),
                r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL"));
  }
  return pdem::verify::all_passed(rows) ? kExitOk : kExitContractFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlinear PDEM oscillator: coherent states and statistics"};
  app.require_subcommand(1);

  CommonFlags f_model, f_orbit, f_state, f_fig, f_moments, f_verify;

  auto* c_model = app.add_subcommand("model", "mass and potential profile");
  attach_common(c_model, f_model);

  auto* c_orbit = app.add_subcommand("orbit", "classical RK4 trajectory");
  attach_common(c_orbit, f_orbit);
  double x0 = 1.0, v0 = 0.0, dt = 1e-3;
  int steps = 100000;
  c_orbit->add_option("--x0", x0, "initial position");
  c_orbit->add_option("--v0", v0, "initial velocity");
  c_orbit->add_option("--dt", dt, "time step");
  c_orbit->add_option("--steps", steps, "number of RK4 steps");

  auto* c_state = app.add_subcommand("state", "coherent-state coefficient dump");
  attach_common(c_state, f_state);

  auto* c_fig = app.add_subcommand("figures", "emit figure data files");
  attach_common(c_fig, f_fig);
  std::string which;
  c_fig->add_option("which", which, "fig1|fig2|fig3|fig4")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));

  auto* c_moments = app.add_subcommand("moments", "distribution moments, both methods");
  attach_common(c_moments, f_moments);

  auto* c_verify = app.add_subcommand("verify", "run an invariant suite");
  attach_common(c_verify, f_verify);
  std::string suite;
  c_verify->add_option("suite", suite, "classical|algebra|coherent|stats|all")
      ->required()
      ->check(CLI::IsMember({"classical", "algebra", "coherent", "stats", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  RunConfig cfg;
  try {
    if (c_model->parsed()) cfg = resolve(f_model);
    else if (c_orbit->parsed()) cfg = resolve(f_orbit);
    else if (c_state->parsed()) cfg = resolve(f_state);
    else if (c_fig->parsed()) cfg = resolve(f_fig);
    else if (c_moments->parsed()) cfg = resolve(f_moments);
    else cfg = resolve(f_verify);
  } catch (const pdem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (c_model->parsed()) return cmd_model(cfg);
    if (c_orbit->parsed()) return cmd_orbit(cfg, x0, v0, dt, steps);
    if (c_state->parsed()) return cmd_state(cfg);
    if (c_fig->parsed()) {
      const auto paths = pdem::cli::emit_figure_data(which, cfg);
      for (const auto& p : paths) std::cout << p << "\n";
      return kExitOk;
    }
    if (c_moments->parsed()) return cmd_moments(cfg);
    return cmd_verify(cfg, suite);
  } catch (const pdem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const pdem::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    write_error_sidecar(cfg, e.what());
    return kExitContractFailure;
  }
}
