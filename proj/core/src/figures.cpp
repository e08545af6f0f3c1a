#include "pdem/figures.hpp"

#include <fstream>

#include <json.hpp>

#include "pdem/model.hpp"
#include "pdem/stats.hpp"

namespace pdem::cli {

namespace {

using Row = std::vector<double>;

void write_table(const std::string& path, OutputFormat format,
                 const std::vector<std::string>& columns,
                 const std::vector<Row>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  if (format == OutputFormat::csv) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c ? "," : "") << columns[c];
    out << "\n";
    for (const Row& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "," : "") << fmt17(row[c]);
      out << "\n";
    }
  } else {
    nlohmann::ordered_json doc;
    doc["columns"] = columns;
    auto& data = doc["rows"] = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (double x : row) r.push_back(fmt17(x));
      data.push_back(std::move(r));
    }
    out << doc.dump(2) << "\n";
  }
}

std::string output_path(const RunConfig& cfg, const std::string& fallback_stem,
                        const std::string& suffix) {
  const std::string stem = cfg.out.empty() ? fallback_stem : cfg.out;
  const char* ext = cfg.format == OutputFormat::csv ? ".csv" : ".json";
  return stem + suffix + ext;
}

constexpr double kFig1Lambdas[] = {0.25, 0.55, 0.85, -0.25, -0.55, -0.85};
constexpr double kFigLambdaPrimes[] = {0.39, 0.9, 1.5, 2.6};
const char* kFig1Suffix[] = {"_lam+0.25", "_lam+0.55", "_lam+0.85",
                             "_lam-0.25", "_lam-0.55", "_lam-0.85"};
const char* kFigLpSuffix[] = {"_lp0.39", "_lp0.9", "_lp1.5", "_lp2.6"};

std::vector<std::string> emit_fig1(const RunConfig& cfg) {
  std::vector<std::string> written;
  for (std::size_t i = 0; i < std::size(kFig1Lambdas); ++i) {
    const double lambda = kFig1Lambdas[i];
    const auto params = model::OscillatorParams::make(1.0, lambda);
    const double x_max =
        lambda < 0.0 ? 0.999 * params.domain_halfwidth : 6.0;
    const int n = 1201;
    std::vector<Row> rows;
    rows.reserve(n);
    for (int j = 0; j < n; ++j) {
      const double x = -x_max + 2.0 * x_max * j / (n - 1);
      rows.push_back({x, model::evaluate_model(params, x).potential});
    }
    const std::string path = output_path(cfg, "fig1", kFig1Suffix[i]);
    write_table(path, cfg.format, {"x", "V"}, rows);
    written.push_back(path);
  }
  return written;
}

std::vector<std::string> emit_fig2(const RunConfig& cfg) {
  std::vector<std::string> written;
  const bgcs::Complex z{cfg.z_re, cfg.z_im};
  specfun::PrecisionConfig pc;
  pc.rel_tol = cfg.rel_tol;
  for (std::size_t i = 0; i < std::size(kFigLambdaPrimes); ++i) {
    const stats::StatSummary s = stats::summarize(z, kFigLambdaPrimes[i], pc);
    const std::vector<double> poisson = stats::poisson_reference(s.mean, 49);
    std::vector<Row> rows;
    for (int n = 0; n < 50; ++n) {
      const double pn = n < static_cast<int>(s.p_n.size()) ? s.p_n[n] : 0.0;
      rows.push_back({static_cast<double>(n), pn, poisson[n]});
    }
    const std::string path = output_path(cfg, "fig2", kFigLpSuffix[i]);
    write_table(path, cfg.format, {"n", "P_n", "P_n_poisson"}, rows);
    written.push_back(path);
  }
  return written;
}

std::vector<std::string> emit_fig34(const RunConfig& cfg, bool fig4) {
  std::vector<std::string> written;
  specfun::PrecisionConfig pc;
  pc.rel_tol = cfg.rel_tol;
  for (std::size_t i = 0; i < std::size(kFigLambdaPrimes); ++i) {
    std::vector<Row> rows;
    for (int j = 1; j <= 100; ++j) {
      const double abs_z = 0.05 * j;
      const stats::StatSummary s =
          stats::summarize({abs_z, 0.0}, kFigLambdaPrimes[i], pc);
      if (fig4) rows.push_back({abs_z, s.mandel_q, s.g2});
      else rows.push_back({abs_z, s.mean, s.variance});
    }
    const std::string path =
        output_path(cfg, fig4 ? "fig4" : "fig3", kFigLpSuffix[i]);
    write_table(path, cfg.format,
                fig4 ? std::vector<std::string>{"z_abs", "mandel_q", "g2"}
                     : std::vector<std::string>{"z_abs", "mean", "variance"},
                rows);
    written.push_back(path);
  }
  return written;
}

}  // namespace

std::vector<std::string> emit_figure_data(const std::string& which,
                                          const RunConfig& cfg) {
  if (which == "fig1") return emit_fig1(cfg);
  if (which == "fig2") return emit_fig2(cfg);
  if (which == "fig3") return emit_fig34(cfg, false);
  if (which == "fig4") return emit_fig34(cfg, true);
  throw ConfigError("unknown figure: " + which);
}

}  // namespace pdem::cli
