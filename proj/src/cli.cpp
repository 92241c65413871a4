#include "cesaro/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesaro/analysis.hpp"
#include "cesaro/csv.hpp"
#include "cesaro/error.hpp"
#include "cesaro/estimates.hpp"
#include "cesaro/measures.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/panel.hpp"
#include "cesaro/parallel.hpp"
#include "cesaro/report.hpp"

namespace cesaro {
namespace {

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  body(file);
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

struct MomentsArgs {
  std::string measure;
  std::size_t n_max = 1024;
  std::size_t quad_points = 32;
  std::string out;
};

int cmd_moments(const MomentsArgs& a, std::ostream& out) {
  const Measure m = parse_measure(a.measure);
  emit(a.out, out, [&](std::ostream& os) {
    write_csv_row(os, {"n", "moment", "moment_by_parts", "abs_diff"});
    for (std::size_t n = 1; n <= a.n_max; n *= 2) {
      const double direct = m.moment(n);
      const double parts = moment_by_parts(m, n, a.quad_points);
      write_csv_row(os, {std::to_string(n), format_number(direct), format_number(parts),
                         format_number(std::abs(direct - parts))});
    }
  });
  return kExitOk;
}

struct VerifyArgs {
  std::string config;
  std::string out_dir;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const PanelConfig cfg = a.config.empty() ? default_panel() : load_panel_config(a.config);
  const auto reports = run_panel(cfg, thread_budget());
  std::filesystem::create_directories(a.out_dir);
  const auto dir = std::filesystem::path(a.out_dir);
  emit((dir / "report.json").string(), out, [&](std::ostream& os) { write_report_json(os, reports); });
  emit((dir / "report.csv").string(), out, [&](std::ostream& os) { write_report_csv(os, reports); });

  std::size_t falsified = 0;
  for (const auto& r : reports) {
    for (const auto& w : r.warnings)
      err << "warning: " << r.measure << " (alpha=" << format_number(r.alpha)
          << ", beta=" << format_number(r.beta) << "): " << w << '\n';
    if (!r.falsified()) continue;
    ++falsified;
    err << "disagreement: " << r.measure << " (alpha=" << format_number(r.alpha)
        << ", beta=" << format_number(r.beta) << "): carleson=" << r.carleson.label()
        << " moments=" << r.moments.label() << " norm=" << r.norm.label();
    if (r.compactness) err << " compactness=" << r.compactness->label();
    err << '\n';
  }
  out << reports.size() << " entries, " << falsified << " disagreements\n";
  return falsified == 0 ? kExitOk : kExitDisagreement;
}

struct NormGrowthArgs {
  std::string measure;
  double alpha = 1.0;
  double beta = 1.0;
  std::vector<std::size_t> sizes = {64, 128, 256, 512, 1024, 2048, 4096};
  double tol = 1e-12;
  int max_iter = 100000;
  std::string method = "auto";
  std::string format = "csv";
  std::string out;
};

int cmd_norm_growth(const NormGrowthArgs& a, std::ostream& out) {
  const Measure m = parse_measure(a.measure);
  NormOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  opts.method = a.method == "power" ? MethodChoice::power_iteration
                : a.method == "dense" ? MethodChoice::dense_svd
                                      : MethodChoice::automatic;
  const auto profile = norm_growth_profile(m, SpaceIndex(a.alpha), SpaceIndex(a.beta), a.sizes, opts, thread_budget());
  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "csv") {
      write_profile_csv(os, profile);
      return;
    }
    nlohmann::ordered_json doc;
    doc["measure"] = m.to_string();
    doc["alpha"] = a.alpha;
    doc["beta"] = a.beta;
    doc["profile"] = nlohmann::ordered_json::array();
    for (const auto& e : profile) {
      doc["profile"].push_back({{"N", e.size},
                                {"norm", e.estimate.value},
                                {"method", to_string(e.estimate.method)},
                                {"iterations", e.estimate.iterations},
                                {"residual", e.estimate.residual}});
    }
    os << doc.dump(2) << '\n';
  });
  return kExitOk;
}

struct ClassifyArgs {
  std::string measure;
  double alpha = 1.0;
  double beta = 1.0;
  std::string out;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const auto report = check_equivalence(Subject::of(a.measure, parse_measure(a.measure)), a.alpha, a.beta);
  const std::vector<EquivalenceReport> reports = {report};
  emit(a.out, out, [&](std::ostream& os) { write_report_json(os, reports); });
  return report.falsified() ? kExitDisagreement : kExitOk;
}

struct EstimatesArgs {
  std::vector<double> c = {0.5, 1.0, 2.0};
  int depth = 10;
  std::vector<double> alphas = {0.25, 0.5, 1.0, 1.5, 1.75};
  std::size_t size = 4096;
  std::string out;
};

int cmd_estimates(const EstimatesArgs& a, std::ostream& out) {
  std::vector<double> grid;
  for (int j = 1; j <= a.depth; ++j) grid.push_back(1.0 - std::ldexp(1.0, -j));
  const std::size_t n_max = static_cast<std::size_t>(std::ceil(50.0 / (1.0 - grid.back()))) * 4;
  emit(a.out, out, [&](std::ostream& os) {
    write_csv_row(os, {"check", "parameter", "min", "max"});
    for (double c : a.c) {
      const auto [lo, hi] = est_ratio_check(c, grid, n_max);
      write_csv_row(os, {"est_ratio", format_number(c), format_number(lo), format_number(hi)});
    }
    for (double alpha : a.alphas) {
      const Prop1Check p = prop1_bound_check(alpha, a.size);
      write_csv_row(os, {"section_norm_vs_bound", format_number(alpha), format_number(p.section_norm),
                         format_number(p.bound)});
      write_csv_row(os, {"partial_sum_violations", format_number(alpha), "0",
                         std::to_string(p.partial_sum_violations)});
      write_csv_row(os, {"tail_sum_violations", format_number(alpha), "0",
                         std::to_string(p.tail_sum_violations + p.tail_bound_violations)});
    }
  });
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Cesaro operators on Dirichlet-type spaces"};
  app.require_subcommand(1);

  MomentsArgs moments;
  auto* sub_moments = app.add_subcommand("moments", "Closed-form moments against integration by parts");
  sub_moments->add_option("--measure", moments.measure, "Measure expression")->required();
  sub_moments->add_option("--n-max", moments.n_max, "Largest dyadic n")->check(CLI::PositiveNumber);
  sub_moments->add_option("--quad-points", moments.quad_points, "Gauss-Legendre nodes per panel")
      ->check(CLI::PositiveNumber);
  sub_moments->add_option("--out", moments.out, "Output CSV (default stdout)");

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Run the equivalence panel");
  sub_verify->add_option("--config", verify.config, "Panel config (default: built-in panel)");
  sub_verify->add_option("--out", verify.out_dir, "Output directory for report.json and report.csv")->required();

  NormGrowthArgs growth;
  auto* sub_growth = app.add_subcommand("norm-growth", "Section norms of C_mu from D_alpha to D_beta");
  sub_growth->add_option("--measure", growth.measure, "Measure expression")->required();
  sub_growth->add_option("--alpha", growth.alpha, "Domain index");
  sub_growth->add_option("--beta", growth.beta, "Target index");
  sub_growth->add_option("--sizes", growth.sizes, "Section sizes, comma separated")->delimiter(',');
  sub_growth->add_option("--tol", growth.tol, "Power-iteration tolerance");
  sub_growth->add_option("--max-iter", growth.max_iter, "Power-iteration budget");
  sub_growth->add_option("--method", growth.method, "auto, power or dense")
      ->check(CLI::IsMember({"auto", "power", "dense"}));
  sub_growth->add_option("--format", growth.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub_growth->add_option("--out", growth.out, "Output file (default stdout)");

  ClassifyArgs classify;
  auto* sub_classify = app.add_subcommand("classify", "All verdict engines for one measure and pair");
  sub_classify->add_option("--measure", classify.measure, "Measure expression")->required();
  sub_classify->add_option("--alpha", classify.alpha, "Domain index");
  sub_classify->add_option("--beta", classify.beta, "Target index");
  sub_classify->add_option("--out", classify.out, "Output JSON (default stdout)");

  EstimatesArgs estimates;
  auto* sub_estimates = app.add_subcommand("estimates", "Auxiliary series estimates and pointwise inequalities");
  sub_estimates->add_option("--c", estimates.c, "Exponents c")->delimiter(',');
  sub_estimates->add_option("--depth", estimates.depth, "t grid 1-2^-j, j = 1..depth")->check(CLI::Range(1, 40));
  sub_estimates->add_option("--alphas", estimates.alphas, "Space indices")->delimiter(',');
  sub_estimates->add_option("--size", estimates.size, "Largest index checked")->check(CLI::PositiveNumber);
  sub_estimates->add_option("--out", estimates.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sub_moments) return cmd_moments(moments, out);
    if (*sub_verify) return cmd_verify(verify, out, err);
    if (*sub_growth) return cmd_norm_growth(growth, out);
    if (*sub_classify) return cmd_classify(classify, out);
    if (*sub_estimates) return cmd_estimates(estimates, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cesaro
