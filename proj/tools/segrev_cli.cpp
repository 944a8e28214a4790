// segrev: censuses of the binary Segre varieties S_(N), their geometric
// hyperplanes and Veldkamp lines, with golden-table verification.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "segrev/atlas.hpp"
#include "segrev/report.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int report_checks(const std::vector<segrev::CheckResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ": " << r.what;
    if (!r.passed && !r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (!r.passed) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"censuses of binary Segre varieties and their Veldkamp spaces"};
  app.require_subcommand(1);

  int n = 4;
  std::string target = "hyperplanes";
  std::string format = "json";
  std::string out_path;
  std::string scope = "all";
  std::string data_dir = "data";
  int workers = 1;

  auto* census = app.add_subcommand("census", "emit a type census");
  census->add_option("--n", n, "variety index N")->check(CLI::Range(1, 4));
  census->add_option("--target", target, "hyperplanes | vlines")
      ->check(CLI::IsMember({"hyperplanes", "vlines"}));
  census->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  census->add_option("--out", out_path, "output path (default: stdout)");
  census->add_option("--workers", workers, "worker count")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "verify censuses against golden tables");
  verify->add_option("--scope", scope,
                     "all | t1..t7 | quadric | lgr | blowup | pg | construction | "
                     "weights | orbits");
  verify->add_option("--data-dir", data_dir, "directory holding the golden tables");
  verify->add_option("--workers", workers, "worker count")->check(CLI::PositiveNumber);

  auto* quadric = app.add_subcommand("quadric", "invariant-quadric membership report");
  quadric->add_option("--n", n, "variety index N")->check(CLI::Range(2, 4));
  quadric->add_option("--out", out_path, "output path (default: stdout)");

  auto* lgr = app.add_subcommand("lgr", "Lagrangian-generator spinor correspondence report");
  lgr->add_option("--n", n, "variety index N")->check(CLI::Range(2, 4));
  lgr->add_option("--out", out_path, "output path (default: stdout)");

  auto* blowup = app.add_subcommand("blowup-check", "blow-up/projection identity checks");
  blowup->add_option("--data-dir", data_dir, "directory holding the golden tables");
  blowup->add_option("--workers", workers, "worker count")->check(CLI::PositiveNumber);

  auto* weights = app.add_subcommand("weights", "per-functional tensor weights as CSV");
  weights->add_option("--n", n, "variety index N")->check(CLI::Range(1, 4));
  weights->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census->parsed()) {
      if (target == "vlines" && n > 3) {
        std::cerr << "error: the Veldkamp-line census is available for n <= 3\n";
        return 2;
      }
      segrev::Atlas atlas(n);
      std::string text;
      if (target == "hyperplanes") {
        const auto& c = atlas.level(n).hyperplanes;
        text = format == "json" ? segrev::hyperplane_census_json(c)
                                : segrev::hyperplane_census_csv(c);
      } else {
        const auto& c = atlas.level(n).vlines;
        text = format == "json" ? segrev::vl_census_json(c) : segrev::vl_census_csv(c);
      }
      return write_output(text, out_path);
    }
    if (verify->parsed()) {
      segrev::Atlas atlas(4);
      std::vector<segrev::CheckResult> results;
      try {
        results = segrev::run_verify(atlas, data_dir, scope);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      return report_checks(results);
    }
    if (quadric->parsed()) {
      segrev::Atlas atlas(n);
      const auto& lv = atlas.level(n);
      if (lv.quadric_report.split_defect) {
        std::cerr << "defect: a hyperplane type is split across the quadric\n";
        return 1;
      }
      return write_output(segrev::quadric_report_json(n, lv.quadric_report), out_path);
    }
    if (lgr->parsed()) {
      segrev::Atlas atlas(n);
      const auto& lv = atlas.level(n);
      auto rep = segrev::lgr_census(n, lv.hyperplanes, lv.quadric);
      if (!rep.injective || (n >= 3 && !rep.all_on_quadric)) {
        std::cerr << "defect: spinor correspondence violated\n";
        return 1;
      }
      return write_output(segrev::lgr_report_json(rep), out_path);
    }
    if (blowup->parsed()) {
      segrev::Atlas atlas(4);
      return report_checks(segrev::run_verify(atlas, data_dir, "blowup"));
    }
    if (weights->parsed()) {
      segrev::Atlas atlas(n);
      return write_output(segrev::weights_csv(atlas.level(n).weights), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
