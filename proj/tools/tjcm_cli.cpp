#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tjcm/manifest.hpp"
#include "tjcm/output.hpp"
#include "tjcm/rcp.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw tjcm::Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void print_artifacts(const std::vector<tjcm::RunArtifact>& artifacts) {
  for (const auto& a : artifacts) {
    std::cout << a.label << ":";
    if (!a.csv_path.empty()) std::cout << " " << a.csv_path;
    if (!a.plot_path.empty()) std::cout << " " << a.plot_path;
    if (!a.report_path.empty()) std::cout << " " << a.report_path;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode multiphoton Jaynes-Cummings simulator"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Run a YAML manifest");
  std::string manifest_path, sim_out;
  sim->add_option("manifest", manifest_path, "Manifest file")->required();
  sim->add_option("--out", sim_out, "Override outputs.dir");

  auto* pre = app.add_subcommand("preset", "Run built-in presets");
  std::vector<std::string> preset_names;
  std::string preset_out = ".";
  bool list = false, all = false, csv_only = false, show = false;
  pre->add_option("name", preset_names, "Preset name(s)");
  pre->add_option("--out", preset_out, "Output directory");
  pre->add_flag("--list", list, "List preset names");
  pre->add_flag("--all", all, "Run every preset");
  pre->add_flag("--csv-only", csv_only, "Skip plots and reports");
  pre->add_flag("--show", show, "Print the preset manifest instead of running it");

  auto* ana = app.add_subcommand("analyze", "Detect collapses and revivals in a CSV series");
  std::string csv_path;
  double prominence = 0.0, window = 0.0;
  ana->add_option("csv", csv_path, "CSV file with header T,<label>")->required();
  ana->add_option("--prominence", prominence, "Absolute prominence threshold");
  ana->add_option("--window", window, "Envelope window");

  auto* cmp = app.add_subcommand("compare", "Align revivals of two CSV series");
  std::string csv_a, csv_b;
  double tol = 0.0;
  cmp->add_option("csv-a", csv_a)->required();
  cmp->add_option("csv-b", csv_b)->required();
  cmp->add_option("--tol", tol, "Matching tolerance in T (default 5% of the period of csv-a)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      tjcm::RunManifest m = tjcm::parse_manifest(slurp(manifest_path));
      if (!sim_out.empty()) m.outputs.dir = sim_out;
      print_artifacts(tjcm::run(m));
    } else if (*pre) {
      if (list) {
        for (const auto& m : tjcm::presets()) std::cout << m.name << "  " << m.notes << "\n";
        return 0;
      }
      if (all) {
        preset_names.clear();
        for (const auto& m : tjcm::presets()) preset_names.push_back(m.name);
      }
      if (preset_names.empty()) throw tjcm::Error("name a preset, or pass --all or --list");
      for (const auto& name : preset_names) {
        tjcm::RunManifest m = tjcm::preset(name);
        m.outputs.dir = preset_out;
        if (csv_only) m.outputs.plot = m.outputs.report = false;
        if (show) {
          std::cout << tjcm::render_manifest(m);
          continue;
        }
        print_artifacts(tjcm::run(m));
      }
    } else if (*ana) {
      const tjcm::TimeSeries s = tjcm::read_csv(csv_path);
      tjcm::RevivalOptions opts;
      if (ana->count("--prominence")) opts.prominence = prominence;
      if (ana->count("--window")) opts.window = window;
      std::cout << tjcm::render_report(tjcm::detect_revivals(s, opts), s.label);
    } else if (*cmp) {
      const tjcm::TimeSeries a = tjcm::read_csv(csv_a), b = tjcm::read_csv(csv_b);
      const tjcm::RcpReport ra = tjcm::detect_revivals(a), rb = tjcm::detect_revivals(b);
      if (!cmp->count("--tol")) {
        if (!ra.period_estimate) throw tjcm::Error(csv_a + ": no revival period detected; pass --tol");
        tol = 0.05 * *ra.period_estimate;
      }
      std::cout << "a: \"" << a.label << "\"\nb: \"" << b.label << "\"\n";
      std::cout << "tol: " << tjcm::format_double(tol) << "\n";
      std::cout << "alignment: " << tjcm::format_double(tjcm::align_revivals(ra, rb, tol)) << "\n";
      if (a.grid == b.grid) {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
        std::cout << "max_abs_difference: " << tjcm::format_double(worst) << "\n";
      }
    }
  } catch (const tjcm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
