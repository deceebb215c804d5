#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjcm/numerics.hpp"
#include "tjcm/rcp.hpp"

namespace tjcm {

struct GridSpec {
  double t_min = 0.0;
  double t_max = 25.0;
  int points = 2000;
  bool operator==(const GridSpec&) const = default;
};

struct OutputSpec {
  std::string dir = ".";
  bool csv = true;
  bool plot = false;
  bool report = false;
  bool operator==(const OutputSpec&) const = default;
};

struct AnalysisSpec {
  std::optional<double> prominence;
  std::optional<double> window;
  bool operator==(const AnalysisSpec&) const = default;
};

struct RunManifest {
  std::string name = "run";
  std::string notes;
  ModelConfig cfg;
  GridSpec grid;
  std::vector<std::string> quantities;
  OutputSpec outputs;
  AnalysisSpec analysis;
  bool operator==(const RunManifest&) const = default;
};

struct FieldError {
  std::string path;
  std::string reason;
};

class ManifestError : public Error {
 public:
  explicit ManifestError(std::vector<FieldError> errors);
  const std::vector<FieldError>& errors() const { return errors_; }

 private:
  std::vector<FieldError> errors_;
};

// Default truncation epsilon, overridable through TJCM_EPSILON.
double default_epsilon();

// YAML document. Throws ManifestError listing every field problem found.
RunManifest parse_manifest(const std::string& text);
std::string render_manifest(const RunManifest& m);

struct RunArtifact {
  std::string label;
  std::string csv_path;
  std::string plot_path;
  std::string report_path;
  TimeSeries series;
  std::optional<RcpReport> report;
};

std::vector<RunArtifact> run(const RunManifest& m);

std::vector<RunManifest> presets();
// Throws Error for an unknown name.
RunManifest preset(const std::string& name);

}  // namespace tjcm
