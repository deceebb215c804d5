#include "tjcm/manifest.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "tjcm/output.hpp"
#include "tjcm/quantity.hpp"

namespace tjcm {

namespace {

std::string join_errors(const std::vector<FieldError>& errors) {
  std::string s = "invalid manifest:";
  for (const auto& e : errors) s += "\n  " + (e.path.empty() ? std::string("<root>") : e.path) + ": " + e.reason;
  return s;
}

class Reader {
 public:
  std::vector<FieldError> errors;

  void fail(const std::string& path, const std::string& reason) { errors.push_back({path, reason}); }

  void check_keys(const YAML::Node& node, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& kv : node) {
      const std::string key = kv.first.as<std::string>();
      if (!allowed.count(key)) fail(join(path, key), "unknown key");
    }
  }

  bool require_map(const YAML::Node& node, const std::string& path) {
    if (node.IsMap()) return true;
    fail(path, "expected a mapping");
    return false;
  }

  template <typename T>
  void read(const YAML::Node& parent, const std::string& path, const std::string& key, T& out, bool required,
            const char* type_name) {
    const YAML::Node node = parent[key];
    if (!node) {
      if (required) fail(join(path, key), "missing required field");
      return;
    }
    try {
      if (!node.IsScalar()) throw YAML::BadConversion(node.Mark());
      out = node.as<T>();
    } catch (const YAML::Exception&) {
      fail(join(path, key), std::string("expected ") + type_name);
    }
  }

  template <typename T>
  void read_optional(const YAML::Node& parent, const std::string& path, const std::string& key,
                     std::optional<T>& out, const char* type_name) {
    if (!parent[key]) return;
    T v{};
    read(parent, path, key, v, true, type_name);
    out = v;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
};

}  // namespace

ManifestError::ManifestError(std::vector<FieldError> errors) : Error(join_errors(errors)), errors_(std::move(errors)) {}

double default_epsilon() {
  const char* env = std::getenv("TJCM_EPSILON");
  if (!env || !*env) return kDefaultEpsilon;
  char* end = nullptr;
  const double eps = std::strtod(env, &end);
  if (*end != '\0' || !(eps > 0.0) || !(eps < 1.0)) throw ConfigError("TJCM_EPSILON", "must be a number in (0, 1)");
  return eps;
}

RunManifest parse_manifest(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ManifestError(std::vector<FieldError>{{"", std::string("malformed YAML: ") + e.msg}});
  }
  Reader rd;
  if (!root || !root.IsMap()) throw ManifestError(std::vector<FieldError>{{"", "document must be a mapping"}});
  rd.check_keys(root, "", {"name", "notes", "model", "grid", "quantities", "outputs", "analysis"});

  RunManifest m;
  m.cfg.trunc.epsilon = default_epsilon();
  rd.read(root, "", "name", m.name, false, "string");
  rd.read(root, "", "notes", m.notes, false, "string");

  if (!root["model"]) {
    rd.fail("model", "missing required field");
  } else if (rd.require_map(root["model"], "model")) {
    const YAML::Node node = root["model"];
    rd.check_keys(node, "model", {"k1", "k2", "l1", "l2", "alpha1", "alpha2", "epsilon"});
    rd.read(node, "model", "k1", m.cfg.k1, true, "integer");
    rd.read(node, "model", "k2", m.cfg.k2, true, "integer");
    rd.read(node, "model", "l1", m.cfg.l1, false, "integer");
    rd.read(node, "model", "l2", m.cfg.l2, false, "integer");
    rd.read(node, "model", "alpha1", m.cfg.alpha1, true, "real number");
    rd.read(node, "model", "alpha2", m.cfg.alpha2, true, "real number");
    rd.read(node, "model", "epsilon", m.cfg.trunc.epsilon, false, "real number");
    if (rd.errors.empty()) {
      // Report every violated invariant, not only the first.
      for (const auto& [field, ok] : std::vector<std::pair<std::string, bool>>{
               {"k1", m.cfg.k1 >= 1}, {"k2", m.cfg.k2 >= 1}, {"l1", m.cfg.l1 >= 1}, {"l2", m.cfg.l2 >= 1}})
        if (!ok) rd.fail("model." + field, "must be >= 1");
      ModelConfig probe = m.cfg;
      probe.k1 = probe.k2 = probe.l1 = probe.l2 = 1;
      try {
        probe.validate();
      } catch (const ConfigError& e) {
        rd.fail("model." + e.field(), e.reason());
      }
    }
  }

  if (root["grid"] && rd.require_map(root["grid"], "grid")) {
    const YAML::Node node = root["grid"];
    rd.check_keys(node, "grid", {"t_min", "t_max", "points"});
    const std::size_t before = rd.errors.size();
    rd.read(node, "grid", "t_min", m.grid.t_min, false, "real number");
    rd.read(node, "grid", "t_max", m.grid.t_max, false, "real number");
    rd.read(node, "grid", "points", m.grid.points, false, "integer");
    if (rd.errors.size() == before) {
      if (!(m.grid.t_min < m.grid.t_max)) rd.fail("grid.t_max", "must be greater than t_min");
      if (m.grid.points < 2) rd.fail("grid.points", "must be >= 2");
    }
  }

  const YAML::Node qs = root["quantities"];
  if (!qs) {
    rd.fail("quantities", "missing required field");
  } else if (!qs.IsSequence()) {
    rd.fail("quantities", "expected a list of selectors");
  } else if (qs.size() == 0) {
    rd.fail("quantities", "at least one quantity is required");
  } else {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string path = "quantities[" + std::to_string(i) + "]";
      try {
        const Quantity q = parse_quantity(qs[i].as<std::string>(), path);
        if (rd.errors.empty()) check_quantity_domain(q, m.cfg);
        m.quantities.push_back(q.label);
      } catch (const ConfigError& e) {
        rd.fail(e.field(), e.reason());
      } catch (const Error& e) {
        rd.fail(path, e.what());
      } catch (const YAML::Exception&) {
        rd.fail(path, "expected a selector string");
      }
    }
  }

  if (root["outputs"] && rd.require_map(root["outputs"], "outputs")) {
    const YAML::Node node = root["outputs"];
    rd.check_keys(node, "outputs", {"dir", "csv", "plot", "report"});
    rd.read(node, "outputs", "dir", m.outputs.dir, false, "string");
    rd.read(node, "outputs", "csv", m.outputs.csv, false, "boolean");
    rd.read(node, "outputs", "plot", m.outputs.plot, false, "boolean");
    rd.read(node, "outputs", "report", m.outputs.report, false, "boolean");
    if (!m.outputs.csv && !m.outputs.plot && !m.outputs.report) rd.fail("outputs", "at least one sink must be enabled");
  }

  if (root["analysis"] && rd.require_map(root["analysis"], "analysis")) {
    const YAML::Node node = root["analysis"];
    rd.check_keys(node, "analysis", {"prominence", "window"});
    rd.read_optional(node, "analysis", "prominence", m.analysis.prominence, "real number");
    rd.read_optional(node, "analysis", "window", m.analysis.window, "real number");
    if (m.analysis.prominence && !(*m.analysis.prominence > 0.0)) rd.fail("analysis.prominence", "must be > 0");
    if (m.analysis.window && !(*m.analysis.window > 0.0)) rd.fail("analysis.window", "must be > 0");
  }

  if (!rd.errors.empty()) throw ManifestError(rd.errors);
  return m;
}

std::string render_manifest(const RunManifest& m) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << m.name;
  if (!m.notes.empty()) out << YAML::Key << "notes" << YAML::Value << YAML::DoubleQuoted << m.notes;
  out << YAML::Key << "model" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "k1" << YAML::Value << m.cfg.k1;
  out << YAML::Key << "k2" << YAML::Value << m.cfg.k2;
  out << YAML::Key << "l1" << YAML::Value << m.cfg.l1;
  out << YAML::Key << "l2" << YAML::Value << m.cfg.l2;
  out << YAML::Key << "alpha1" << YAML::Value << format_double(m.cfg.alpha1);
  out << YAML::Key << "alpha2" << YAML::Value << format_double(m.cfg.alpha2);
  out << YAML::Key << "epsilon" << YAML::Value << format_double(m.cfg.trunc.epsilon);
  out << YAML::EndMap;
  out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "t_min" << YAML::Value << format_double(m.grid.t_min);
  out << YAML::Key << "t_max" << YAML::Value << format_double(m.grid.t_max);
  out << YAML::Key << "points" << YAML::Value << m.grid.points;
  out << YAML::EndMap;
  out << YAML::Key << "quantities" << YAML::Value << YAML::BeginSeq;
  for (const auto& q : m.quantities) out << YAML::DoubleQuoted << q;
  out << YAML::EndSeq;
  out << YAML::Key << "outputs" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "dir" << YAML::Value << YAML::DoubleQuoted << m.outputs.dir;
  out << YAML::Key << "csv" << YAML::Value << m.outputs.csv;
  out << YAML::Key << "plot" << YAML::Value << m.outputs.plot;
  out << YAML::Key << "report" << YAML::Value << m.outputs.report;
  out << YAML::EndMap;
  if (m.analysis.prominence || m.analysis.window) {
    out << YAML::Key << "analysis" << YAML::Value << YAML::BeginMap;
    if (m.analysis.prominence) out << YAML::Key << "prominence" << YAML::Value << format_double(*m.analysis.prominence);
    if (m.analysis.window) out << YAML::Key << "window" << YAML::Value << format_double(*m.analysis.window);
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::vector<RunArtifact> run(const RunManifest& m) {
  const Model model(m.cfg);
  const std::vector<double> grid = uniform_grid(m.grid.t_min, m.grid.t_max, m.grid.points);
  std::filesystem::create_directories(m.outputs.dir);
  RevivalOptions opts;
  opts.prominence = m.analysis.prominence;
  opts.window = m.analysis.window;
  std::vector<RunArtifact> artifacts;
  for (const auto& selector : m.quantities) {
    const Quantity q = parse_quantity(selector);
    check_quantity_domain(q, m.cfg);
    RunArtifact a;
    a.label = q.label;
    a.series = series(model, grid, q.eval, q.label);
    const std::string stem = (std::filesystem::path(m.outputs.dir) / (m.name + "_" + label_slug(q.label))).string();
    if (m.outputs.csv) {
      a.csv_path = stem + ".csv";
      write_csv(a.series, a.csv_path);
    }
    if (m.outputs.plot) {
      a.plot_path = stem + ".svg";
      write_svg(a.series, a.plot_path);
    }
    if (m.outputs.report) {
      a.report = detect_revivals(a.series, opts);
      a.report_path = stem + ".rcp.yaml";
      write_text(render_report(*a.report, q.label), a.report_path);
    }
    artifacts.push_back(std::move(a));
  }
  return artifacts;
}

namespace {

RunManifest make_preset(const std::string& name, int k1, int k2, int l, std::vector<std::string> quantities,
                        std::string notes, double t_max = 25.0) {
  RunManifest m;
  m.name = name;
  m.notes = std::move(notes);
  m.cfg.k1 = k1;
  m.cfg.k2 = k2;
  m.cfg.l1 = m.cfg.l2 = l;
  m.cfg.alpha1 = m.cfg.alpha2 = 5.0;
  m.cfg.trunc.epsilon = default_epsilon();
  m.grid = {0.0, t_max, 2000};
  m.quantities = std::move(quantities);
  m.outputs = {".", true, true, true};
  return m;
}

}  // namespace

std::vector<RunManifest> presets() {
  const std::string range = "T range [0, 25] with 2000 points";
  return {
      make_preset("fig1", 1, 1, 1, {"inversion"}, "atomic inversion, (k1,k2,alpha1,alpha2) = (1,1,5,5); " + range),
      make_preset("fig2a", 3, 1, 1, {"squeezing(single1).Q", "squeezing(single1).S"},
                  "single-mode factors of mode 1, (3,1,5,5); " + range),
      make_preset("fig2b", 1, 3, 1, {"squeezing(single1).Q", "squeezing(single1).S"},
                  "single-mode factors of mode 1, (1,3,5,5); " + range),
      make_preset("fig2c", 2, 2, 1, {"squeezing(single1).Q", "squeezing(single1).S"},
                  "single-mode factors of mode 1, (2,2,5,5); " + range),
      make_preset("fig3a", 3, 1, 1, {"rescaled(V1)"}, "rescaled single-mode factor V1, (3,1,5,5); " + range),
      make_preset("fig3b", 2, 2, 1, {"rescaled(V1prime)"}, "rescaled single-mode factor V1', (2,2,5,5); " + range),
      make_preset("fig4", 1, 1, 3, {"rescaled(V3)"},
                  "rescaled sum factor V3, three-photon coherent inputs, (1,1,5,5); T range [0, 25/3] with 2000 "
                  "points (revivals are three times denser than for l = 1)",
                  25.0 / 3.0),
      make_preset("fig5a", 3, 1, 1, {"squeezing(sum).Q", "rescaled(V4)"}, "sum squeezing, (3,1,5,5); " + range),
      make_preset("fig5b", 2, 2, 1, {"squeezing(sum).Q", "rescaled(V4)"}, "sum squeezing, (2,2,5,5); " + range),
      make_preset("fig6a", 3, 1, 1, {"squeezing(difference).Q", "rescaled(V5)"},
                  "difference squeezing, (3,1,5,5); " + range),
      make_preset("fig6b", 2, 2, 1, {"squeezing(difference).Q"}, "difference squeezing, (2,2,5,5); " + range),
  };
}

RunManifest preset(const std::string& name) {
  for (auto& m : presets())
    if (m.name == name) return m;
  throw Error("unknown preset '" + name + "'");
}

}  // namespace tjcm
