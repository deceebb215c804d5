#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tjcm/harmonic.hpp"
#include "tjcm/manifest.hpp"
#include "tjcm/output.hpp"
#include "tjcm/quantity.hpp"
#include "tjcm/rcp.hpp"
#include "tjcm/rescaled.hpp"
#include "tjcm/squeezing.hpp"

namespace py = pybind11;
using namespace tjcm;

namespace {

ModelConfig make_config(int k1, int k2, double alpha1, double alpha2, int l1, int l2, double epsilon) {
  ModelConfig c;
  c.k1 = k1;
  c.k2 = k2;
  c.l1 = l1;
  c.l2 = l2;
  c.alpha1 = alpha1;
  c.alpha2 = alpha2;
  c.trunc.epsilon = epsilon;
  c.validate();
  return c;
}

TimeSeries quantity_series(const Model& model, const std::vector<double>& grid, const std::string& selector) {
  const Quantity q = parse_quantity(selector);
  check_quantity_domain(q, model.config());
  return series(model, grid, q.eval, q.label);
}

}  // namespace

PYBIND11_MODULE(_tjcm, m) {
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<TruncationOverflow>(m, "TruncationOverflow", base.ptr());
  py::register_exception<ManifestError>(m, "ManifestError", base.ptr());

  py::class_<ModelConfig>(m, "ModelConfig")
      .def(py::init(&make_config), py::arg("k1"), py::arg("k2"), py::arg("alpha1"), py::arg("alpha2"),
           py::arg("l1") = 1, py::arg("l2") = 1, py::arg("epsilon") = kDefaultEpsilon)
      .def_readonly("k1", &ModelConfig::k1)
      .def_readonly("k2", &ModelConfig::k2)
      .def_readonly("l1", &ModelConfig::l1)
      .def_readonly("l2", &ModelConfig::l2)
      .def_readonly("alpha1", &ModelConfig::alpha1)
      .def_readonly("alpha2", &ModelConfig::alpha2)
      .def_property_readonly("epsilon", [](const ModelConfig& c) { return c.trunc.epsilon; })
      .def_property_readonly("hash", [](const ModelConfig& c) { return config_hash(c); })
      .def(py::self == py::self)
      .def("__repr__", [](const ModelConfig& c) {
        return "ModelConfig(k1=" + std::to_string(c.k1) + ", k2=" + std::to_string(c.k2) +
               ", alpha1=" + format_double(c.alpha1) + ", alpha2=" + format_double(c.alpha2) +
               ", l1=" + std::to_string(c.l1) + ", l2=" + std::to_string(c.l2) + ")";
      });

  py::class_<Model>(m, "Model")
      .def(py::init<const ModelConfig&>())
      .def_property_readonly("config", &Model::config)
      .def_property_readonly("rows", &Model::rows)
      .def_property_readonly("cols", &Model::cols)
      .def("rabi", &Model::rabi)
      .def("initial_mean_photon", &Model::initial_mean_photon, py::arg("mode"));

  py::class_<JointAmplitudes>(m, "JointAmplitudes")
      .def_readonly("T", &JointAmplitudes::T)
      .def_readonly("rows", &JointAmplitudes::rows)
      .def_readonly("cols", &JointAmplitudes::cols)
      .def("plus", &JointAmplitudes::plus)
      .def("minus", &JointAmplitudes::minus)
      .def("norm", &JointAmplitudes::norm)
      .def("population_difference", &JointAmplitudes::population_difference);

  m.def("evolve", &evolve, py::arg("model"), py::arg("T"));
  m.def("atomic_inversion", &atomic_inversion, py::arg("model"), py::arg("T"));
  m.def("mean_photon", &mean_photon, py::arg("model"), py::arg("T"), py::arg("mode"));
  m.def(
      "moment",
      [](const Model& model, double T, int s1, int s2, int s3, int s4) {
        return moment_generic(evolve(model, T), MomentOrder{s1, s2, s3, s4});
      },
      py::arg("model"), py::arg("T"), py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("s4"));
  m.def(
      "moment_closed_form",
      [](const Model& model, double T, int s1, int s2, int s3, int s4) {
        return moment_closed_form(model, T, MomentOrder{s1, s2, s3, s4});
      },
      py::arg("model"), py::arg("T"), py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("s4"));

  py::enum_<SqueezingFamily>(m, "SqueezingFamily")
      .value("SingleMode1", SqueezingFamily::SingleMode1)
      .value("SingleMode2", SqueezingFamily::SingleMode2)
      .value("TwoMode", SqueezingFamily::TwoMode)
      .value("Sum", SqueezingFamily::Sum)
      .value("Difference", SqueezingFamily::Difference);
  py::class_<QuadratureReport>(m, "QuadratureReport")
      .def_readonly("S", &QuadratureReport::S)
      .def_readonly("Q", &QuadratureReport::Q)
      .def_readonly("T", &QuadratureReport::T)
      .def_readonly("family", &QuadratureReport::family);
  m.def("squeezing", &squeezing, py::arg("model"), py::arg("T"), py::arg("family"));

  py::enum_<RescaledKind>(m, "RescaledKind")
      .value("V1", RescaledKind::V1)
      .value("V1Prime", RescaledKind::V1Prime)
      .value("V2Prime", RescaledKind::V2Prime)
      .value("V3", RescaledKind::V3)
      .value("V4", RescaledKind::V4)
      .value("V5", RescaledKind::V5)
      .value("DifferenceReadout", RescaledKind::DifferenceReadout);
  m.def("rescaled", &rescaled, py::arg("model"), py::arg("T"), py::arg("kind"));

  m.def("mu1_exact", &mu1_exact, py::arg("n"), py::arg("m"), py::arg("config"));
  m.def("mu1_asymptotic", &mu1_asymptotic, py::arg("config"), py::arg("nbar1"), py::arg("nbar2"));
  m.def("mu2_exact", &mu2_exact, py::arg("n"), py::arg("m"), py::arg("config"));
  m.def("mu2_asymptotic", &mu2_asymptotic, py::arg("config"), py::arg("nbar1"), py::arg("nbar2"));
  m.def("rcp_classes_by_mu1", &rcp_classes_by_mu1, py::arg("max_sum"));

  py::class_<TimeSeries>(m, "TimeSeries")
      .def(py::init([](std::vector<double> grid, std::vector<double> values, std::string label) {
             return TimeSeries{std::move(grid), std::move(values), std::move(label), ""};
           }),
           py::arg("grid"), py::arg("values"), py::arg("label") = "")
      .def_readonly("grid", &TimeSeries::grid)
      .def_readonly("values", &TimeSeries::values)
      .def_readonly("label", &TimeSeries::label)
      .def_readonly("cfg_hash", &TimeSeries::cfg_hash)
      .def("__len__", [](const TimeSeries& s) { return s.grid.size(); });
  m.def("uniform_grid", &uniform_grid, py::arg("t_min"), py::arg("t_max"), py::arg("points"));
  m.def("series", &quantity_series, py::arg("model"), py::arg("grid"), py::arg("quantity"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<RcpReport>(m, "RcpReport")
      .def_readonly("collapse_intervals", &RcpReport::collapse_intervals)
      .def_readonly("revival_times", &RcpReport::revival_times)
      .def_readonly("revival_prominences", &RcpReport::revival_prominences)
      .def_readonly("period_estimate", &RcpReport::period_estimate)
      .def_readonly("secondary_revival_times", &RcpReport::secondary_revival_times)
      .def_readonly("envelope", &RcpReport::envelope)
      .def_readonly("window", &RcpReport::window)
      .def_readonly("prominence", &RcpReport::prominence);
  m.def(
      "detect_revivals",
      [](const TimeSeries& s, std::optional<double> prominence, std::optional<double> window) {
        RevivalOptions opts;
        opts.prominence = prominence;
        opts.window = window;
        if (prominence && *prominence <= 0.0) throw DomainError("prominence must be positive");
        return detect_revivals(s, opts);
      },
      py::arg("series"), py::arg("prominence") = py::none(), py::arg("window") = py::none());
  m.def("align_revivals", &align_revivals, py::arg("a"), py::arg("b"), py::arg("tol"));

  m.def("preset_names", [] {
    std::vector<std::string> names;
    for (const RunManifest& p : presets()) names.push_back(p.name);
    return names;
  });
  m.def("preset_manifest", [](const std::string& name) { return render_manifest(preset(name)); }, py::arg("name"));
  m.def(
      "run_manifest",
      [](const std::string& text, std::optional<std::string> out_dir) {
        RunManifest manifest = parse_manifest(text);
        if (out_dir) manifest.outputs.dir = *out_dir;
        py::list out;
        for (const RunArtifact& a : run(manifest)) {
          py::dict d;
          d["label"] = a.label;
          d["csv"] = a.csv_path;
          d["plot"] = a.plot_path;
          d["report"] = a.report_path;
          d["series"] = a.series;
          d["rcp"] = a.report ? py::cast(*a.report) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("manifest"), py::arg("out_dir") = py::none());
}
