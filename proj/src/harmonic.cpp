#include "tjcm/harmonic.hpp"

#include <cmath>

namespace tjcm {

namespace {

void require_coherent(const ModelConfig& cfg) {
  if (cfg.l1 != 1 || cfg.l2 != 1) throw DomainError("harmonic approximations require l1 == l2 == 1");
  if (cfg.k1 < 1 || cfg.k2 < 1) throw DomainError("k1, k2 must be >= 1");
}

void require_indices(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw DomainError("indices must be >= 0");
}

void require_means(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("mean photon numbers must be > 0");
}

}  // namespace

double mu1_exact(std::int64_t n, std::int64_t m, const ModelConfig& cfg) {
  require_coherent(cfg);
  require_indices(n, m);
  const double gap = rabi_frequency(n + 2, m, cfg) - rabi_frequency(n, m, cfg);
  return gap / (2.0 * std::sqrt(double(n + 1) * double(m + 1)));
}

double mu1_expanded(std::int64_t n, std::int64_t m, const ModelConfig& cfg) {
  require_coherent(cfg);
  require_indices(n, m);
  const double nd = double(n), k1 = cfg.k1;
  // sqrt((n+k1)!/(n+1)!) and sqrt((m+k2)!/(m+1)!)
  const double ratio = sqrt_rising_product(nd + 1.0, cfg.k1 - 1) * sqrt_rising_product(double(m) + 1.0, cfg.k2 - 1);
  const double low = std::sqrt((nd + 2.0) * (nd + 1.0));
  const double high = std::sqrt((nd + k1 + 2.0) * (nd + k1 + 1.0));
  return ratio * ((2.0 * nd + 3.0) * k1 + k1 * k1) / (2.0 * low * (high + low));
}

double mu1_asymptotic(const ModelConfig& cfg, double nbar, double mbar) {
  require_coherent(cfg);
  require_means(nbar, mbar);
  return 0.5 * cfg.k1 * std::pow(nbar, 0.5 * (cfg.k1 - 3)) * std::pow(mbar, 0.5 * (cfg.k2 - 1));
}

double mu2_exact(std::int64_t n, std::int64_t m, const ModelConfig& cfg) {
  require_coherent(cfg);
  require_indices(n, m);
  const double gap = rabi_frequency(n + 2, m + 2, cfg) - rabi_frequency(n, m, cfg);
  return gap / (2.0 * std::sqrt(double(n + 1) * double(m + 1)));
}

double mu2_asymptotic(const ModelConfig& cfg, double a, double b) {
  require_coherent(cfg);
  require_means(a, b);
  const double k1 = cfg.k1, k2 = cfg.k2;
  auto p = [&](double e1, double e2) { return std::pow(a, 0.5 * (k1 - e1)) * std::pow(b, 0.5 * (k2 - e2)); };
  const double sum = 2.0 * k2 * p(1, 3) + k2 * k2 * p(1, 5) + 2.0 * k1 * p(3, 1) + 4.0 * k1 * k2 * p(3, 3) +
                     2.0 * k1 * k2 * k2 * p(3, 5) + k1 * k1 * p(5, 1) + 2.0 * k1 * k1 * k2 * p(5, 3) +
                     k1 * k1 * k2 * k2 * p(5, 5);
  return 0.25 * sum;
}

double mu2_factored(const ModelConfig& cfg, double a, double b) {
  require_coherent(cfg);
  require_means(a, b);
  const double grow = (1.0 + cfg.k1 / a) * (1.0 + cfg.k2 / b);
  return 0.25 * std::pow(a, 0.5 * (cfg.k1 - 1)) * std::pow(b, 0.5 * (cfg.k2 - 1)) * (grow * grow - 1.0);
}

AsymptoticCase mu1_case(const ModelConfig& cfg, double nbar1, double nbar2) {
  AsymptoticCase c{cfg.k1, cfg.k2, nbar1, nbar2, 0.0, 0.0};
  c.mu_exact = mu1_exact(std::llround(nbar1), std::llround(nbar2), cfg);
  c.mu_asymptotic = mu1_asymptotic(cfg, nbar1, nbar2);
  return c;
}

AsymptoticCase mu2_case(const ModelConfig& cfg, double nbar1, double nbar2) {
  AsymptoticCase c{cfg.k1, cfg.k2, nbar1, nbar2, 0.0, 0.0};
  c.mu_exact = mu2_exact(std::llround(nbar1), std::llround(nbar2), cfg);
  c.mu_asymptotic = mu2_asymptotic(cfg, nbar1, nbar2);
  return c;
}

double two_photon_gap(std::int64_t n, std::int64_t m) {
  require_indices(n, m);
  ModelConfig cfg;
  cfg.k1 = cfg.k2 = 2;
  return rabi_frequency(n + 2, m, cfg) - rabi_frequency(n, m, cfg);
}

double two_photon_gap_limit(std::int64_t m) {
  require_indices(0, m);
  return 2.0 * std::sqrt(double(m + 1) * double(m + 2));
}

double harmonic_moment_a1sq(const Model& model, double T) {
  const ModelConfig& cfg = model.config();
  require_coherent(cfg);
  double s = 0.0;
  for (int n = 0; n + 2 < model.rows(); ++n) {
    const double pn = model.coefficient1(n) * model.coefficient1(n);
    double row = 0.0;
    for (int m = 0; m < model.cols(); ++m) {
      const double pm = model.coefficient2(m) * model.coefficient2(m);
      row += pm * std::cos(T * (model.rabi(n + 2, m) - model.rabi(n, m)));
    }
    s += pn * row;
  }
  return cfg.alpha1 * cfg.alpha1 * s;
}

double harmonic_moment_a1sq_a2sq(const Model& model, double T) {
  const ModelConfig& cfg = model.config();
  require_coherent(cfg);
  double s = 0.0;
  for (int n = 0; n + 2 < model.rows(); ++n)
    for (int m = 0; m + 2 < model.cols(); ++m) {
      const double w = model.weight(n, m);
      s += w * w * std::cos(T * (model.rabi(n + 2, m + 2) - model.rabi(n, m)));
    }
  return cfg.alpha1 * cfg.alpha1 * cfg.alpha2 * cfg.alpha2 * s;
}

double moment_a1sq_exact_rewrite(const Model& model, double T) {
  const ModelConfig& cfg = model.config();
  require_coherent(cfg);
  const double k1 = cfg.k1;
  double s = 0.0;
  for (int n = 0; n + 2 < model.rows(); ++n) {
    const double pn = model.coefficient1(n) * model.coefficient1(n);
    const double ratio = std::sqrt((n + k1 + 1.0) * (n + k1 + 2.0) / ((n + 1.0) * (n + 2.0)));
    double row = 0.0;
    for (int m = 0; m < model.cols(); ++m) {
      const double pm = model.coefficient2(m) * model.coefficient2(m);
      const double hi = T * model.rabi(n + 2, m), lo = T * model.rabi(n, m);
      row += pm * (std::cos(hi) * std::cos(lo) + ratio * std::sin(hi) * std::sin(lo));
    }
    s += pn * row;
  }
  return cfg.alpha1 * cfg.alpha1 * s;
}

bool mu1_is_constant(int k1, int k2) {
  ModelConfig cfg;
  cfg.k1 = k1;
  cfg.k2 = k2;
  const double lo = mu1_asymptotic(cfg, 25.0, 25.0);
  const double hi = mu1_asymptotic(cfg, 2500.0, 2500.0);
  return std::abs(hi - lo) <= 1e-12 * std::abs(lo);
}

std::vector<std::pair<int, int>> rcp_classes_by_mu1(int max_sum) {
  std::vector<std::pair<int, int>> out;
  for (int total = 2; total <= max_sum; ++total)
    for (int k1 = 1; k1 < total; ++k1)
      if (mu1_is_constant(k1, total - k1)) out.emplace_back(k1, total - k1);
  return out;
}

}  // namespace tjcm
