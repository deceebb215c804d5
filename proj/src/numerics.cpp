#include "tjcm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace tjcm {

namespace {

constexpr int kMaxCutoff = 1 << 20;
constexpr int kMaxDirectRising = 64;

}  // namespace

void ModelConfig::validate() const {
  if (k1 < 1) throw ConfigError("k1", "must be >= 1");
  if (k2 < 1) throw ConfigError("k2", "must be >= 1");
  if (l1 < 1) throw ConfigError("l1", "must be >= 1");
  if (l2 < 1) throw ConfigError("l2", "must be >= 1");
  if (!(alpha1 >= 0.0) || !std::isfinite(alpha1)) throw ConfigError("alpha1", "must be finite and >= 0");
  if (!(alpha2 >= 0.0) || !std::isfinite(alpha2)) throw ConfigError("alpha2", "must be finite and >= 0");
  if (!(trunc.epsilon > 0.0) || !(trunc.epsilon < 1.0)) throw ConfigError("epsilon", "must lie in (0, 1)");
}

std::string ModelConfig::canonical() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "k1=%d;k2=%d;l1=%d;l2=%d;alpha1=%.17g;alpha2=%.17g;epsilon=%.17g", k1, k2,
                l1, l2, alpha1, alpha2, trunc.epsilon);
  return buf;
}

std::string config_hash(const ModelConfig& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : cfg.canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double log_coherent_coefficient(std::int64_t n, double alpha) {
  if (n < 0) throw DomainError("coherent_coefficient: n must be >= 0");
  const double nd = static_cast<double>(n);
  return -0.5 * alpha * alpha + nd * std::log(alpha) - 0.5 * std::lgamma(nd + 1.0);
}

double coherent_coefficient(std::int64_t n, double alpha) {
  if (n < 0) throw DomainError("coherent_coefficient: n must be >= 0");
  if (alpha == 0.0) return n == 0 ? 1.0 : 0.0;
  if (n == 0) return std::exp(-0.5 * alpha * alpha);
  return std::exp(log_coherent_coefficient(n, alpha));
}

std::vector<double> coherent_column(double alpha, int size) {
  if (size < 1) throw DomainError("coherent_column: size must be >= 1");
  std::vector<double> c(size, 0.0);
  if (alpha == 0.0) {
    c[0] = 1.0;
    return c;
  }
  const int peak = std::min(size - 1, static_cast<int>(std::floor(alpha * alpha)));
  c[peak] = coherent_coefficient(peak, alpha);
  for (int n = peak + 1; n < size; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
  for (int n = peak - 1; n >= 0; --n) c[n] = c[n + 1] * std::sqrt(double(n + 1)) / alpha;
  double norm = 0.0;
  for (int n = size - 1; n >= 0; --n) norm += c[n] * c[n];
  const double scale = 1.0 / std::sqrt(norm);
  for (double& x : c) x *= scale;
  return c;
}

double photon_distribution(std::int64_t n, double alpha) {
  const double c = coherent_coefficient(n, alpha);
  return c * c;
}

double sqrt_rising_product(double base, int k) {
  if (k > kMaxDirectRising) {
    return std::exp(0.5 * (std::lgamma(base + k + 1.0) - std::lgamma(base + 1.0)));
  }
  double p = 1.0;
  for (int i = 1; i <= k; ++i) p *= std::sqrt(base + i);
  return p;
}

double rabi_frequency(std::int64_t n, std::int64_t m, const ModelConfig& cfg) {
  if (n < 0 || m < 0) throw DomainError("rabi_frequency: indices must be >= 0");
  const double b1 = static_cast<double>(cfg.l1) * static_cast<double>(n);
  const double b2 = static_cast<double>(cfg.l2) * static_cast<double>(m);
  return sqrt_rising_product(b1, cfg.k1) * sqrt_rising_product(b2, cfg.k2);
}

double sqrt_falling_product(std::int64_t q, int s) {
  if (q < s) return 0.0;
  double p = 1.0;
  for (int i = 0; i < s; ++i) p *= std::sqrt(static_cast<double>(q - i));
  return p;
}

int select_truncation(double alpha, double epsilon) {
  if (!(alpha >= 0.0)) throw DomainError("select_truncation: alpha must be >= 0");
  if (!(epsilon > 0.0)) throw DomainError("select_truncation: epsilon must be > 0");
  if (alpha == 0.0) return 0;
  // Masses are collected well past the point where they underflow, then the
  // tail is summed from the right so that small tails are not lost to
  // cancellation against 1.
  const double mean = alpha * alpha;
  int hi = static_cast<int>(mean + 40.0 * std::sqrt(mean) + 60.0);
  if (hi > kMaxCutoff) throw DomainError("select_truncation: amplitude too large");
  std::vector<double> mass(hi + 1);
  for (int n = 0; n <= hi; ++n) mass[n] = photon_distribution(n, alpha);
  double tail = 0.0;  // sum over n > N
  for (int n = hi; n >= 0; --n) {
    if (tail >= epsilon) return n + 1;
    tail += mass[n];
  }
  return 0;
}

TruncationSpec resolve_truncation(const ModelConfig& cfg) {
  TruncationSpec t = cfg.trunc;
  t.n_max_1 = select_truncation(cfg.alpha1, t.epsilon);
  t.n_max_2 = select_truncation(cfg.alpha2, t.epsilon);
  return t;
}

int truncation_pad(const ModelConfig& cfg, int mode) {
  const int k = mode == 1 ? cfg.k1 : cfg.k2;
  return k > 4 ? k : 4;
}

}  // namespace tjcm
