#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tjcm/error.hpp"

namespace tjcm {

inline constexpr double kDefaultEpsilon = 1e-12;

struct TruncationSpec {
  double epsilon = kDefaultEpsilon;
  // Filled by resolve_truncation; -1 means not yet derived.
  int n_max_1 = -1;
  int n_max_2 = -1;

  bool operator==(const TruncationSpec&) const = default;
};

struct ModelConfig {
  int k1 = 1;
  int k2 = 1;
  int l1 = 1;
  int l2 = 1;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  TruncationSpec trunc;

  // Throws ConfigError naming the first offending field.
  void validate() const;
  // Stable text form used for provenance hashing.
  std::string canonical() const;

  bool operator==(const ModelConfig&) const = default;
};

std::string config_hash(const ModelConfig& cfg);

// exp(-alpha^2/2) alpha^n / sqrt(n!)
double coherent_coefficient(std::int64_t n, double alpha);
double log_coherent_coefficient(std::int64_t n, double alpha);

// C_0..C_{size-1} for one mode, anchored in log space at the Poisson peak,
// filled by the two-term ratio C_{n+1}/C_n = alpha/sqrt(n+1) and scaled to unit
// norm on the truncated grid.
std::vector<double> coherent_column(double alpha, int size);

// Poisson mass at n with mean alpha^2.
double photon_distribution(std::int64_t n, double alpha);

// sqrt((base+1)(base+2)...(base+k)); 1 for k == 0.
double sqrt_rising_product(double base, int k);

// Lambda_{n,m} = sqrt((l1 n + k1)!/(l1 n)! * (l2 m + k2)!/(l2 m)!)
double rabi_frequency(std::int64_t n, std::int64_t m, const ModelConfig& cfg);

// sqrt(q (q-1) ... (q-s+1)); 0 when q < s.
double sqrt_falling_product(std::int64_t q, int s);

// Smallest N with sum_{n>N} Poisson(n; alpha^2) < epsilon.
int select_truncation(double alpha, double epsilon);

// Returns cfg.trunc with both cutoffs derived from the amplitudes.
TruncationSpec resolve_truncation(const ModelConfig& cfg);

// Largest index shift a moment may request beyond the cutoff (mode 1 or 2).
int truncation_pad(const ModelConfig& cfg, int mode);

// Extra Fock states kept past cutoff + pad so that edge losses of fourth-order
// ladder sums stay well below the tail tolerance.
inline constexpr int kGuardBand = 8;

}  // namespace tjcm
