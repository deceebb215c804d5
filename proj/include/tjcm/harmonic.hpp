#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tjcm/dynamics.hpp"

namespace tjcm {

struct AsymptoticCase {
  int k1 = 1;
  int k2 = 1;
  double nbar1 = 0.0;
  double nbar2 = 0.0;
  double mu_exact = 0.0;
  double mu_asymptotic = 0.0;
};

// All functions below assume single-photon coherent inputs (l1 == l2 == 1)
// and throw DomainError otherwise.

// (Lambda_{n+2,m} - Lambda_{n,m}) / (2 sqrt((n+1)(m+1)))
double mu1_exact(std::int64_t n, std::int64_t m, const ModelConfig& cfg);
// Same quantity written through factorial ratios and a rationalized difference.
double mu1_expanded(std::int64_t n, std::int64_t m, const ModelConfig& cfg);
// (k1/2) nbar^((k1-3)/2) mbar^((k2-1)/2)
double mu1_asymptotic(const ModelConfig& cfg, double nbar, double mbar);

// (Lambda_{n+2,m+2} - Lambda_{n,m}) / (2 sqrt((n+1)(m+1)))
double mu2_exact(std::int64_t n, std::int64_t m, const ModelConfig& cfg);
// Eight-term strong-field expansion, term by term.
double mu2_asymptotic(const ModelConfig& cfg, double nbar1, double nbar2);
// Closed product form of the same expansion:
// (1/4) a^((k1-1)/2) b^((k2-1)/2) [((1 + k1/a)(1 + k2/b))^2 - 1]
double mu2_factored(const ModelConfig& cfg, double nbar1, double nbar2);

AsymptoticCase mu1_case(const ModelConfig& cfg, double nbar1, double nbar2);
AsymptoticCase mu2_case(const ModelConfig& cfg, double nbar1, double nbar2);

// Lambda_{n+2,m} - Lambda_{n,m} for (k1,k2) = (2,2), evaluated exactly.
double two_photon_gap(std::int64_t n, std::int64_t m);
// Large-n limit 2 sqrt((m+1)(m+2)).
double two_photon_gap_limit(std::int64_t m);

// nbar1 sum P(n) P(m) cos[T (Lambda_{n+2,m} - Lambda_{n,m})]
double harmonic_moment_a1sq(const Model& model, double T);
// alpha1^2 alpha2^2 sum C^2_{n,m} cos[T (Lambda_{n+2,m+2} - Lambda_{n,m})]
double harmonic_moment_a1sq_a2sq(const Model& model, double T);
// Exact <a1^2(T)> as a P(n)P(m) weighted sum with the branch ratio
// sqrt((n+k1+1)(n+k1+2) / ((n+1)(n+2))) on the sine-sine term.
double moment_a1sq_exact_rewrite(const Model& model, double T);

// True when mu1_asymptotic does not change as nbar = mbar is scaled.
bool mu1_is_constant(int k1, int k2);
// Pairs k1, k2 >= 1 with 2 <= k1 + k2 <= max_sum whose mu1 is constant.
std::vector<std::pair<int, int>> rcp_classes_by_mu1(int max_sum);

}  // namespace tjcm
