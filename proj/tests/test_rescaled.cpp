#include <doctest.h>

#include <cmath>

#include "tjcm/harmonic.hpp"
#include "tjcm/rcp.hpp"
#include "tjcm/rescaled.hpp"
#include "tjcm/squeezing.hpp"

using namespace tjcm;

namespace {

ModelConfig make(int k1, int k2, double a1, double a2, int l1 = 1, int l2 = 1) {
  ModelConfig c;
  c.k1 = k1;
  c.k2 = k2;
  c.l1 = l1;
  c.l2 = l2;
  c.alpha1 = a1;
  c.alpha2 = a2;
  return c;
}

}  // namespace

TEST_CASE("rescaled factors at T = 0") {
  const Model m31(make(3, 1, 5, 5)), m22(make(2, 2, 5, 5)), m33(make(1, 1, 5, 5, 3, 3));
  CHECK(v1(m31, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v1_prime(m22, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v2_prime(m22, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v3(m33, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v4(m31, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v4(m22, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  // Q4(0) = <n1 n2> + <n1> - alpha1^2 alpha2^2 = nbar for coherent inputs.
  CHECK(squeezing(m31, 0.0, SqueezingFamily::Difference).Q == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(v5(m31, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  // ((nbar+1)^2 - Q4(0)) / (nbar+1) with Q4(0) = nbar^2 + nbar.
  CHECK(squeezing(m33, 0.0, SqueezingFamily::Difference).Q == doctest::Approx(75.0 * 75.0 + 75.0).epsilon(1e-12));
  CHECK(difference_readout(m33, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("time rescaling inside the factors") {
  const Model m31(make(3, 1, 5, 5));
  const double n1 = m31.initial_mean_photon(1);
  for (double T : {0.9, 3.3, 12.0}) {
    CHECK(v1(m31, T) == (n1 - squeezing(m31, T * 2.0 / 3.0, SqueezingFamily::SingleMode1).Q) / n1);
    CHECK(v5(m31, T) == (n1 * (n1 + 1) - squeezing(m31, T / 2.0, SqueezingFamily::Difference).Q) / (n1 * n1));
  }
  CHECK(rescaled_time_scale(RescaledKind::V1) == doctest::Approx(2.0 / 3.0));
  CHECK(rescaled_time_scale(RescaledKind::V5) == 0.5);
  CHECK(rescaled_time_scale(RescaledKind::V4) == 1.0);
}

TEST_CASE("rescaled factors reject configurations outside their domain") {
  const Model m11(make(1, 1, 5, 5)), m31(make(3, 1, 5, 5)), m22(make(2, 2, 5, 5)), m13(make(1, 3, 5, 5));
  const Model m33(make(1, 1, 5, 5, 3, 3)), m31b(make(3, 1, 5, 4));
  CHECK_THROWS_AS(v1(m22, 1.0), DomainError);
  CHECK_THROWS_AS(v1(m13, 1.0), DomainError);
  CHECK_THROWS_AS(v1_prime(m31, 1.0), DomainError);
  CHECK_THROWS_AS(v2_prime(m11, 1.0), DomainError);
  CHECK_THROWS_AS(v3(m11, 1.0), DomainError);
  CHECK_THROWS_AS(difference_readout(m11, 1.0), DomainError);
  CHECK_THROWS_AS(v4(m13, 1.0), DomainError);
  CHECK_THROWS_AS(v4(m33, 1.0), DomainError);
  CHECK_THROWS_AS(v5(m22, 1.0), DomainError);
  CHECK_THROWS_AS(v5(m31b, 1.0), DomainError);
  CHECK_NOTHROW(v5(m31, 1.0));
}

TEST_CASE("V1 stays near the inversion range") {
  const Model m31(make(3, 1, 5, 5));
  for (double T : uniform_grid(0.0, 25.0, 500)) {
    const double v = v1(m31, T);
    CHECK(v >= -1.2);
    CHECK(v <= 1.2);
  }
}

TEST_CASE("V1prime and V2prime describe the same trace") {
  const Model m22(make(2, 2, 5, 5));
  const auto grid = uniform_grid(0.0, 25.0, 2000);
  double sq = 0.0, dot = 0.0, na = 0.0, nb = 0.0;
  std::vector<double> a, b;
  for (double T : grid) {
    a.push_back(v1_prime(m22, T));
    b.push_back(v2_prime(m22, T));
    sq += (a.back() - b.back()) * (a.back() - b.back());
  }
  // Frozen regression value of the pointwise RMS difference.
  CHECK(std::sqrt(sq / grid.size()) == doctest::Approx(0.1216).epsilon(0.01));
  // Same revival structure.
  const RcpReport ra = detect_revivals(TimeSeries{grid, a, "a", ""});
  const RcpReport rb = detect_revivals(TimeSeries{grid, b, "b", ""});
  REQUIRE(ra.period_estimate);
  CHECK(align_revivals(ra, rb, 0.05 * *ra.period_estimate) == 1.0);
  // Two-photon single-mode inversion surrogate sum_m P(m) cos(2 T sqrt((m+1)(m+2))).
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double s = 0.0;
    for (int m = 0; m < m22.cols(); ++m)
      s += std::pow(m22.coefficient2(m), 2) * std::cos(2.0 * grid[i] * std::sqrt((m + 1.0) * (m + 2.0)));
    dot += s * a[i];
    na += a[i] * a[i];
    nb += s * s;
  }
  CHECK(dot / std::sqrt(na * nb) > 0.95);
}

TEST_CASE("V3 denominator variants") {
  const Model m33(make(1, 1, 5, 5, 3, 3));
  CHECK(std::abs(v3(m33, 1.3, V3Denominator::AsPrinted) - v3(m33, 1.3)) < 1e-12);
  const Model skew(make(1, 1, 5, 4, 3, 3));
  CHECK(v3(skew, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v3(skew, 0.0, V3Denominator::AsPrinted) != doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("V3 deviation from the inversion is a photon-number fluctuation term") {
  // V3 - <sigma_z> = sum C^2 * 3 (dn + dm) / (n1 + n2 + 1) * cos(2 T Lambda), dn = n - alpha1^2.
  const Model m33(make(1, 1, 5, 5, 3, 3));
  const double denom = m33.initial_mean_photon(1) + m33.initial_mean_photon(2) + 1.0;
  for (double T : {0.05, 0.4, 2.1, 6.0}) {
    double s = 0.0;
    for (int n = 0; n < m33.rows(); ++n)
      for (int m = 0; m < m33.cols(); ++m) {
        const double w = m33.weight(n, m);
        s += w * w * 3.0 * ((n - 25.0) + (m - 25.0)) / denom * std::cos(2.0 * T * m33.rabi(n, m));
      }
    CHECK(std::abs(v3(m33, T) - atomic_inversion(m33, T) - s) < 1e-9);
  }
}

TEST_CASE("rescaled dispatcher") {
  const Model m22(make(2, 2, 5, 5));
  CHECK(rescaled(m22, 2.0, RescaledKind::V4) == v4(m22, 2.0));
  CHECK(std::string(rescaled_name(RescaledKind::V1Prime)) == "V1prime");
}
