#include <doctest.h>

#include <cmath>
#include <random>

#include "tjcm/dynamics.hpp"

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

std::vector<MomentOrder> orders_up_to(int total) {
  std::vector<MomentOrder> out;
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b)
      for (int c = 0; a + b + c <= total; ++c)
        for (int d = 0; a + b + c + d <= total; ++d) out.push_back({a, b, c, d});
  return out;
}

// Direct double sum built from the scalar kernels only.
double inversion_oracle(const ModelConfig& c, double T) {
  const int N1 = select_truncation(c.alpha1, 1e-14) + 4, N2 = select_truncation(c.alpha2, 1e-14) + 4;
  double s = 0.0;
  for (int n = 0; n <= N1; ++n)
    for (int m = 0; m <= N2; ++m) {
      const double w = coherent_coefficient(n, c.alpha1) * coherent_coefficient(m, c.alpha2);
      s += w * w * std::cos(2.0 * T * rabi_frequency(n, m, c));
    }
  return s;
}

}  // namespace

TEST_CASE("evolve at T = 0") {
  const Model model(make(1, 1, 5, 5));
  const JointAmplitudes a = evolve(model, 0.0);
  for (int n = 0; n < a.rows; ++n)
    for (int m = 0; m < a.cols; ++m) {
      CHECK(a.minus(n, m) == cplx(0.0, 0.0));
      CHECK(a.plus(n, m).real() == model.weight(n, m));
    }
}

TEST_CASE("vacuum evolution is a single Rabi pair") {
  const Model model(make(2, 3, 0, 0));
  const double T = 0.37, rabi = std::sqrt(2.0 * 6.0);
  const JointAmplitudes a = evolve(model, T);
  CHECK(a.plus(0, 0).real() == doctest::Approx(std::cos(T * rabi)));
  CHECK(a.minus(0, 0).imag() == doctest::Approx(-std::sin(T * rabi)));
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("norm stays within the truncation budget") {
  CHECK(std::abs(evolve(Model(make(1, 1, 5, 5)), 10.0).norm() - 1.0) < 1e-10);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> time(0.0, 30.0);
  for (const auto& c : {make(1, 1, 5, 5), make(3, 1, 5, 5), make(2, 2, 3, 6), make(1, 1, 5, 5, 3, 3)}) {
    const Model model(c);
    const double eps = model.truncation().epsilon;
    for (int i = 0; i < 20; ++i) {
      const double norm = evolve(model, time(rng)).norm();
      CHECK(norm >= 1.0 - 2.0 * eps);
      CHECK(norm <= 1.0 + 1e-14);
    }
  }
}

TEST_CASE("atomic inversion") {
  const Model model(make(1, 1, 5, 5));
  CHECK(atomic_inversion(model, 0.0) == doctest::Approx(1.0).epsilon(1e-11));
  const Model vacuum(make(1, 1, 0, 0));
  for (double T : {0.0, 0.3, 2.0, 7.5}) CHECK(atomic_inversion(vacuum, T) == doctest::Approx(std::cos(2 * T)));
  for (double T : {0.5, 3.0, 6.28, 12.0, 19.0}) {
    const double inv = atomic_inversion(model, T);
    CHECK(std::abs(inv - evolve(model, T).population_difference()) < 1e-12);
    CHECK(std::abs(inv - inversion_oracle(model.config(), T)) < 1e-11);
    CHECK(std::abs(inv) <= 1.0 + 1e-12);
  }
}

TEST_CASE("coherent moments at T = 0") {
  const Model model(make(1, 1, 5, 5));
  CHECK(moment_closed_form(model, 0.0, {0, 1, 0, 0}).real() == doctest::Approx(5.0).epsilon(1e-11));
  CHECK(moment_closed_form(model, 0.0, {1, 1, 0, 0}).real() == doctest::Approx(25.0).epsilon(1e-11));
  CHECK(moment_closed_form(model, 0.0, {1, 1, 1, 1}).real() == doctest::Approx(625.0).epsilon(1e-11));
  const JointAmplitudes a = evolve(model, 0.0);
  CHECK(moment_generic(a, {0, 1, 0, 0}).real() == doctest::Approx(5.0).epsilon(1e-11));
  CHECK(moment_generic(a, {0, 0, 0, 2}).real() == doctest::Approx(25.0).epsilon(1e-11));
}

TEST_CASE("multiphoton coherent states") {
  const Model model(make(1, 1, 5, 5, 3, 3));
  CHECK(moment_generic(evolve(model, 0.0), {1, 1, 0, 0}).real() == doctest::Approx(75.0).epsilon(1e-11));
  CHECK(model.initial_mean_photon(2) == doctest::Approx(75.0).epsilon(1e-11));
  for (double T : {0.0, 0.7, 4.2}) {
    const JointAmplitudes a = evolve(model, T);
    CHECK(moment_generic(a, {0, 1, 0, 0}) == cplx(0.0, 0.0));
    CHECK(moment_generic(a, {0, 2, 0, 0}) == cplx(0.0, 0.0));
    CHECK(moment_generic(a, {0, 1, 1, 0}) == cplx(0.0, 0.0));
    CHECK(std::abs(moment_generic(a, {0, 3, 0, 0})) > 1.0);
  }
  CHECK_THROWS_AS(moment_closed_form(model, 1.0, {1, 1, 0, 0}), DomainError);
}

TEST_CASE("closed form and state contraction agree") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> time(0.0, 30.0);
  const auto orders = orders_up_to(4);
  for (const auto& c : {make(1, 1, 5, 5), make(3, 1, 4, 6), make(2, 2, 5, 3), make(1, 3, 6, 2), make(4, 1, 2, 3)}) {
    const Model model(c);
    for (int i = 0; i < 5; ++i) {
      const double T = time(rng);
      const JointAmplitudes a = evolve(model, T);
      for (const auto& ord : orders) {
        const cplx g = moment_generic(a, ord), f = moment_closed_form(model, T, ord);
        CHECK(std::abs(g - f) <= 1e-9 * std::max(1.0, std::abs(g)));
      }
    }
  }
}

TEST_CASE("truncation padding overflow is reported") {
  const Model model(make(1, 1, 2, 2));
  CHECK_THROWS_AS(moment_generic(evolve(model, 1.0), {0, 9, 0, 0}), TruncationOverflow);
  CHECK_NOTHROW(moment_generic(evolve(model, 1.0), {0, 4, 0, 0}));
}

TEST_CASE("mean photon number and excitation conservation") {
  const Model model(make(1, 1, 5, 5));
  CHECK(mean_photon(model, 0.0, 1) == doctest::Approx(25.0).epsilon(1e-11));
  const Model vacuum(make(1, 1, 0, 0));
  for (double T : {0.2, 1.1, 3.0}) CHECK(mean_photon(vacuum, T, 1) == doctest::Approx(std::pow(std::sin(T), 2)));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> time(0.0, 30.0);
  for (const auto& c : {make(1, 1, 5, 5), make(3, 1, 5, 5), make(1, 1, 5, 5, 3, 3)}) {
    const Model m(c);
    for (int i = 0; i < 20; ++i) {
      const double T = time(rng), inv = atomic_inversion(m, T);
      CHECK(std::abs(mean_photon(m, T, 1) - m.initial_mean_photon(1) - c.k1 * (1 - inv) / 2) < 1e-9);
      CHECK(std::abs(mean_photon(m, T, 2) - m.initial_mean_photon(2) - c.k2 * (1 - inv) / 2) < 1e-9);
    }
  }
  CHECK_THROWS_AS(mean_photon(model, 0.0, 3), DomainError);
}

TEST_CASE("series evaluation") {
  const Model model(make(1, 1, 5, 5));
  const ScalarQuantity inv = [](const Model& m, double T) { return atomic_inversion(m, T); };
  CHECK(series(model, {}, inv, "inversion").values.empty());
  const std::vector<double> one{0.0};
  const TimeSeries single = series(model, one, inv, "inversion");
  REQUIRE(single.values.size() == 1);
  CHECK(single.values[0] == atomic_inversion(model, 0.0));
  const auto grid = uniform_grid(0.0, 25.0, 400);
  const TimeSeries a = series(model, grid, inv, "inversion", 1), b = series(model, grid, inv, "inversion", 4);
  CHECK(a.values == b.values);
  CHECK(a.cfg_hash == config_hash(model.config()));
  const std::vector<double> bad{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(series(model, bad, inv, "inversion"), DomainError);
}

TEST_CASE("uniform grid endpoints") {
  const auto g = uniform_grid(0.0, 25.0, 2000);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 25.0);
  CHECK(uniform_grid(1.0, 2.0, 0).empty());
}
