#include <doctest.h>

#include <cmath>
#include <random>

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

TEST_CASE("coherent inputs are unsqueezed at T = 0") {
  const Model model(make(3, 1, 5, 5));
  for (auto f : {SqueezingFamily::SingleMode1, SqueezingFamily::SingleMode2, SqueezingFamily::TwoMode,
                 SqueezingFamily::Sum}) {
    const QuadratureReport r = squeezing(model, 0.0, f);
    CHECK(std::abs(r.S) < 1e-12);
    CHECK(std::abs(r.Q) < 1e-12);
    CHECK(r.family == f);
  }
  const QuadratureReport d = squeezing(model, 0.0, SqueezingFamily::Difference);
  CHECK(d.S == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(d.Q == doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("three-photon inputs at T = 0") {
  const Model model(make(1, 1, 5, 5, 3, 3));
  const QuadratureReport s1 = squeezing(model, 0.0, SqueezingFamily::SingleMode1);
  CHECK(s1.S == doctest::Approx(75.0).epsilon(1e-12));
  CHECK(s1.Q == doctest::Approx(75.0).epsilon(1e-12));
  const QuadratureReport s2 = squeezing(model, 0.0, SqueezingFamily::TwoMode);
  CHECK(s2.S == doctest::Approx(150.0).epsilon(1e-12));
  CHECK(s2.Q == doctest::Approx(150.0).epsilon(1e-12));
}

TEST_CASE("uncertainty floor of single-mode factors") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> time(0.0, 25.0);
  for (const auto& c : {make(1, 1, 5, 5), make(3, 1, 5, 5), make(2, 2, 5, 5), make(1, 3, 2, 4), make(2, 1, 1, 1)}) {
    const Model model(c);
    for (int i = 0; i < 40; ++i) {
      const double T = time(rng);
      for (auto f : {SqueezingFamily::SingleMode1, SqueezingFamily::SingleMode2}) {
        const QuadratureReport r = squeezing(model, T, f);
        CHECK(r.S >= -0.5 - 1e-12);
        CHECK(r.Q >= -0.5 - 1e-12);
      }
    }
  }
}

TEST_CASE("natural conditions") {
  const auto samples = std::vector<double>{0.0, 0.3, 1.7, 4.4, 9.9};
  std::vector<double> fifty;
  for (int i = 0; i < 50; ++i) fifty.push_back(0.2 * i);
  CHECK(natural_conditions_hold(Model(make(1, 1, 5, 5, 3, 3)), fifty) == std::array<bool, 2>{true, true});
  const std::vector<double> zero{0.0};
  CHECK(natural_conditions_hold(Model(make(1, 1, 5, 5)), zero) == std::array<bool, 2>{false, false});
  CHECK(natural_conditions_hold(Model(make(1, 1, 5, 5, 4, 1)), samples) == std::array<bool, 2>{true, false});
}

TEST_CASE("natural-approach factors collapse to photon-number moments") {
  const Model model(make(1, 1, 5, 5, 3, 3));
  const double n1 = model.initial_mean_photon(1), n2 = model.initial_mean_photon(2);
  for (int i = 0; i <= 60; ++i) {
    const double T = 0.25 * i;
    const JointAmplitudes a = evolve(model, T);
    const double inv = atomic_inversion(model, T);
    const double m1 = moment_generic(a, {1, 1, 0, 0}).real(), m2 = moment_generic(a, {0, 0, 1, 1}).real();
    const QuadratureReport s1 = single_mode_squeezing(a, 1), s2 = single_mode_squeezing(a, 2);
    CHECK(std::abs(s1.S - m1) < 1e-9);
    CHECK(std::abs(s1.Q - m1) < 1e-9);
    CHECK(std::abs(inv - (2 * n1 + 1 - 2 * s1.S)) < 1e-9);
    CHECK(std::abs(inv - (2 * n2 + 1 - 2 * s2.S)) < 1e-9);
    const QuadratureReport two = two_mode_squeezing(a);
    CHECK(std::abs(two.S - (m1 + m2)) < 1e-9);
    CHECK(std::abs(two.Q - (m1 + m2)) < 1e-9);
    CHECK(std::abs(inv - (n1 + n2 + 1 - two.S)) < 1e-9);
    const QuadratureReport sum = sum_squeezing(a);
    const double n1n2 = moment_generic(a, {1, 1, 1, 1}).real();
    CHECK(std::abs(sum.S - n1n2) < 1e-9);
    CHECK(std::abs(sum.Q - n1n2) < 1e-9);
  }
}

TEST_CASE("difference squeezing needs matching inputs") {
  CHECK_THROWS_AS(squeezing(Model(make(3, 1, 5, 4)), 1.0, SqueezingFamily::Difference), DomainError);
  CHECK_THROWS_AS(squeezing(Model(make(3, 1, 5, 5, 1, 3)), 1.0, SqueezingFamily::Difference), DomainError);
  CHECK_NOTHROW(squeezing(Model(make(3, 1, 5, 5)), 1.0, SqueezingFamily::Difference));
}

TEST_CASE("family names") {
  CHECK(std::string(family_name(SqueezingFamily::Sum)) == "sum");
  CHECK(std::string(family_name(SqueezingFamily::SingleMode2)) == "single2");
}
