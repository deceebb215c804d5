#pragma once

#include <array>
#include <span>

#include "tjcm/dynamics.hpp"

namespace tjcm {

enum class SqueezingFamily { SingleMode1, SingleMode2, TwoMode, Sum, Difference };

const char* family_name(SqueezingFamily f);

struct QuadratureReport {
  double S = 0.0;  // X quadrature
  double Q = 0.0;  // Y quadrature
  double T = 0.0;
  SqueezingFamily family = SqueezingFamily::SingleMode1;
};

QuadratureReport single_mode_squeezing(const JointAmplitudes& amps, int mode);
QuadratureReport two_mode_squeezing(const JointAmplitudes& amps);
QuadratureReport sum_squeezing(const JointAmplitudes& amps);
// Requires alpha1 == alpha2 and l1 == l2.
QuadratureReport difference_squeezing(const JointAmplitudes& amps);

QuadratureReport squeezing(const Model& model, double T, SqueezingFamily family);

void require_difference_symmetry(const ModelConfig& cfg);

inline constexpr double kNaturalTolerance = 1e-10;

// Per mode: |<a_j>| and |<a_j^2>| stay below kNaturalTolerance at every sample time.
std::array<bool, 2> natural_conditions_hold(const Model& model, std::span<const double> times);

}  // namespace tjcm
