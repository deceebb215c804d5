#include "tjcm/squeezing.hpp"

#include <cmath>

namespace tjcm {

const char* family_name(SqueezingFamily f) {
  switch (f) {
    case SqueezingFamily::SingleMode1: return "single1";
    case SqueezingFamily::SingleMode2: return "single2";
    case SqueezingFamily::TwoMode: return "two";
    case SqueezingFamily::Sum: return "sum";
    case SqueezingFamily::Difference: return "difference";
  }
  return "?";
}

QuadratureReport single_mode_squeezing(const JointAmplitudes& amps, int mode) {
  if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
  const bool first = mode == 1;
  const cplx a = moment_generic(amps, first ? MomentOrder{0, 1, 0, 0} : MomentOrder{0, 0, 0, 1});
  const cplx a2 = moment_generic(amps, first ? MomentOrder{0, 2, 0, 0} : MomentOrder{0, 0, 0, 2});
  const double n = moment_generic(amps, first ? MomentOrder{1, 1, 0, 0} : MomentOrder{0, 0, 1, 1}).real();
  QuadratureReport r;
  r.T = amps.T;
  r.family = first ? SqueezingFamily::SingleMode1 : SqueezingFamily::SingleMode2;
  r.S = n + a2.real() - 2.0 * a.real() * a.real();
  r.Q = n - a2.real() - 2.0 * a.imag() * a.imag();
  return r;
}

QuadratureReport two_mode_squeezing(const JointAmplitudes& amps) {
  const cplx a1 = moment_generic(amps, {0, 1, 0, 0});
  const cplx a2 = moment_generic(amps, {0, 0, 0, 1});
  const cplx a1sq = moment_generic(amps, {0, 2, 0, 0});
  const cplx a2sq = moment_generic(amps, {0, 0, 0, 2});
  const double n1 = moment_generic(amps, {1, 1, 0, 0}).real();
  const double n2 = moment_generic(amps, {0, 0, 1, 1}).real();
  const cplx hop = moment_generic(amps, {0, 1, 1, 0});   // a2^dag a1
  const cplx pair = moment_generic(amps, {0, 1, 0, 1});  // a1 a2
  QuadratureReport r;
  r.T = amps.T;
  r.family = SqueezingFamily::TwoMode;
  r.S = (hop + pair).real() - 2.0 * a1.real() * a2.real() + (n1 + a1sq.real() - 2.0 * a1.real() * a1.real()) +
        (n2 + a2sq.real() - 2.0 * a2.real() * a2.real());
  r.Q = (hop - pair).real() - 2.0 * a1.imag() * a2.imag() + (n1 - a1sq.real() - 2.0 * a1.imag() * a1.imag()) +
        (n2 - a2sq.real() - 2.0 * a2.imag() * a2.imag());
  return r;
}

QuadratureReport sum_squeezing(const JointAmplitudes& amps) {
  const cplx quad = moment_generic(amps, {0, 2, 0, 2});
  const double n1n2 = moment_generic(amps, {1, 1, 1, 1}).real();
  const cplx pair = moment_generic(amps, {0, 1, 0, 1});
  QuadratureReport r;
  r.T = amps.T;
  r.family = SqueezingFamily::Sum;
  r.S = quad.real() + n1n2 - 2.0 * pair.real() * pair.real();
  r.Q = n1n2 - quad.real() - 2.0 * pair.imag() * pair.imag();
  return r;
}

void require_difference_symmetry(const ModelConfig& cfg) {
  if (cfg.alpha1 != cfg.alpha2 || cfg.l1 != cfg.l2)
    throw DomainError("difference squeezing needs identical initial photon statistics (alpha1 == alpha2, l1 == l2)");
}

QuadratureReport difference_squeezing(const JointAmplitudes& amps) {
  require_difference_symmetry(amps.cfg);
  const cplx cross = moment_generic(amps, {2, 0, 0, 2});  // a1^dag^2 a2^2
  const double n1n2 = moment_generic(amps, {1, 1, 1, 1}).real();
  const double n1 = moment_generic(amps, {1, 1, 0, 0}).real();
  const cplx hop = moment_generic(amps, {0, 1, 1, 0});  // a2^dag a1
  QuadratureReport r;
  r.T = amps.T;
  r.family = SqueezingFamily::Difference;
  r.S = cross.real() + n1n2 + n1 - 2.0 * hop.real() * hop.real();
  r.Q = n1n2 + n1 - cross.real() - 2.0 * hop.imag() * hop.imag();
  return r;
}

QuadratureReport squeezing(const Model& model, double T, SqueezingFamily family) {
  if (family == SqueezingFamily::Difference) require_difference_symmetry(model.config());
  const JointAmplitudes amps = evolve(model, T);
  switch (family) {
    case SqueezingFamily::SingleMode1: return single_mode_squeezing(amps, 1);
    case SqueezingFamily::SingleMode2: return single_mode_squeezing(amps, 2);
    case SqueezingFamily::TwoMode: return two_mode_squeezing(amps);
    case SqueezingFamily::Sum: return sum_squeezing(amps);
    case SqueezingFamily::Difference: return difference_squeezing(amps);
  }
  throw DomainError("unknown squeezing family");
}

std::array<bool, 2> natural_conditions_hold(const Model& model, std::span<const double> times) {
  std::array<bool, 2> ok{true, true};
  for (double T : times) {
    const JointAmplitudes amps = evolve(model, T);
    if (std::abs(moment_generic(amps, {0, 1, 0, 0})) >= kNaturalTolerance ||
        std::abs(moment_generic(amps, {0, 2, 0, 0})) >= kNaturalTolerance)
      ok[0] = false;
    if (std::abs(moment_generic(amps, {0, 0, 0, 1})) >= kNaturalTolerance ||
        std::abs(moment_generic(amps, {0, 0, 0, 2})) >= kNaturalTolerance)
      ok[1] = false;
  }
  return ok;
}

}  // namespace tjcm
