#include "tjcm/rescaled.hpp"

#include <string>

#include "tjcm/squeezing.hpp"

namespace tjcm {

const char* rescaled_name(RescaledKind kind) {
  switch (kind) {
    case RescaledKind::V1: return "V1";
    case RescaledKind::V1Prime: return "V1prime";
    case RescaledKind::V2Prime: return "V2prime";
    case RescaledKind::V3: return "V3";
    case RescaledKind::V4: return "V4";
    case RescaledKind::V5: return "V5";
    case RescaledKind::DifferenceReadout: return "difference_readout";
  }
  return "?";
}

double rescaled_time_scale(RescaledKind kind) {
  switch (kind) {
    case RescaledKind::V1: return 2.0 / 3.0;
    case RescaledKind::V5: return 0.5;
    default: return 1.0;
  }
}

namespace {

bool is_k(const ModelConfig& c, int k1, int k2) { return c.k1 == k1 && c.k2 == k2; }
bool coherent(const ModelConfig& c) { return c.l1 == 1 && c.l2 == 1; }
bool natural(const ModelConfig& c) { return c.l1 >= 3 && c.l2 >= 3; }

[[noreturn]] void reject(RescaledKind kind, const char* need) {
  throw DomainError(std::string(rescaled_name(kind)) + " requires " + need);
}

}  // namespace

void require_rescaled_domain(RescaledKind kind, const ModelConfig& c) {
  switch (kind) {
    case RescaledKind::V1:
      if (!is_k(c, 3, 1) || !coherent(c)) reject(kind, "(k1,k2) = (3,1) and l1 = l2 = 1");
      return;
    case RescaledKind::V1Prime:
    case RescaledKind::V2Prime:
      if (!is_k(c, 2, 2) || !coherent(c)) reject(kind, "(k1,k2) = (2,2) and l1 = l2 = 1");
      return;
    case RescaledKind::V3:
      if (!is_k(c, 1, 1) || !natural(c)) reject(kind, "(k1,k2) = (1,1) and l1, l2 >= 3");
      return;
    case RescaledKind::DifferenceReadout:
      if (!is_k(c, 1, 1) || !natural(c)) reject(kind, "(k1,k2) = (1,1) and l1, l2 >= 3");
      require_difference_symmetry(c);
      return;
    case RescaledKind::V4:
      if (!(is_k(c, 3, 1) || is_k(c, 2, 2)) || !coherent(c)) reject(kind, "(k1,k2) in {(3,1),(2,2)} and l = 1");
      return;
    case RescaledKind::V5:
      if (!is_k(c, 3, 1) || !coherent(c)) reject(kind, "(k1,k2) = (3,1) and l1 = l2 = 1");
      require_difference_symmetry(c);
      return;
  }
}

double v1(const Model& model, double T) {
  require_rescaled_domain(RescaledKind::V1, model.config());
  const double n1 = model.initial_mean_photon(1);
  return (n1 - squeezing(model, T * 2.0 / 3.0, SqueezingFamily::SingleMode1).Q) / n1;
}

double v1_prime(const Model& model, double T) {
  require_rescaled_domain(RescaledKind::V1Prime, model.config());
  const double n1 = model.initial_mean_photon(1);
  return (n1 - squeezing(model, T, SqueezingFamily::SingleMode1).Q) / n1;
}

double v2_prime(const Model& model, double T) {
  require_rescaled_domain(RescaledKind::V2Prime, model.config());
  const double n = model.initial_mean_photon(1) + model.initial_mean_photon(2);
  return (n - squeezing(model, T, SqueezingFamily::TwoMode).Q) / n;
}

double v3(const Model& model, double T, V3Denominator denom) {
  require_rescaled_domain(RescaledKind::V3, model.config());
  const double n1 = model.initial_mean_photon(1), n2 = model.initial_mean_photon(2);
  const double s3 = squeezing(model, T, SqueezingFamily::Sum).S;
  const double d = denom == V3Denominator::Corrected ? n1 + n2 + 1.0 : n1 + n1 + 1.0;
  return (2.0 * n1 * n2 + n1 + n2 + 1.0 - 2.0 * s3) / d;
}

double v4(const Model& model, double T) {
  require_rescaled_domain(RescaledKind::V4, model.config());
  const double nn = model.initial_mean_photon(1) * model.initial_mean_photon(2);
  return (nn - squeezing(model, T, SqueezingFamily::Sum).Q) / nn;
}

double v5(const Model& model, double T) {
  require_rescaled_domain(RescaledKind::V5, model.config());
  const double n1 = model.initial_mean_photon(1);
  return (n1 * (n1 + 1.0) - squeezing(model, T * 0.5, SqueezingFamily::Difference).Q) / (n1 * n1);
}

double difference_readout(const Model& model, double T) {
  require_rescaled_domain(RescaledKind::DifferenceReadout, model.config());
  const double n1 = model.initial_mean_photon(1);
  return ((n1 + 1.0) * (n1 + 1.0) - squeezing(model, T, SqueezingFamily::Difference).Q) / (n1 + 1.0);
}

double rescaled(const Model& model, double T, RescaledKind kind) {
  switch (kind) {
    case RescaledKind::V1: return v1(model, T);
    case RescaledKind::V1Prime: return v1_prime(model, T);
    case RescaledKind::V2Prime: return v2_prime(model, T);
    case RescaledKind::V3: return v3(model, T);
    case RescaledKind::V4: return v4(model, T);
    case RescaledKind::V5: return v5(model, T);
    case RescaledKind::DifferenceReadout: return difference_readout(model, T);
  }
  throw DomainError("unknown rescaled factor");
}

}  // namespace tjcm
