#pragma once

#include "tjcm/dynamics.hpp"

namespace tjcm {

enum class RescaledKind { V1, V1Prime, V2Prime, V3, V4, V5, DifferenceReadout };

const char* rescaled_name(RescaledKind kind);

// Factor applied to T before the underlying squeezing factor is evaluated.
double rescaled_time_scale(RescaledKind kind);

// Throws DomainError when cfg lies outside the factor's (k1,k2) / l domain.
void require_rescaled_domain(RescaledKind kind, const ModelConfig& cfg);

enum class V3Denominator { Corrected, AsPrinted };

double v1(const Model& model, double T);
double v1_prime(const Model& model, double T);
double v2_prime(const Model& model, double T);
double v3(const Model& model, double T, V3Denominator denom = V3Denominator::Corrected);
double v4(const Model& model, double T);
double v5(const Model& model, double T);
double difference_readout(const Model& model, double T);

double rescaled(const Model& model, double T, RescaledKind kind);

}  // namespace tjcm
