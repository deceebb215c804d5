#pragma once

#include <string>

#include "tjcm/dynamics.hpp"

namespace tjcm {

// Selector grammar (whitespace ignored):
//   inversion
//   mean_photon(1|2)
//   moment(s1,s2,s3,s4).re|.im
//   squeezing(single1|single2|two|sum|difference).S|.Q
//   rescaled(V1|V1prime|V2prime|V3|V4|V5|difference_readout)
//   harmonic(a1sq|a1sq_a2sq)
struct Quantity {
  std::string label;  // canonical selector text
  ScalarQuantity eval;
};

// Throws ConfigError(field, reason) on a malformed selector.
Quantity parse_quantity(const std::string& selector, const std::string& field = "quantity");

// Throws DomainError when the quantity is undefined for cfg.
void check_quantity_domain(const Quantity& q, const ModelConfig& cfg);

// File-name friendly form of a label.
std::string label_slug(const std::string& label);

}  // namespace tjcm
