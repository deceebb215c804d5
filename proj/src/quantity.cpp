#include "tjcm/quantity.hpp"

#include <cctype>
#include <regex>

#include "tjcm/harmonic.hpp"
#include "tjcm/rescaled.hpp"
#include "tjcm/squeezing.hpp"

namespace tjcm {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Quantity parse_quantity(const std::string& selector, const std::string& field) {
  const std::string s = strip(selector);
  std::smatch m;
  if (s == "inversion") return {s, [](const Model& md, double T) { return atomic_inversion(md, T); }};
  if (std::regex_match(s, m, std::regex(R"(mean_photon\(([12])\))"))) {
    const int mode = std::stoi(m[1]);
    return {s, [mode](const Model& md, double T) { return mean_photon(md, T, mode); }};
  }
  if (std::regex_match(s, m, std::regex(R"(moment\((\d{1,2}),(\d{1,2}),(\d{1,2}),(\d{1,2})\)\.(re|im))"))) {
    const MomentOrder ord{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
    const bool re = m[5] == "re";
    const std::string label = "moment(" + std::to_string(ord.s1) + "," + std::to_string(ord.s2) + "," +
                              std::to_string(ord.s3) + "," + std::to_string(ord.s4) + ")." + std::string(m[5]);
    return {label, [ord, re](const Model& md, double T) {
              const cplx v = moment_generic(evolve(md, T), ord);
              return re ? v.real() : v.imag();
            }};
  }
  if (std::regex_match(s, m, std::regex(R"(squeezing\((single1|single2|two|sum|difference)\)\.(S|Q))"))) {
    const std::string f = m[1];
    const SqueezingFamily family = f == "single1"  ? SqueezingFamily::SingleMode1
                                   : f == "single2" ? SqueezingFamily::SingleMode2
                                   : f == "two"     ? SqueezingFamily::TwoMode
                                   : f == "sum"     ? SqueezingFamily::Sum
                                                    : SqueezingFamily::Difference;
    const bool x = m[2] == "S";
    return {s, [family, x](const Model& md, double T) {
              const QuadratureReport r = squeezing(md, T, family);
              return x ? r.S : r.Q;
            }};
  }
  if (std::regex_match(s, m, std::regex(R"(rescaled\((V1|V1prime|V2prime|V3|V4|V5|difference_readout)\))"))) {
    const std::string k = m[1];
    const RescaledKind kind = k == "V1"        ? RescaledKind::V1
                              : k == "V1prime" ? RescaledKind::V1Prime
                              : k == "V2prime" ? RescaledKind::V2Prime
                              : k == "V3"      ? RescaledKind::V3
                              : k == "V4"      ? RescaledKind::V4
                              : k == "V5"      ? RescaledKind::V5
                                               : RescaledKind::DifferenceReadout;
    return {s, [kind](const Model& md, double T) { return rescaled(md, T, kind); }};
  }
  if (s == "harmonic(a1sq)") return {s, [](const Model& md, double T) { return harmonic_moment_a1sq(md, T); }};
  if (s == "harmonic(a1sq_a2sq)")
    return {s, [](const Model& md, double T) { return harmonic_moment_a1sq_a2sq(md, T); }};
  throw ConfigError(field, "unknown quantity selector '" + selector + "'");
}

void check_quantity_domain(const Quantity& q, const ModelConfig& cfg) {
  const std::string& s = q.label;
  std::smatch m;
  if (std::regex_match(s, m, std::regex(R"(rescaled\((\w+)\))"))) {
    const std::string k = m[1];
    for (RescaledKind kind : {RescaledKind::V1, RescaledKind::V1Prime, RescaledKind::V2Prime, RescaledKind::V3,
                              RescaledKind::V4, RescaledKind::V5, RescaledKind::DifferenceReadout})
      if (k == rescaled_name(kind)) require_rescaled_domain(kind, cfg);
  } else if (s.rfind("squeezing(difference)", 0) == 0) {
    require_difference_symmetry(cfg);
  } else if (s.rfind("harmonic(", 0) == 0) {
    if (cfg.l1 != 1 || cfg.l2 != 1) throw DomainError("harmonic approximations require l1 == l2 == 1");
  } else if (std::regex_match(s, m, std::regex(R"(moment\((\d+),(\d+),(\d+),(\d+)\).*)"))) {
    const int sh1 = std::abs(std::stoi(m[1]) - std::stoi(m[2])) / cfg.l1;
    const int sh2 = std::abs(std::stoi(m[3]) - std::stoi(m[4])) / cfg.l2;
    if (sh1 > truncation_pad(cfg, 1) || sh2 > truncation_pad(cfg, 2))
      throw TruncationOverflow("moment shift exceeds the truncation padding");
  }
}

std::string label_slug(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += c;
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

}  // namespace tjcm
