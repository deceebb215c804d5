#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tjcm/numerics.hpp"

namespace tjcm {

using cplx = std::complex<double>;

struct MomentOrder {
  int s1 = 0;  // power of a1^dagger
  int s2 = 0;  // power of a1
  int s3 = 0;  // power of a2^dagger
  int s4 = 0;  // power of a2

  int total() const { return s1 + s2 + s3 + s4; }
  bool operator==(const MomentOrder&) const = default;
};

// Precomputed coefficients and Rabi frequencies over the padded grid.
// Immutable after construction and safe to share between threads.
class Model {
 public:
  explicit Model(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  const TruncationSpec& truncation() const { return cfg_.trunc; }
  int pad(int mode) const { return mode == 1 ? pad1_ : pad2_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double coefficient1(int n) const { return c1_[n]; }
  double coefficient2(int m) const { return c2_[m]; }
  double weight(int n, int m) const { return c1_[n] * c2_[m]; }
  double rabi(int n, int m) const { return lambda_[static_cast<std::size_t>(n) * cols_ + m]; }

  // <n_j(0)> summed over the truncated grid.
  double initial_mean_photon(int mode) const { return mode == 1 ? nbar1_ : nbar2_; }

 private:
  ModelConfig cfg_;
  int pad1_, pad2_, rows_, cols_;
  std::vector<double> c1_, c2_, lambda_;
  double nbar1_ = 0.0, nbar2_ = 0.0;
};

struct JointAmplitudes {
  double T = 0.0;
  ModelConfig cfg;
  int rows = 0;
  int cols = 0;
  int pad1 = 0;
  int pad2 = 0;
  // Atom excited, Fock pair (l1 n, l2 m).
  std::vector<cplx> plus_branch;
  // Atom in ground state, Fock pair (l1 n + k1, l2 m + k2).
  std::vector<cplx> minus_branch;

  const cplx& plus(int n, int m) const { return plus_branch[static_cast<std::size_t>(n) * cols + m]; }
  const cplx& minus(int n, int m) const { return minus_branch[static_cast<std::size_t>(n) * cols + m]; }
  double norm() const;
  double population_difference() const;
};

JointAmplitudes evolve(const Model& model, double T);

double atomic_inversion(const Model& model, double T);

cplx moment_generic(const JointAmplitudes& amps, const MomentOrder& ord);

// Double-sum closed form, only for l1 == l2 == 1.
cplx moment_closed_form(const Model& model, double T, const MomentOrder& ord);

double mean_photon(const Model& model, double T, int mode);

struct TimeSeries {
  std::vector<double> grid;
  std::vector<double> values;
  std::string label;
  std::string cfg_hash;
};

using ScalarQuantity = std::function<double(const Model&, double)>;

// Evaluates fn on every grid point, split across worker threads.
// threads == 0 picks the hardware concurrency.
TimeSeries series(const Model& model, std::span<const double> grid, const ScalarQuantity& fn,
                  std::string label, unsigned threads = 0);

std::vector<double> uniform_grid(double t_min, double t_max, int points);

}  // namespace tjcm
