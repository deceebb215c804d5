#include "tjcm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace tjcm {

Model::Model(const ModelConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  cfg_.trunc = resolve_truncation(cfg_);
  pad1_ = truncation_pad(cfg_, 1);
  pad2_ = truncation_pad(cfg_, 2);
  rows_ = cfg_.trunc.n_max_1 + pad1_ + kGuardBand + 1;
  cols_ = cfg_.trunc.n_max_2 + pad2_ + kGuardBand + 1;
  c1_ = coherent_column(cfg_.alpha1, rows_);
  c2_ = coherent_column(cfg_.alpha2, cols_);
  lambda_.resize(static_cast<std::size_t>(rows_) * cols_);
  std::vector<double> r1(rows_), r2(cols_);
  for (int n = 0; n < rows_; ++n) r1[n] = sqrt_rising_product(double(cfg_.l1) * n, cfg_.k1);
  for (int m = 0; m < cols_; ++m) r2[m] = sqrt_rising_product(double(cfg_.l2) * m, cfg_.k2);
  for (int n = 0; n < rows_; ++n)
    for (int m = 0; m < cols_; ++m) lambda_[static_cast<std::size_t>(n) * cols_ + m] = r1[n] * r2[m];
  const JointAmplitudes initial = evolve(*this, 0.0);
  nbar1_ = moment_generic(initial, {1, 1, 0, 0}).real();
  nbar2_ = moment_generic(initial, {0, 0, 1, 1}).real();
}

double JointAmplitudes::norm() const {
  double s = 0.0;
  for (const cplx& a : plus_branch) s += std::norm(a);
  for (const cplx& a : minus_branch) s += std::norm(a);
  return s;
}

double JointAmplitudes::population_difference() const {
  double s = 0.0;
  for (std::size_t i = 0; i < plus_branch.size(); ++i) s += std::norm(plus_branch[i]) - std::norm(minus_branch[i]);
  return s;
}

JointAmplitudes evolve(const Model& model, double T) {
  JointAmplitudes a;
  a.T = T;
  a.cfg = model.config();
  a.rows = model.rows();
  a.cols = model.cols();
  a.pad1 = model.pad(1);
  a.pad2 = model.pad(2);
  const std::size_t size = static_cast<std::size_t>(a.rows) * a.cols;
  a.plus_branch.resize(size);
  a.minus_branch.resize(size);
  for (int n = 0; n < a.rows; ++n) {
    for (int m = 0; m < a.cols; ++m) {
      const double c = model.weight(n, m);
      const double phase = T * model.rabi(n, m);
      const std::size_t i = static_cast<std::size_t>(n) * a.cols + m;
      a.plus_branch[i] = cplx(c * std::cos(phase), 0.0);
      a.minus_branch[i] = cplx(0.0, -c * std::sin(phase));
    }
  }
  return a;
}

double atomic_inversion(const Model& model, double T) {
  double s = 0.0;
  for (int n = 0; n < model.rows(); ++n) {
    for (int m = 0; m < model.cols(); ++m) {
      const double c = model.weight(n, m);
      s += c * c * std::cos(2.0 * T * model.rabi(n, m));
    }
  }
  return s;
}

namespace {

// Matrix elements <p| a^dag^s_bra a^s_ket |q> along one mode, indexed by the
// ket grid index. q = l*index + offset, p = q - s_ket + s_bra.
std::vector<double> ladder_elements(int size, int l, int offset, int s_bra, int s_ket) {
  std::vector<double> e(size);
  for (int i = 0; i < size; ++i) {
    const std::int64_t q = std::int64_t(l) * i + offset;
    const std::int64_t p = q - s_ket + s_bra;
    e[i] = q < s_ket ? 0.0 : sqrt_falling_product(q, s_ket) * sqrt_falling_product(p, s_bra);
  }
  return e;
}

cplx contract_branch(const std::vector<cplx>& amp, int rows, int cols, const std::vector<double>& e1,
                     const std::vector<double>& e2, int sh1, int sh2) {
  long double re = 0.0L, im = 0.0L;
  const int n_lo = std::max(0, -sh1), n_hi = std::min(rows, rows - sh1);
  const int m_lo = std::max(0, -sh2), m_hi = std::min(cols, cols - sh2);
  for (int n = n_lo; n < n_hi; ++n) {
    if (e1[n] == 0.0) continue;
    const cplx* ket = &amp[static_cast<std::size_t>(n) * cols];
    const cplx* bra = &amp[static_cast<std::size_t>(n + sh1) * cols + sh2];
    long double row_re = 0.0L, row_im = 0.0L;
    for (int m = m_lo; m < m_hi; ++m) {
      const cplx t = std::conj(bra[m]) * ket[m] * e2[m];
      row_re += t.real();
      row_im += t.imag();
    }
    re += row_re * e1[n];
    im += row_im * e1[n];
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace

cplx moment_generic(const JointAmplitudes& amps, const MomentOrder& ord) {
  if (ord.s1 < 0 || ord.s2 < 0 || ord.s3 < 0 || ord.s4 < 0) throw DomainError("moment order must be >= 0");
  const ModelConfig& cfg = amps.cfg;
  const int d1 = ord.s1 - ord.s2, d2 = ord.s3 - ord.s4;
  if (d1 % cfg.l1 != 0 || d2 % cfg.l2 != 0) return 0.0;
  const int sh1 = d1 / cfg.l1, sh2 = d2 / cfg.l2;
  if (std::abs(sh1) > amps.pad1 || std::abs(sh2) > amps.pad2)
    throw TruncationOverflow("moment shift exceeds the truncation padding");
  cplx s = 0.0;
  for (int branch = 0; branch < 2; ++branch) {
    const int off1 = branch == 0 ? 0 : cfg.k1;
    const int off2 = branch == 0 ? 0 : cfg.k2;
    const auto e1 = ladder_elements(amps.rows, cfg.l1, off1, ord.s1, ord.s2);
    const auto e2 = ladder_elements(amps.cols, cfg.l2, off2, ord.s3, ord.s4);
    s += contract_branch(branch == 0 ? amps.plus_branch : amps.minus_branch, amps.rows, amps.cols, e1, e2, sh1,
                         sh2);
  }
  return s;
}

cplx moment_closed_form(const Model& model, double T, const MomentOrder& ord) {
  const ModelConfig& cfg = model.config();
  if (cfg.l1 != 1 || cfg.l2 != 1) throw DomainError("moment_closed_form requires l1 == l2 == 1");
  if (ord.s1 < 0 || ord.s2 < 0 || ord.s3 < 0 || ord.s4 < 0) throw DomainError("moment order must be >= 0");
  const int rows = model.rows(), cols = model.cols();
  // Lower limits reach below zero so that ground-branch terms with
  // n + k1 >= 0 are kept; excited-branch terms vanish there (1/(-j)! = 0).
  const int n_lo = -std::min(ord.s1, ord.s2), n_hi = rows - std::max(ord.s1, ord.s2);
  const int m_lo = -std::min(ord.s3, ord.s4), m_hi = cols - std::max(ord.s3, ord.s4);
  double s = 0.0;
  for (int n = n_lo; n < n_hi; ++n) {
    const int na = n + ord.s1, nb = n + ord.s2;
    const double w1 = model.coefficient1(na) * model.coefficient1(nb);
    const double f1p = n >= 0 ? sqrt_rising_product(n, ord.s1) * sqrt_rising_product(n, ord.s2) : 0.0;
    const double f1m = n + cfg.k1 >= 0
                           ? sqrt_rising_product(n + cfg.k1, ord.s1) * sqrt_rising_product(n + cfg.k1, ord.s2)
                           : 0.0;
    for (int m = m_lo; m < m_hi; ++m) {
      const int ma = m + ord.s3, mb = m + ord.s4;
      const double w = w1 * model.coefficient2(ma) * model.coefficient2(mb);
      const double f2p = m >= 0 ? sqrt_rising_product(m, ord.s3) * sqrt_rising_product(m, ord.s4) : 0.0;
      const double f2m = m + cfg.k2 >= 0
                             ? sqrt_rising_product(m + cfg.k2, ord.s3) * sqrt_rising_product(m + cfg.k2, ord.s4)
                             : 0.0;
      const double pa = T * model.rabi(na, ma), pb = T * model.rabi(nb, mb);
      s += w * (std::cos(pa) * std::cos(pb) * f1p * f2p + std::sin(pa) * std::sin(pb) * f1m * f2m);
    }
  }
  return s;
}

double mean_photon(const Model& model, double T, int mode) {
  if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
  const MomentOrder ord = mode == 1 ? MomentOrder{1, 1, 0, 0} : MomentOrder{0, 0, 1, 1};
  return moment_generic(evolve(model, T), ord).real();
}

TimeSeries series(const Model& model, std::span<const double> grid, const ScalarQuantity& fn, std::string label,
                  unsigned threads) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("series: grid must be strictly increasing");
  TimeSeries out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.resize(grid.size());
  out.label = std::move(label);
  out.cfg_hash = config_hash(model.config());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, grid.size() / 16));
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = fn(model, grid[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < grid.size(); i += threads) out.values[i] = fn(model, grid[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<double> uniform_grid(double t_min, double t_max, int points) {
  if (points < 0) throw DomainError("uniform_grid: points must be >= 0");
  std::vector<double> g(points);
  if (points == 1) g[0] = t_min;
  for (int i = 0; i < points && points > 1; ++i) g[i] = t_min + (t_max - t_min) * i / (points - 1);
  return g;
}

}  // namespace tjcm
