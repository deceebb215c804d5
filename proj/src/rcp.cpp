#include "tjcm/rcp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace tjcm {

namespace {

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean_spacing(const std::vector<double>& t) { return (t.back() - t.front()) / double(t.size() - 1); }

void check_series(const TimeSeries& s) {
  if (s.grid.size() != s.values.size()) throw DomainError("series grid and values differ in length");
  for (std::size_t i = 1; i < s.grid.size(); ++i)
    if (!(s.grid[i] > s.grid[i - 1])) throw DomainError("series grid must be strictly increasing");
}

std::vector<std::size_t> local_maxima(const std::vector<double>& e) {
  std::vector<std::size_t> out;
  const std::size_t n = e.size();
  std::size_t i = 1;
  while (i + 1 < n) {
    if (e[i] > e[i - 1]) {
      std::size_t j = i;
      while (j + 1 < n && e[j + 1] == e[i]) ++j;
      if (j + 1 < n && e[j + 1] < e[i]) out.push_back((i + j) / 2);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

double peak_prominence(const std::vector<double>& e, std::size_t p) {
  const double h = e[p];
  double left = h, right = h;
  for (std::size_t i = p; i-- > 0;) {
    if (e[i] > h) break;
    left = std::min(left, e[i]);
  }
  for (std::size_t i = p + 1; i < e.size(); ++i) {
    if (e[i] > h) break;
    right = std::min(right, e[i]);
  }
  return h - std::max(left, right);
}

struct Peak {
  double center;
  double prominence;
  int crossings;
};

Peak describe_peak(const std::vector<double>& t, const std::vector<double>& e, const std::vector<int>& sign,
                   std::size_t p) {
  const double prom = peak_prominence(e, p);
  const double level = e[p] - 0.5 * prom;
  std::size_t a = p, b = p;
  while (a > 0 && e[a] > level) --a;
  while (b + 1 < e.size() && e[b] > level) ++b;
  const double tl = e[a] <= level ? t[a] + (level - e[a]) / (e[a + 1] - e[a]) * (t[a + 1] - t[a]) : t[a];
  const double tr = e[b] <= level ? t[b - 1] + (e[b - 1] - level) / (e[b - 1] - e[b]) * (t[b] - t[b - 1]) : t[b];
  int crossings = 0;
  for (std::size_t i = a; i < b; ++i)
    if (sign[i] * sign[i + 1] < 0) ++crossings;
  return {0.5 * (tl + tr), prom, crossings};
}

}  // namespace

TimeSeries envelope(const TimeSeries& series, double window) {
  check_series(series);
  TimeSeries out;
  out.grid = series.grid;
  out.label = "envelope(" + series.label + ")";
  out.cfg_hash = series.cfg_hash;
  const std::size_t n = series.values.size();
  out.values.resize(n);
  if (n == 0) return out;
  if (n > 1 && !(window > mean_spacing(series.grid))) throw DomainError("envelope window must exceed the grid spacing");
  const double base = mean_of(series.values);
  std::vector<double> dev(n);
  for (std::size_t i = 0; i < n; ++i) dev[i] = std::abs(series.values[i] - base);
  if (n == 1) {
    out.values[0] = dev[0];
    return out;
  }
  const std::size_t h = std::max<std::size_t>(1, std::size_t(std::floor(window / (2.0 * mean_spacing(series.grid)) + 1e-9)));
  // Monotone deque over indices [i - h, i + h].
  std::deque<std::size_t> q;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = std::min(n - 1, i + h);
    for (; next <= hi; ++next) {
      while (!q.empty() && dev[q.back()] <= dev[next]) q.pop_back();
      q.push_back(next);
    }
    while (q.front() + h < i) q.pop_front();
    out.values[i] = dev[q.front()];
  }
  return out;
}

double estimate_fringe_spacing(const TimeSeries& series) {
  check_series(series);
  const auto& v = series.values;
  const auto& t = series.grid;
  if (v.size() < 3) return v.empty() ? 0.0 : t.back() - t.front();
  const double base = mean_of(v);
  std::vector<double> times;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] - base > v[i - 1] - base && v[i] - base >= v[i + 1] - base) times.push_back(t[i]);
  if (times.size() < 2) return t.back() - t.front();
  std::vector<double> gaps;
  for (std::size_t i = 1; i < times.size(); ++i) gaps.push_back(times[i] - times[i - 1]);
  return median_of(gaps);
}

double default_window(const TimeSeries& series) {
  check_series(series);
  if (series.grid.size() < 2) return 0.0;
  return std::max(estimate_fringe_spacing(series), 0.01 * (series.grid.back() - series.grid.front()));
}

RcpReport detect_revivals(const TimeSeries& series, const RevivalOptions& opts) {
  check_series(series);
  RcpReport r;
  const auto& t = series.grid;
  const auto& v = series.values;
  if (opts.prominence && !(*opts.prominence > 0.0)) throw DomainError("prominence must be > 0");
  if (v.size() < 3) {
    r.envelope.grid = t;
    r.envelope.values.assign(v.size(), 0.0);
    r.envelope.label = "envelope(" + series.label + ")";
    r.envelope.cfg_hash = series.cfg_hash;
    return r;
  }
  r.window = opts.window ? *opts.window : default_window(series);
  r.envelope = envelope(series, r.window);
  const auto& e = r.envelope.values;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  r.prominence = opts.prominence ? *opts.prominence : 0.1 * (*hi - *lo);
  if (!(r.prominence > 0.0)) return r;  // constant series

  const double collapse_level = opts.collapse_fraction * e[0];
  for (std::size_t i = 0; i < e.size();) {
    if (e[i] < collapse_level) {
      std::size_t j = i;
      while (j + 1 < e.size() && e[j + 1] < collapse_level) ++j;
      if (t[j] - t[i] >= opts.min_collapse_windows * r.window) r.collapse_intervals.emplace_back(t[i], t[j]);
      i = j + 1;
    } else {
      ++i;
    }
  }

  const double base = mean_of(v);
  std::vector<int> sign(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sign[i] = (v[i] > base) - (v[i] < base);
  std::vector<Peak> peaks;
  for (std::size_t p : local_maxima(e)) peaks.push_back(describe_peak(t, e, sign, p));

  const double first_collapse =
      r.collapse_intervals.empty() ? INFINITY : r.collapse_intervals.front().first;
  std::vector<Peak> primary;
  for (const Peak& p : peaks)
    if (p.prominence >= r.prominence && p.center > first_collapse && p.crossings >= opts.min_crossings)
      primary.push_back(p);
  for (const Peak& p : primary) {
    r.revival_times.push_back(p.center);
    r.revival_prominences.push_back(p.prominence);
  }
  if (r.revival_times.size() >= 3) {
    std::vector<double> gaps;
    for (std::size_t i = 1; i < r.revival_times.size(); ++i) gaps.push_back(r.revival_times[i] - r.revival_times[i - 1]);
    r.period_estimate = median_of(gaps);
  }
  for (std::size_t i = 1; i < primary.size(); ++i) {
    const double floor = opts.secondary_fraction * std::min(primary[i - 1].prominence, primary[i].prominence);
    for (const Peak& p : peaks)
      if (p.center > primary[i - 1].center && p.center < primary[i].center && p.prominence < r.prominence &&
          p.prominence >= floor && p.crossings >= opts.min_crossings)
        r.secondary_revival_times.push_back(p.center);
  }
  return r;
}

RcpReport detect_revivals(const TimeSeries& series, double prominence) {
  RevivalOptions opts;
  opts.prominence = prominence;
  return detect_revivals(series, opts);
}

double align_revivals(const RcpReport& a, const RcpReport& b, double tol) {
  if (a.revival_times.empty() || b.revival_times.empty())
    throw DomainError("align_revivals needs reports with at least one revival each");
  if (!(tol >= 0.0)) throw DomainError("tolerance must be >= 0");
  std::size_t hits = 0;
  for (double ta : a.revival_times) {
    const auto it = std::lower_bound(b.revival_times.begin(), b.revival_times.end(), ta - tol);
    if (it != b.revival_times.end() && *it <= ta + tol) ++hits;
  }
  return double(hits) / double(a.revival_times.size());
}

}  // namespace tjcm
