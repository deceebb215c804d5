#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tjcm/dynamics.hpp"

namespace tjcm {

struct RcpReport {
  std::vector<std::pair<double, double>> collapse_intervals;
  std::vector<double> revival_times;
  std::vector<double> revival_prominences;
  std::optional<double> period_estimate;
  // Lower peaks between consecutive primary revivals (this detector's own
  // definition, see RevivalOptions::secondary_fraction).
  std::vector<double> secondary_revival_times;
  TimeSeries envelope;
  double window = 0.0;
  double prominence = 0.0;
};

struct RevivalOptions {
  // Absolute prominence threshold; default 0.1 x value range.
  std::optional<double> prominence;
  // Envelope window; default max(fringe spacing, span / 100).
  std::optional<double> window;
  double collapse_fraction = 0.05;
  double min_collapse_windows = 2.0;
  double secondary_fraction = 0.3;
  int min_crossings = 4;
};

// Sliding max of |value - mean| over a centered window of the given width.
TimeSeries envelope(const TimeSeries& series, double window);

// Median distance between local maxima of the mean-centered series.
double estimate_fringe_spacing(const TimeSeries& series);
double default_window(const TimeSeries& series);

RcpReport detect_revivals(const TimeSeries& series, const RevivalOptions& opts = {});
RcpReport detect_revivals(const TimeSeries& series, double prominence);

// Fraction of a's revival times that have a partner in b within tol.
double align_revivals(const RcpReport& a, const RcpReport& b, double tol);

}  // namespace tjcm
