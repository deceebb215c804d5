#pragma once

#include <string>

#include "tjcm/dynamics.hpp"
#include "tjcm/rcp.hpp"

namespace tjcm {

// Shortest text that parses back to the same double.
std::string format_double(double x);

// Header "T,<label>", then one row per grid point.
std::string render_csv(const TimeSeries& s);
void write_csv(const TimeSeries& s, const std::string& path);
TimeSeries read_csv(const std::string& path);

std::string render_svg(const TimeSeries& s);
void write_svg(const TimeSeries& s, const std::string& path);

// YAML text with collapse_intervals, revival_times, period_estimate,
// secondary_revival_times and the detector settings.
std::string render_report(const RcpReport& r, const std::string& label);
void write_text(const std::string& text, const std::string& path);

}  // namespace tjcm
