#include "tjcm/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tjcm {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string render_csv(const TimeSeries& s) {
  std::string out = "T," + s.label + "\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    out += format_double(s.grid[i]);
    out += ',';
    out += format_double(s.values[i]);
    out += '\n';
  }
  return out;
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error("write failed for '" + path + "'");
}

void write_csv(const TimeSeries& s, const std::string& path) { write_text(render_csv(s), path); }

TimeSeries read_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  TimeSeries s;
  std::string line;
  if (!std::getline(f, line)) throw Error(path + ": empty file");
  const auto comma = line.find(',');
  if (comma == std::string::npos || line.substr(0, comma) != "T") throw Error(path + ": header must be T,<label>");
  s.label = line.substr(comma + 1);
  std::size_t row = 1;
  while (std::getline(f, line)) {
    ++row;
    if (line.empty()) continue;
    const auto c = line.find(',');
    double t = 0.0, v = 0.0;
    const char* end = line.data() + line.size();
    if (c == std::string::npos || std::from_chars(line.data(), line.data() + c, t).ec != std::errc() ||
        std::from_chars(line.data() + c + 1, end, v).ec != std::errc())
      throw Error(path + ":" + std::to_string(row) + ": expected two numbers");
    s.grid.push_back(t);
    s.values.push_back(v);
  }
  return s;
}

std::string render_svg(const TimeSeries& s) {
  const double w = 800, h = 300, margin = 40;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (s.grid.size() >= 2) {
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    const double vmin = *lo, vmax = *hi > *lo ? *hi : *lo + 1.0;
    const double t0 = s.grid.front(), t1 = s.grid.back();
    auto x = [&](double t) { return margin + (t - t0) / (t1 - t0) * (w - 2 * margin); };
    auto y = [&](double v) { return h - margin - (v - vmin) / (vmax - vmin) * (h - 2 * margin); };
    o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.6\" points=\"";
    char buf[64];
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x(s.grid[i]), y(s.values[i]));
      o << buf;
    }
    o << "\"/>\n";
    o << "<line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\"" << w - margin << "\" y2=\"" << h - margin
      << "\" stroke=\"gray\"/>\n";
    o << "<text x=\"" << margin << "\" y=\"" << h - 12 << "\" font-size=\"11\">T = " << format_double(t0) << " .. "
      << format_double(t1) << "</text>\n";
    o << "<text x=\"" << margin << "\" y=\"20\" font-size=\"11\">" << s.label << "  [" << format_double(vmin)
      << ", " << format_double(vmax) << "]</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void write_svg(const TimeSeries& s, const std::string& path) { write_text(render_svg(s), path); }

namespace {

std::string list(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_double(v[i]);
  return out + "]";
}

}  // namespace

std::string render_report(const RcpReport& r, const std::string& label) {
  std::string out;
  out += "quantity: \"" + label + "\"\n";
  out += "window: " + format_double(r.window) + "\n";
  out += "prominence: " + format_double(r.prominence) + "\n";
  out += "collapse_intervals: [";
  for (std::size_t i = 0; i < r.collapse_intervals.size(); ++i)
    out += (i ? ", [" : "[") + format_double(r.collapse_intervals[i].first) + ", " +
           format_double(r.collapse_intervals[i].second) + "]";
  out += "]\n";
  out += "revival_times: " + list(r.revival_times) + "\n";
  out += "period_estimate: " + (r.period_estimate ? format_double(*r.period_estimate) : std::string("null")) + "\n";
  out += "secondary_revival_times: " + list(r.secondary_revival_times) + "\n";
  out += "secondary_revival_definition: \"envelope peaks between consecutive revivals, below the prominence "
         "threshold and above 0.3 of the lower neighbouring revival\"\n";
  return out;
}

}  // namespace tjcm
