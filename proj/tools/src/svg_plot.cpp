#include "symred/cli/svg_plot.hpp"

#include "symred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace symred::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 420.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 110.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 50.0;
constexpr double kMinPixelStep = 0.5;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

struct Range {
  double lo = 0.0;
  double hi = 0.0;

  void include(double v) {
    if (!std::isfinite(v)) return;
    if (empty) {
      lo = hi = v;
      empty = false;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  // Widens a zero-width range and adds a small margin.
  void pad() {
    if (empty) {
      lo = -1.0;
      hi = 1.0;
      return;
    }
    double w = hi - lo;
    if (w <= 1e-12 * std::max(1.0, std::abs(lo))) {
      const double half = std::max(0.5, 0.1 * std::abs(lo));
      lo -= half;
      hi += half;
      return;
    }
    lo -= 0.05 * w;
    hi += 0.05 * w;
  }
  double span() const { return hi - lo; }

  bool empty = true;
};

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;
  Range xr;
  Range yr;

  double sx(double v) const { return left + (v - xr.lo) / xr.span() * width; }
  double sy(double v) const { return top + height - (v - yr.lo) / yr.span() * height; }
};

double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  const double nice = f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0;
  return nice * mag;
}

std::vector<double> ticks(const Range& r) {
  const double step = nice_step(r.span());
  std::vector<double> out;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-9 * step; t += step) {
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return out;
}

void axes(std::ostringstream& out, const Panel& p, const std::string& xlabel,
          const std::string& ylabel) {
  out << "<rect x=\"" << px(p.left) << "\" y=\"" << px(p.top) << "\" width=\"" << px(p.width)
      << "\" height=\"" << px(p.height) << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (double t : ticks(p.xr)) {
    const double x = p.sx(t);
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(p.top + p.height) << "\" x2=\"" << px(x)
        << "\" y2=\"" << px(p.top + p.height + 5) << "\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << px(p.top + p.height + 18)
        << "\" text-anchor=\"middle\">" << fmt("%g", t) << "</text>\n";
  }
  for (double t : ticks(p.yr)) {
    const double y = p.sy(t);
    out << "<line x1=\"" << px(p.left - 5) << "\" y1=\"" << px(y) << "\" x2=\"" << px(p.left)
        << "\" y2=\"" << px(y) << "\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << px(p.left - 8) << "\" y=\"" << px(y + 4)
        << "\" text-anchor=\"end\">" << fmt("%g", t) << "</text>\n";
  }
  out << "<text x=\"" << px(p.left + p.width / 2) << "\" y=\"" << px(p.top + p.height + 38)
      << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  out << "<text x=\"" << px(p.left - 50) << "\" y=\"" << px(p.top + p.height / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << px(p.left - 50) << ' '
      << px(p.top + p.height / 2) << ")\">" << ylabel << "</text>\n";
}

void polyline(std::ostringstream& out, const Panel& p, const Series& s) {
  const std::size_t n = std::min(s.x.size(), s.y.size());
  if (n == 0) return;
  if (n == 1) {
    out << "<circle cx=\"" << px(p.sx(s.x[0])) << "\" cy=\"" << px(p.sy(s.y[0]))
        << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    return;
  }
  out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
  double last_x = p.sx(s.x[0]);
  double last_y = p.sy(s.y[0]);
  out << px(last_x) << ',' << px(last_y);
  for (std::size_t k = 1; k < n; ++k) {
    const double x = p.sx(s.x[k]);
    const double y = p.sy(s.y[k]);
    if (k + 1 < n && std::hypot(x - last_x, y - last_y) < kMinPixelStep) continue;
    out << ' ' << px(x) << ',' << px(y);
    last_x = x;
    last_y = y;
  }
  out << "\"/>\n";
}

void legend(std::ostringstream& out, const Panel& p, const std::vector<Series>& series) {
  double y = p.top + 10;
  for (const auto& s : series) {
    const double x = p.left + p.width + 15;
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(y) << "\" x2=\"" << px(x + 20)
        << "\" y2=\"" << px(y) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << px(x + 26) << "\" y=\"" << px(y + 4) << "\">" << s.label
        << "</text>\n";
    y += 18;
  }
}

Panel fit(double top, const std::vector<Series>& series) {
  Panel p;
  p.left = kMarginLeft;
  p.top = top;
  p.width = kWidth - kMarginLeft - kMarginRight;
  p.height = kPanelHeight - kMarginTop - kMarginBottom;
  for (const auto& s : series) {
    for (double v : s.x) p.xr.include(v);
    for (double v : s.y) p.yr.include(v);
  }
  p.xr.pad();
  p.yr.pad();
  return p;
}

// Grows one range so that a data unit has the same pixel length on both axes.
void equalize(Panel& p) {
  const double per_x = p.xr.span() / p.width;
  const double per_y = p.yr.span() / p.height;
  if (per_x > per_y) {
    const double mid = 0.5 * (p.yr.lo + p.yr.hi);
    const double half = 0.5 * per_x * p.height;
    p.yr.lo = mid - half;
    p.yr.hi = mid + half;
  } else {
    const double mid = 0.5 * (p.xr.lo + p.xr.hi);
    const double half = 0.5 * per_y * p.width;
    p.xr.lo = mid - half;
    p.xr.hi = mid + half;
  }
}

std::string agent_label(std::size_t i) { return "agent " + std::to_string(i + 1); }

void header(std::ostringstream& out, double height, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(kWidth) << "\" height=\""
      << px(height) << "\" viewBox=\"0 0 " << px(kWidth) << ' ' << px(height)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << px(kWidth / 2) << "\" y=\"18\" text-anchor=\"middle\">" << title
      << "</text>\n";
}

std::string xy_plot(const TrajectoryTable& table) {
  std::vector<Series> series;
  for (std::size_t i = 0; i < table.agent_count; ++i) {
    series.push_back({agent_label(i), agent_color(i), table.agent_column(i, "x"),
                      table.agent_column(i, "y")});
  }
  Panel p = fit(kMarginTop, series);
  equalize(p);
  std::ostringstream out;
  header(out, kPanelHeight, "trajectories");
  axes(out, p, "x", "y");
  for (const auto& s : series) {
    polyline(out, p, s);
    if (!s.x.empty()) {
      out << "<circle cx=\"" << px(p.sx(s.x.front())) << "\" cy=\"" << px(p.sy(s.y.front()))
          << "\" r=\"3\" fill=\"none\" stroke=\"" << s.color << "\"/>\n";
    }
  }
  legend(out, p, series);
  out << "</svg>\n";
  return out.str();
}

std::string attitude_plot(const TrajectoryTable& table) {
  const auto t = table.column("t");
  std::vector<Series> series;
  for (std::size_t i = 0; i < table.agent_count; ++i) {
    series.push_back({agent_label(i), agent_color(i), t,
                      unwrap_angles(table.agent_column(i, "theta"))});
  }
  const Panel p = fit(kMarginTop, series);
  std::ostringstream out;
  header(out, kPanelHeight, "attitude");
  axes(out, p, "t", "theta (rad)");
  for (const auto& s : series) polyline(out, p, s);
  legend(out, p, series);
  out << "</svg>\n";
  return out.str();
}

std::string controls_plot(const TrajectoryTable& table) {
  const auto t = table.column("t");
  std::ostringstream out;
  header(out, 2 * kPanelHeight, "controls");
  const char* names[] = {"u1", "u2"};
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<Series> series;
    for (std::size_t i = 0; i < table.agent_count; ++i) {
      series.push_back({agent_label(i), agent_color(i), t, table.agent_column(i, names[k])});
    }
    const Panel p = fit(kMarginTop + double(k) * kPanelHeight, series);
    axes(out, p, "t", names[k]);
    for (const auto& s : series) polyline(out, p, s);
    legend(out, p, series);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

PlotKind parse_plot_kind(const std::string& name) {
  if (name == "xy") return PlotKind::xy;
  if (name == "attitude") return PlotKind::attitude;
  if (name == "controls") return PlotKind::controls;
  throw InputError("plot kind must be xy, attitude or controls, got '" + name + "'");
}

const char* to_string(PlotKind kind) {
  switch (kind) {
    case PlotKind::xy:
      return "xy";
    case PlotKind::attitude:
      return "attitude";
    case PlotKind::controls:
      return "controls";
  }
  return "unknown";
}

const char* agent_color(std::size_t agent) {
  static constexpr const char* kColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  return kColors[agent % std::size(kColors)];
}

std::vector<double> unwrap_angles(const std::vector<double>& theta) {
  std::vector<double> out;
  out.reserve(theta.size());
  double offset = 0.0;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (k > 0) {
      const double jump = theta[k] - theta[k - 1];
      offset -= 2.0 * std::numbers::pi * std::round(jump / (2.0 * std::numbers::pi));
    }
    out.push_back(theta[k] + offset);
  }
  return out;
}

std::string render_svg(const TrajectoryTable& table, PlotKind kind) {
  switch (kind) {
    case PlotKind::xy:
      return xy_plot(table);
    case PlotKind::attitude:
      return attitude_plot(table);
    case PlotKind::controls:
      return controls_plot(table);
  }
  throw InputError("unknown plot kind");
}

}  // namespace symred::cli
