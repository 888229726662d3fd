#pragma once

// Static SVG plots of a recorded trajectory. Output depends only on the
// table contents, so identical input gives identical bytes.

#include "symred/cli/trajectory_io.hpp"

#include <string>
#include <vector>

namespace symred::cli {

enum class PlotKind { xy, attitude, controls };

/// Throws InputError for anything other than xy, attitude, controls.
PlotKind parse_plot_kind(const std::string& name);
const char* to_string(PlotKind kind);

/// Agent 1 red, 2 blue, 3 green, then a fixed cycle.
const char* agent_color(std::size_t agent);

/// Heading with 2*pi jumps removed, starting from the first sample.
std::vector<double> unwrap_angles(const std::vector<double>& theta);

/// xy: planar paths with start markers, equal axis scaling.
/// attitude: unwrapped heading against time.
/// controls: u1 and u2 against time, one panel each.
std::string render_svg(const TrajectoryTable& table, PlotKind kind);

}  // namespace symred::cli
