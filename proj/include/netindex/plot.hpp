#pragma once

#include "netindex/sweep.hpp"

#include <string>
#include <vector>

namespace netindex {

/// Renders sweep rows as a column of SVG line charts, one chart per
/// (index, param) pair, one colored polyline per family, with the log10
/// values on the y axis. Output is fully deterministic: same rows, same
/// bytes.
std::string render_sweep_svg(const std::vector<SweepRow>& rows);

}  // namespace netindex
