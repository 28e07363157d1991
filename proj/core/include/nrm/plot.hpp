#pragma once

#include <string>

#include "nrm/io.hpp"

namespace nrm {

// Standalone SVG: lambda on x, solved rank as a step plot, certified bounds
// as markers, vertical lines at each defined lambda_k boundary.
void emit_plot(const SweepResult& result, const std::string& path);

}  // namespace nrm
