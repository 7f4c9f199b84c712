#pragma once

#include <filesystem>

#include "ldv/planner.hpp"
#include "ldv/scenario.hpp"

namespace ldv {

/// Renders a 2-D planning scene: obstacles, tree edges, fail nodes, best
/// path and start/goal markers, mapped onto an 800-unit-wide canvas with
/// preserved aspect ratio. Throws for scenarios of any other dimension.
void emitSvg(const PlanResult& result, const Scenario& s, const std::filesystem::path& path);

}  // namespace ldv
