#pragma once

#include <span>

#include "ldv/geometry.hpp"
#include "ldv/tree.hpp"

namespace ldv {

/// Recomputes a node's directional visibility: the ray-cast distance from
/// its configuration along its branch direction until an obstacle or the
/// workspace boundary. The root keeps the visMax sentinel.
void computeDirVis(Tree& t, NodeId id, const World& w);

/// Visibility refresh for one iteration: the inserted node plus every node
/// whose parent changed during rewiring. No other node is touched.
void updateVisibility(Tree& t, NodeId xNewId, std::span<const NodeId> rewired, const World& w);

}  // namespace ldv
