#pragma once

#include <vector>

#include "ldv/configuration.hpp"

namespace ldv {

/// Closed axis-aligned box, lo[k] < hi[k] on every axis.
struct HyperRect {
    Configuration lo;
    Configuration hi;

    bool contains(const Configuration& q) const {
        for (std::size_t k = 0; k < lo.size(); ++k) {
            if (q[k] < lo[k] || q[k] > hi[k]) return false;
        }
        return true;
    }
};

/// Bounded workspace with hyperrectangle obstacles. Obstacles are closed
/// sets: touching an obstacle boundary counts as collision.
struct World {
    std::size_t dim = 0;
    HyperRect bounds;
    std::vector<HyperRect> obstacles;
    double diag = 0.0;  ///< Euclidean diagonal of bounds

    World() = default;
    World(HyperRect bounds, std::vector<HyperRect> obstacles);
};

struct RayHit {
    double distance = 0.0;
    bool hitObstacle = false;  ///< false means the ray left the workspace
};

/// True iff q lies inside the (closed) bounds and strictly outside every obstacle.
bool pointFree(const Configuration& q, const World& w);

/// Exact slab test of the closed segment [a,b] against one closed box.
bool segmentIntersectsBox(const Configuration& a, const Configuration& b, const HyperRect& box);

/// True iff the closed segment [a,b] intersects no obstacle. Endpoints are
/// assumed to lie inside bounds (bounds are convex, so the segment does too).
bool segmentFree(const Configuration& a, const Configuration& b, const World& w);

/// First hit of the ray origin + t*dir, t > 0: either the entry point of an
/// obstacle (hitObstacle) or the exit through the workspace boundary.
/// dir must be unit length; origin must be free and inside bounds.
RayHit rayCastDistance(const Configuration& origin, const Configuration& dir, const World& w);

/// Exact Euclidean distance from q to the nearest obstacle, 0 inside one.
/// Worlds without obstacles report the sentinel 2*diag.
double obstacleDistance(const Configuration& q, const World& w);

}  // namespace ldv
