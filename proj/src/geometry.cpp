#include "ldv/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace ldv {

namespace {

void requireDim(const Configuration& q, std::size_t dim, const char* what) {
    if (q.size() != dim) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

World::World(HyperRect b, std::vector<HyperRect> obs)
    : dim(b.lo.size()), bounds(std::move(b)), obstacles(std::move(obs)) {
    if (dim == 0) throw std::invalid_argument("world dimension must be positive");
    if (bounds.hi.size() != dim) throw std::invalid_argument("bounds: dimension mismatch");
    for (std::size_t k = 0; k < dim; ++k) {
        if (!(bounds.lo[k] < bounds.hi[k])) {
            throw std::invalid_argument("degenerate bounds on axis " + std::to_string(k));
        }
    }
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const HyperRect& o = obstacles[i];
        if (o.lo.size() != dim || o.hi.size() != dim) {
            throw std::invalid_argument("obstacle " + std::to_string(i) + ": dimension mismatch");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            if (!(o.lo[k] < o.hi[k])) {
                throw std::invalid_argument("degenerate obstacle " + std::to_string(i) +
                                            " on axis " + std::to_string(k));
            }
            if (o.lo[k] > bounds.hi[k] || o.hi[k] < bounds.lo[k]) {
                throw std::invalid_argument("obstacle " + std::to_string(i) + " outside bounds");
            }
        }
    }
    diag = distance(bounds.lo, bounds.hi);
}

bool pointFree(const Configuration& q, const World& w) {
    requireDim(q, w.dim, "pointFree");
    if (!w.bounds.contains(q)) return false;
    for (const HyperRect& o : w.obstacles) {
        if (o.contains(q)) return false;
    }
    return true;
}

bool segmentIntersectsBox(const Configuration& a, const Configuration& b, const HyperRect& box) {
    double tMin = 0.0;
    double tMax = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = b[k] - a[k];
        if (d == 0.0) {
            if (a[k] < box.lo[k] || a[k] > box.hi[k]) return false;
            continue;
        }
        double t1 = (box.lo[k] - a[k]) / d;
        double t2 = (box.hi[k] - a[k]) / d;
        if (t1 > t2) std::swap(t1, t2);
        tMin = std::max(tMin, t1);
        tMax = std::min(tMax, t2);
        if (tMin > tMax) return false;
    }
    return true;
}

bool segmentFree(const Configuration& a, const Configuration& b, const World& w) {
    requireDim(a, w.dim, "segmentFree");
    requireDim(b, w.dim, "segmentFree");
    for (const HyperRect& o : w.obstacles) {
        if (segmentIntersectsBox(a, b, o)) return false;
    }
    return true;
}

RayHit rayCastDistance(const Configuration& origin, const Configuration& dir, const World& w) {
    requireDim(origin, w.dim, "rayCastDistance");
    requireDim(dir, w.dim, "rayCastDistance");
    const double len = norm(dir);
    if (len == 0.0) throw std::invalid_argument("rayCastDistance: zero direction");
    if (std::abs(len - 1.0) > 1e-9) {
        throw std::invalid_argument("rayCastDistance: direction not unit length");
    }
    if (!pointFree(origin, w)) {
        throw std::domain_error("rayCastDistance: origin in collision or out of bounds");
    }

    // Distance at which the ray leaves the closed bounds.
    double tBounds = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < w.dim; ++k) {
        if (dir[k] > 0.0) {
            tBounds = std::min(tBounds, (w.bounds.hi[k] - origin[k]) / dir[k]);
        } else if (dir[k] < 0.0) {
            tBounds = std::min(tBounds, (w.bounds.lo[k] - origin[k]) / dir[k]);
        }
    }

    // First obstacle entry, if any. The origin is free, so a feasible
    // parameter interval [tMin, tMax] of an obstacle always has tMin > 0.
    double tObstacle = std::numeric_limits<double>::infinity();
    for (const HyperRect& o : w.obstacles) {
        double tMin = -std::numeric_limits<double>::infinity();
        double tMax = std::numeric_limits<double>::infinity();
        bool feasible = true;
        for (std::size_t k = 0; k < w.dim; ++k) {
            const double d = dir[k];
            if (d == 0.0) {
                if (origin[k] < o.lo[k] || origin[k] > o.hi[k]) {
                    feasible = false;
                    break;
                }
                continue;
            }
            double t1 = (o.lo[k] - origin[k]) / d;
            double t2 = (o.hi[k] - origin[k]) / d;
            if (t1 > t2) std::swap(t1, t2);
            tMin = std::max(tMin, t1);
            tMax = std::min(tMax, t2);
            if (tMin > tMax) {
                feasible = false;
                break;
            }
        }
        if (feasible && tMin > 0.0) tObstacle = std::min(tObstacle, tMin);
    }

    if (tObstacle <= tBounds) return {tObstacle, true};
    return {std::max(tBounds, 0.0), false};
}

double obstacleDistance(const Configuration& q, const World& w) {
    requireDim(q, w.dim, "obstacleDistance");
    if (w.obstacles.empty()) return 2.0 * w.diag;
    double best = std::numeric_limits<double>::infinity();
    for (const HyperRect& o : w.obstacles) {
        double s = 0.0;
        for (std::size_t k = 0; k < w.dim; ++k) {
            const double c = std::clamp(q[k], o.lo[k], o.hi[k]);
            const double d = q[k] - c;
            s += d * d;
        }
        best = std::min(best, s);
    }
    return std::sqrt(best);
}

}  // namespace ldv
