#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ldv/configuration.hpp"
#include "ldv/geometry.hpp"
#include "ldv/tree.hpp"

namespace ldv {

/// Sampler tuning knobs. cubeHalfWidth is the steer size: every fail node
/// sits within that distance of an obstacle, so the sampling cube around it
/// always straddles free and blocked space.
struct SamplerParams {
    double lambdaS = 0.9;       ///< post-first-solution fail-region sampling bias
    double lambdaI = 0.5;       ///< most-important fail node selection bias
    double goalBias = 0.05;     ///< probability of sampling the goal center
    double cubeHalfWidth = 0.5; ///< half-width of the cube sampled around a fail node
    double ballRadius = 0.75;   ///< radius of the importance ball around a fail node
    double importanceExponent = 1.0;  ///< node-count penalty exponent m
    double visMax = 0.0;        ///< visibility cap, filled from the world diagonal
};

/// A collision-free configuration harvested just in front of an obstacle.
struct FailNode {
    Configuration config;
    double importance = 0.0;
    std::size_t createdAt = 0;  ///< iteration index of the harvest
};

/// Append-only store of near-obstacle nodes with a minimum pairwise spacing
/// gate, so the set stays sparse no matter how long the search runs.
class FailSet {
public:
    explicit FailSet(double minSpacing);

    /// Adds the candidate unless an existing member is closer than the
    /// spacing; returns whether it was stored.
    bool add(Configuration config, std::size_t createdAt);

    const FailNode& operator[](std::size_t i) const { return items_[i]; }
    std::span<const FailNode> items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    double minSpacing() const { return minSpacing_; }

    void setImportance(std::size_t i, double value) { items_[i].importance = value; }

private:
    std::vector<FailNode> items_;
    double minSpacing_;
};

/// Candidate near-obstacle configuration for the steering ray from xNearest
/// toward xNew: the first obstacle hit pulled back by epsC along the ray.
/// Rays that leave the workspace, or hit closer than epsC, yield nothing.
std::optional<Configuration> getXfail(const Configuration& xNearest, const Configuration& xNew,
                                      const World& w, double epsC);

/// Importance of a fail node: mean visibility of tree nodes within
/// ballRadius, divided by (count + 1)^m. An empty ball scores the visibility
/// cap, making unexplored regions maximally attractive.
double importanceOf(const FailNode& f, const Tree& t, const SamplerParams& p);

/// Refreshes the stored importance of every fail node whose ball could have
/// changed this iteration: those near the inserted node and those near any
/// rewired node (their visibility changed). Equivalent to a full recompute.
void updateImportance(FailSet& fs, NodeId xNewId, std::span<const NodeId> rewired, const Tree& t,
                      const SamplerParams& p);

}  // namespace ldv
