#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ldv/configuration.hpp"
#include "ldv/fail_set.hpp"
#include "ldv/geometry.hpp"
#include "ldv/rng.hpp"
#include "ldv/sampler.hpp"
#include "ldv/tree.hpp"

namespace ldv {

/// Closed ball of accepting configurations.
struct GoalRegion {
    Configuration center;
    double radius = 0.0;
};

enum class PlannerMode { RrtStar, Ldv };

struct PlannerParams {
    double eta = 0.5;    ///< steer size
    double gamma = 40.0; ///< near-neighbor radius constant
    double epsC = 0.05;  ///< fail-node back-off from the obstacle face
    std::size_t maxIter = 1500;
    std::uint64_t seed = 1;
    PlannerMode mode = PlannerMode::Ldv;
    SamplerParams sampler;
    std::optional<double> rhoFail;     ///< min fail-node spacing, defaults to eta
    std::optional<double> ballRadius;  ///< importance ball radius, defaults to 1.5*eta

    double effectiveRhoFail() const { return rhoFail.value_or(eta); }
    double effectiveBallRadius() const { return ballRadius.value_or(1.5 * eta); }
    void validate() const;
};

struct TraceRow {
    std::size_t iteration = 0;
    std::optional<double> bestCost;
    std::size_t nodeCount = 0;
    std::size_t failCount = 0;
    long long elapsedNs = 0;
};

struct PlanResult {
    Tree tree;
    FailSet failSet;
    std::optional<std::vector<Configuration>> bestPath;
    std::optional<double> bestCost;
    std::optional<std::size_t> firstSolutionIter;
    std::vector<TraceRow> trace;
};

/// Moves from xNearest toward xRand, at most eta far.
Configuration steer(const Configuration& xNearest, const Configuration& xRand, double eta);

/// Cheapest collision-free parent for xNew among xNear plus the nearest
/// node; ties break toward the lowest id. xNearest must already have a
/// verified free connection, so a result always exists.
NodeId bestParent(const Tree& t, const Configuration& xNew, std::span<const NodeId> xNear,
                  NodeId xNearestId, const World& w);

/// Reparents every candidate whose cost strictly improves through the new
/// node (free edge required); returns the reparented ids in ascending order.
/// Candidates must exclude the new node and its parent.
std::vector<NodeId> rewire(Tree& t, NodeId xNewId, std::span<const NodeId> candidates,
                           const World& w);

/// Cheapest root-to-goal-region path in the tree, if any node lies inside
/// the goal ball. The returned cost is that node's cost-to-come.
std::optional<std::pair<std::vector<Configuration>, double>> extractBestPath(const Tree& t,
                                                                             const GoalRegion& goal);

/// Incremental planner exposing single iterations, so callers can audit
/// invariants between steps. plan() below is the run-to-completion wrapper.
class Planner {
public:
    Planner(World world, Configuration start, GoalRegion goal, PlannerParams params);

    /// One main-loop pass. Rejected samples still consume an iteration.
    void step();

    bool finished() const { return iteration_ >= params_.maxIter; }
    std::size_t iteration() const { return iteration_; }

    /// Runs the remaining iterations and returns the final result.
    PlanResult run();
    PlanResult result() const;

    const Tree& tree() const { return tree_; }
    const FailSet& failSet() const { return failSet_; }
    const World& world() const { return world_; }
    const GoalRegion& goal() const { return goal_; }
    const SamplerParams& samplerParams() const { return sampler_; }
    bool firstFound() const { return firstFound_; }
    std::optional<double> bestCost() const;
    const std::vector<TraceRow>& trace() const { return trace_; }

private:
    void appendTraceRow();

    World world_;
    GoalRegion goal_;
    PlannerParams params_;
    SamplerParams sampler_;  // resolved: cube width, ball radius, visMax, mode override
    Tree tree_;
    FailSet failSet_;
    Rng rng_;
    bool firstFound_ = false;
    std::optional<std::size_t> firstSolutionIter_;
    std::vector<NodeId> goalNodes_;
    std::vector<TraceRow> trace_;
    std::size_t iteration_ = 0;
    std::chrono::steady_clock::time_point startTime_;
};

/// Full run: maxIter iterations from start toward the goal region.
PlanResult plan(const World& w, const Configuration& start, const GoalRegion& goal,
                const PlannerParams& params);

}  // namespace ldv
