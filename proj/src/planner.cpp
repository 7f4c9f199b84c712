#include "ldv/planner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "ldv/visibility.hpp"

namespace ldv {

namespace {

constexpr double kCoincidentTol = 1e-12;  // sample-on-node rejection
constexpr double kRewireMargin = 1e-12;   // strict improvement threshold

PlannerParams validated(PlannerParams p) {
    p.validate();
    return p;
}

}  // namespace

void PlannerParams::validate() const {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (!(epsC > 0.0)) throw std::invalid_argument("eps_c must be positive");
    if (!(epsC < eta)) throw std::invalid_argument("eps_c must be smaller than eta");
    if (maxIter == 0) throw std::invalid_argument("iters must be positive");
    auto unitRange = [](double v, const char* name) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument(std::string(name) + " must be in [0,1]");
        }
    };
    unitRange(sampler.lambdaS, "lambda_s");
    unitRange(sampler.lambdaI, "lambda_i");
    unitRange(sampler.goalBias, "goal_bias");
    if (!(sampler.importanceExponent >= 0.0)) throw std::invalid_argument("m must be >= 0");
    if (rhoFail && !(*rhoFail > 0.0)) throw std::invalid_argument("rho_fail must be positive");
    if (ballRadius && !(*ballRadius > 0.0)) throw std::invalid_argument("r_f must be positive");
}

Configuration steer(const Configuration& xNearest, const Configuration& xRand, double eta) {
    const double d = distance(xNearest, xRand);
    if (d == 0.0) throw std::invalid_argument("steer: coincident inputs");
    if (d <= eta) return xRand;
    Configuration out(xNearest.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = xNearest[k] + eta * (xRand[k] - xNearest[k]) / d;
    }
    return out;
}

NodeId bestParent(const Tree& t, const Configuration& xNew, std::span<const NodeId> xNear,
                  NodeId xNearestId, const World& w) {
    std::vector<NodeId> candidates(xNear.begin(), xNear.end());
    candidates.push_back(xNearestId);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    double bestScore = std::numeric_limits<double>::infinity();
    NodeId best = xNearestId;
    for (NodeId c : candidates) {
        const double score = t.node(c).cost + distance(t.node(c).config, xNew);
        if (score < bestScore && segmentFree(t.node(c).config, xNew, w)) {
            bestScore = score;
            best = c;
        }
    }
    return best;
}

std::vector<NodeId> rewire(Tree& t, NodeId xNewId, std::span<const NodeId> candidates,
                           const World& w) {
    std::vector<NodeId> rewired;
    const Configuration& xNew = t.node(xNewId).config;
    for (NodeId c : candidates) {
        const double through = t.node(xNewId).cost + distance(xNew, t.node(c).config);
        if (through < t.node(c).cost - kRewireMargin && segmentFree(xNew, t.node(c).config, w)) {
            t.setParent(c, xNewId);
            rewired.push_back(c);
        }
    }
    return rewired;
}

std::optional<std::pair<std::vector<Configuration>, double>> extractBestPath(
    const Tree& t, const GoalRegion& goal) {
    std::optional<NodeId> best;
    for (NodeId id = 0; id < t.size(); ++id) {
        if (distance(t.node(id).config, goal.center) > goal.radius) continue;
        if (!best || t.node(id).cost < t.node(*best).cost) best = id;
    }
    if (!best) return std::nullopt;

    std::vector<Configuration> path;
    for (std::optional<NodeId> cur = best; cur; cur = t.node(*cur).parent) {
        path.push_back(t.node(*cur).config);
    }
    std::reverse(path.begin(), path.end());
    return std::make_pair(std::move(path), t.node(*best).cost);
}

Planner::Planner(World world, Configuration start, GoalRegion goal, PlannerParams params)
    : world_(std::move(world)),
      goal_(std::move(goal)),
      params_(validated(std::move(params))),
      sampler_(params_.sampler),
      tree_(start, world_.diag > 0.0 ? world_.diag : 1.0),
      failSet_(params_.effectiveRhoFail()),
      rng_(params_.seed),
      startTime_(std::chrono::steady_clock::now()) {
    if (start.size() != world_.dim) throw std::invalid_argument("start: dimension mismatch");
    if (!pointFree(start, world_)) throw std::invalid_argument("start in collision");
    if (goal_.center.size() != world_.dim) throw std::invalid_argument("goal: dimension mismatch");
    if (!(goal_.radius > 0.0)) throw std::invalid_argument("goal radius must be positive");
    if (!pointFree(goal_.center, world_)) throw std::invalid_argument("goal in collision");

    sampler_.cubeHalfWidth = params_.eta;
    sampler_.ballRadius = params_.effectiveBallRadius();
    sampler_.visMax = world_.diag;
    if (params_.mode == PlannerMode::RrtStar) sampler_.lambdaS = 0.0;
}

std::optional<double> Planner::bestCost() const {
    std::optional<double> best;
    for (NodeId id : goalNodes_) {
        const double c = tree_.node(id).cost;
        if (!best || c < *best) best = c;
    }
    return best;
}

void Planner::appendTraceRow() {
    const auto elapsed = std::chrono::steady_clock::now() - startTime_;
    trace_.push_back(TraceRow{
        iteration_, bestCost(), tree_.size(), failSet_.size(),
        std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()});
}

void Planner::step() {
    if (finished()) return;
    ++iteration_;

    const Configuration xRand = drawSample(firstFound_, failSet_, rng_, sampler_, world_, goal_.center);
    const NodeId xNearestId = tree_.nearest(xRand);
    const Configuration& xNearest = tree_.node(xNearestId).config;
    if (distance(xRand, xNearest) < kCoincidentTol) {
        appendTraceRow();
        return;
    }

    const Configuration xNew = steer(xNearest, xRand, params_.eta);

    // Harvest a near-obstacle node from the steering ray before the
    // collision check; failed extensions still teach us where walls are.
    if (auto xFail = getXfail(xNearest, xNew, world_, params_.epsC)) {
        if (failSet_.add(std::move(*xFail), iteration_)) {
            const std::size_t i = failSet_.size() - 1;
            failSet_.setImportance(i, importanceOf(failSet_[i], tree_, sampler_));
        }
    }

    if (segmentFree(xNearest, xNew, world_) && pointFree(xNew, world_)) {
        const NodeId xNewId = tree_.insert(xNew, xNearestId);
        const double radius = neighborRadius(tree_.size(), world_.dim, params_.gamma, params_.eta);
        std::vector<NodeId> xNear = tree_.nearNeighbors(xNew, radius);
        std::erase(xNear, xNewId);

        const NodeId parent = bestParent(tree_, xNew, xNear, xNearestId, world_);
        if (parent != xNearestId) tree_.setParent(xNewId, parent);

        std::vector<NodeId> candidates = xNear;
        std::erase(candidates, parent);
        const std::vector<NodeId> rewired = rewire(tree_, xNewId, candidates, world_);

        updateVisibility(tree_, xNewId, rewired, world_);
        updateImportance(failSet_, xNewId, rewired, tree_, sampler_);

        if (distance(xNew, goal_.center) <= goal_.radius) {
            goalNodes_.push_back(xNewId);
            if (!firstFound_) {
                firstFound_ = true;
                firstSolutionIter_ = iteration_;
            }
        }
    }

    appendTraceRow();
}

PlanResult Planner::run() {
    while (!finished()) step();
    return result();
}

PlanResult Planner::result() const {
    PlanResult r{tree_, failSet_, std::nullopt, std::nullopt, firstSolutionIter_, trace_};
    if (auto best = extractBestPath(tree_, goal_)) {
        r.bestPath = std::move(best->first);
        r.bestCost = best->second;
    }
    return r;
}

PlanResult plan(const World& w, const Configuration& start, const GoalRegion& goal,
                const PlannerParams& params) {
    return Planner(w, start, goal, params).run();
}

}  // namespace ldv
