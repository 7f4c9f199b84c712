#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "ldv/configuration.hpp"
#include "ldv/fail_set.hpp"
#include "ldv/geometry.hpp"

namespace ldv {

// The sampling routines are templated on the generator so tests can drive
// them with scripted streams. Draw order is fixed: branch coin, then
// selection coin and index, then one coordinate per axis.

/// With probability lambdaI the maximum-importance member (ties toward the
/// earliest added), otherwise a uniformly random member.
template <typename RngT>
std::size_t selectFailNode(const FailSet& fs, RngT& rng, double lambdaI) {
    if (fs.empty()) throw std::logic_error("selectFailNode: empty fail set");
    const double coin = rng.uniform01();
    if (coin < lambdaI) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < fs.size(); ++i) {
            if (fs[i].importance > fs[best].importance) best = i;
        }
        return best;
    }
    const auto idx = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(fs.size()));
    return std::min(idx, fs.size() - 1);
}

/// Uniform sample over the axis-aligned cube around the fail node, clipped
/// to the workspace bounds.
template <typename RngT>
Configuration sampleAroundFail(const FailNode& f, RngT& rng, double cubeHalfWidth, const World& w) {
    Configuration q(w.dim);
    for (std::size_t k = 0; k < w.dim; ++k) {
        const double lo = std::max(f.config[k] - cubeHalfWidth, w.bounds.lo[k]);
        const double hi = std::min(f.config[k] + cubeHalfWidth, w.bounds.hi[k]);
        q[k] = rng.uniformIn(lo, hi);
    }
    return q;
}

/// The two-stage sampling strategy. Until the first solution is found (or
/// while no fail nodes exist) this is the plain goal-biased uniform sampler;
/// afterwards a lambdaS share of draws goes to cubes around fail nodes.
template <typename RngT>
Configuration drawSample(bool firstFound, const FailSet& fs, RngT& rng, const SamplerParams& p,
                         const World& w, const Configuration& goalCenter) {
    if (firstFound && !fs.empty() && rng.uniform01() < p.lambdaS) {
        const std::size_t pick = selectFailNode(fs, rng, p.lambdaI);
        return sampleAroundFail(fs[pick], rng, p.cubeHalfWidth, w);
    }
    if (rng.uniform01() < p.goalBias) return goalCenter;
    Configuration q(w.dim);
    for (std::size_t k = 0; k < w.dim; ++k) q[k] = rng.uniformIn(w.bounds.lo[k], w.bounds.hi[k]);
    return q;
}

}  // namespace ldv
