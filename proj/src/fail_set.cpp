#include "ldv/fail_set.hpp"

#include <cmath>
#include <stdexcept>

namespace ldv {

FailSet::FailSet(double minSpacing) : minSpacing_(minSpacing) {
    if (!(minSpacing > 0.0)) throw std::invalid_argument("FailSet: spacing must be positive");
}

bool FailSet::add(Configuration config, std::size_t createdAt) {
    for (const FailNode& f : items_) {
        if (distance(f.config, config) < minSpacing_) return false;
    }
    items_.push_back(FailNode{std::move(config), 0.0, createdAt});
    return true;
}

std::optional<Configuration> getXfail(const Configuration& xNearest, const Configuration& xNew,
                                      const World& w, double epsC) {
    const Configuration dir = unitDirection(xNearest, xNew);
    const RayHit hit = rayCastDistance(xNearest, dir, w);
    if (!hit.hitObstacle || hit.distance <= epsC) return std::nullopt;
    Configuration out(xNearest.size());
    const double t = hit.distance - epsC;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = xNearest[k] + t * dir[k];
    return out;
}

double importanceOf(const FailNode& f, const Tree& t, const SamplerParams& p) {
    const double r2 = p.ballRadius * p.ballRadius;
    double visSum = 0.0;
    std::size_t count = 0;
    for (NodeId id = 0; id < t.size(); ++id) {
        if (squaredDistance(t.node(id).config, f.config) <= r2) {
            visSum += t.node(id).vis;
            ++count;
        }
    }
    const double meanVis = count == 0 ? p.visMax : visSum / static_cast<double>(count);
    return meanVis / std::pow(static_cast<double>(count) + 1.0, p.importanceExponent);
}

void updateImportance(FailSet& fs, NodeId xNewId, std::span<const NodeId> rewired, const Tree& t,
                      const SamplerParams& p) {
    const double r2 = p.ballRadius * p.ballRadius;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        bool touched = squaredDistance(fs[i].config, t.node(xNewId).config) <= r2;
        for (std::size_t j = 0; !touched && j < rewired.size(); ++j) {
            touched = squaredDistance(fs[i].config, t.node(rewired[j]).config) <= r2;
        }
        if (touched) fs.setImportance(i, importanceOf(fs[i], t, p));
    }
}

}  // namespace ldv
