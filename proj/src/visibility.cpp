#include "ldv/visibility.hpp"

namespace ldv {

void computeDirVis(Tree& t, NodeId id, const World& w) {
    const Node& n = t.node(id);
    if (!n.dir) {
        t.setVisibility(id, t.visMax());
        return;
    }
    t.setVisibility(id, rayCastDistance(n.config, *n.dir, w).distance);
}

void updateVisibility(Tree& t, NodeId xNewId, std::span<const NodeId> rewired, const World& w) {
    computeDirVis(t, xNewId, w);
    for (NodeId id : rewired) computeDirVis(t, id, w);
}

}  // namespace ldv
