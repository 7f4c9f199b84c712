#include "ldv/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ldv {

Tree::Tree(Configuration root, double visMax) : visMax_(visMax) {
    if (root.empty() || !allFinite(root)) {
        throw std::invalid_argument("tree root must be a finite configuration");
    }
    if (!(visMax > 0.0)) throw std::invalid_argument("visMax must be positive");
    Node n;
    n.config = std::move(root);
    n.cost = 0.0;
    n.vis = visMax_;
    nodes_.push_back(std::move(n));
}

void Tree::checkId(NodeId id, const char* what) const {
    if (id >= nodes_.size()) {
        throw std::invalid_argument(std::string(what) + ": unknown node id " + std::to_string(id));
    }
}

NodeId Tree::insert(const Configuration& config, NodeId parent) {
    checkId(parent, "insert");
    const double edge = distance(config, nodes_[parent].config);
    if (edge < 1e-12) throw std::invalid_argument("insert: zero-length edge");

    Node n;
    n.config = config;
    n.parent = parent;
    n.cost = nodes_[parent].cost + edge;
    n.dir = unitDirection(nodes_[parent].config, config);
    n.vis = visMax_;
    const NodeId id = nodes_.size();
    nodes_.push_back(std::move(n));
    nodes_[parent].children.push_back(id);
    return id;
}

NodeId Tree::nearest(const Configuration& q) const {
    double best = std::numeric_limits<double>::infinity();
    NodeId bestId = 0;
    for (NodeId id = 0; id < nodes_.size(); ++id) {
        const double d2 = squaredDistance(nodes_[id].config, q);
        if (d2 < best) {
            best = d2;
            bestId = id;
        }
    }
    return bestId;
}

std::vector<NodeId> Tree::nearNeighbors(const Configuration& q, double r) const {
    if (r < 0.0) throw std::invalid_argument("nearNeighbors: negative radius");
    const double r2 = r * r;
    std::vector<NodeId> out;
    for (NodeId id = 0; id < nodes_.size(); ++id) {
        if (squaredDistance(nodes_[id].config, q) <= r2) out.push_back(id);
    }
    return out;
}

bool Tree::inSubtree(NodeId id, NodeId ancestor) const {
    NodeId cur = id;
    while (true) {
        if (cur == ancestor) return true;
        if (!nodes_[cur].parent) return false;
        cur = *nodes_[cur].parent;
    }
}

void Tree::setParent(NodeId child, NodeId newParent) {
    checkId(child, "setParent");
    checkId(newParent, "setParent");
    if (!nodes_[child].parent) throw std::logic_error("setParent: cannot reparent the root");
    if (newParent == child) throw std::logic_error("setParent: node cannot parent itself");
    if (inSubtree(newParent, child)) {
        throw std::logic_error("setParent: new parent lies in the child's subtree");
    }

    const NodeId oldParent = *nodes_[child].parent;
    auto& siblings = nodes_[oldParent].children;
    siblings.erase(std::find(siblings.begin(), siblings.end(), child));
    nodes_[newParent].children.push_back(child);
    nodes_[child].parent = newParent;

    const double newCost = nodes_[newParent].cost + distance(nodes_[child].config, nodes_[newParent].config);
    const double delta = newCost - nodes_[child].cost;
    nodes_[child].cost = newCost;
    nodes_[child].dir = unitDirection(nodes_[newParent].config, nodes_[child].config);

    // Shift the rest of the subtree by the cost delta, depth-first.
    std::vector<NodeId> stack(nodes_[child].children);
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        nodes_[id].cost += delta;
        stack.insert(stack.end(), nodes_[id].children.begin(), nodes_[id].children.end());
    }
}

void Tree::setVisibility(NodeId id, double vis) {
    checkId(id, "setVisibility");
    nodes_[id].vis = vis;
}

double unitBallVolume(std::size_t d) {
    const double half = static_cast<double>(d) / 2.0;
    return std::pow(M_PI, half) / std::tgamma(half + 1.0);
}

double neighborRadius(std::size_t n, std::size_t d, double gamma, double eta) {
    if (!(gamma > 0.0)) throw std::invalid_argument("neighborRadius: gamma must be positive");
    if (!(eta > 0.0)) throw std::invalid_argument("neighborRadius: eta must be positive");
    const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
    const double r = std::pow(gamma / unitBallVolume(d) * std::log(nn) / nn,
                              1.0 / static_cast<double>(d));
    return std::min(r, eta);
}

}  // namespace ldv
