#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ldv/configuration.hpp"

namespace ldv {

using NodeId = std::size_t;

struct Node {
    Configuration config;
    std::optional<NodeId> parent;    ///< absent for the root
    std::vector<NodeId> children;
    double cost = 0.0;               ///< cost-to-come, Euclidean path length
    std::optional<Configuration> dir;  ///< unit branch direction, absent for the root
    double vis = 0.0;                ///< directional visibility, in (0, visMax]
};

/// Rooted search tree. Nodes are append-only and keep dense ids in insertion
/// order (root is id 0). Parent/children links and branch directions are
/// maintained structurally; cost changes from reparenting propagate to the
/// whole subtree.
class Tree {
public:
    /// visMax is the finite stand-in for "unlimited visibility"; fresh nodes
    /// start with it until their visibility is computed.
    Tree(Configuration root, double visMax);

    /// Appends a node under `parent`. Rejects zero-length edges.
    NodeId insert(const Configuration& config, NodeId parent);

    /// Id of the node closest to q; ties break toward the lowest id.
    NodeId nearest(const Configuration& q) const;

    /// All ids within the closed ball of radius r around q, ascending.
    std::vector<NodeId> nearNeighbors(const Configuration& q, double r) const;

    /// Moves `child` under `newParent`, recomputing its cost and direction
    /// and shifting the cost of its entire subtree by the same delta.
    /// Throws on the root, on self-parenting, and on cycles.
    void setParent(NodeId child, NodeId newParent);

    void setVisibility(NodeId id, double vis);

    const Node& node(NodeId id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t dim() const { return nodes_[0].config.size(); }
    double visMax() const { return visMax_; }

    /// True iff `id` lies in the subtree rooted at `ancestor` (inclusive).
    bool inSubtree(NodeId id, NodeId ancestor) const;

private:
    void checkId(NodeId id, const char* what) const;

    std::vector<Node> nodes_;
    double visMax_;
};

/// Volume of the unit ball in d dimensions.
double unitBallVolume(std::size_t d);

/// Shrinking near-neighbor radius min{(gamma/xi_d * ln(n)/n)^(1/d), eta},
/// with n clamped to at least 2 so the logarithm never vanishes.
double neighborRadius(std::size_t n, std::size_t d, double gamma, double eta);

}  // namespace ldv
