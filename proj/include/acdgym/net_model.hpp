#pragma once

#include <cstdint>
#include <vector>

#include "acdgym/errors.hpp"

namespace acd {

using NodeId = int;

// Undirected graph over nodes 0..node_count-1 with a designated red entry node.
// Adjacency is stored as a flat row-major n*n matrix and kept symmetric with a
// zero diagonal.
class Topology {
public:
    Topology(int node_count, NodeId entry_node);

    int node_count() const { return node_count_; }
    NodeId entry_node() const { return entry_node_; }

    bool adjacent(NodeId a, NodeId b) const;
    void add_edge(NodeId a, NodeId b);
    int edge_count() const;

    // Row-major n*n matrix of 0/1 flags.
    const std::vector<std::uint8_t>& adjacency_flat() const { return adj_; }

private:
    void check_node(NodeId id) const;

    int node_count_;
    NodeId entry_node_;
    std::vector<std::uint8_t> adj_;
};

// n-node line graph: node i adjacent exactly to i-1 and i+1, entry at node 0.
Topology make_linear_topology(int n);

struct NodeStatus {
    double vulnerability = 1.0;
    bool compromised = false;
    bool decoy_active = false;
};

struct NetworkState {
    Topology topology;
    std::vector<NodeStatus> statuses;

    explicit NetworkState(Topology topo)
        : topology(std::move(topo)), statuses(topology.node_count()) {}
};

// Number of nodes currently flagged compromised.
int compromised_count(const NetworkState& state);

}  // namespace acd
