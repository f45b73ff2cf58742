#include "acdgym/net_model.hpp"

namespace acd {

Topology::Topology(int node_count, NodeId entry_node)
    : node_count_(node_count),
      entry_node_(entry_node),
      adj_(static_cast<std::size_t>(node_count) * node_count, 0) {
    if (node_count < 1) {
        throw InvalidTopologyError("topology needs at least one node");
    }
    check_node(entry_node);
}

void Topology::check_node(NodeId id) const {
    if (id < 0 || id >= node_count_) {
        throw InvalidTopologyError("node id out of range: " + std::to_string(id));
    }
}

bool Topology::adjacent(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    return adj_[static_cast<std::size_t>(a) * node_count_ + b] != 0;
}

void Topology::add_edge(NodeId a, NodeId b) {
    check_node(a);
    check_node(b);
    if (a == b) {
        throw InvalidTopologyError("self-loops are not allowed");
    }
    adj_[static_cast<std::size_t>(a) * node_count_ + b] = 1;
    adj_[static_cast<std::size_t>(b) * node_count_ + a] = 1;
}

int Topology::edge_count() const {
    int twice = 0;
    for (std::uint8_t v : adj_) twice += v;
    return twice / 2;
}

Topology make_linear_topology(int n) {
    if (n < 2) {
        throw InvalidTopologyError("linear topology needs n >= 2, got " + std::to_string(n));
    }
    Topology topo(n, 0);
    for (int i = 0; i + 1 < n; ++i) {
        topo.add_edge(i, i + 1);
    }
    return topo;
}

int compromised_count(const NetworkState& state) {
    int count = 0;
    for (const NodeStatus& s : state.statuses) {
        if (s.compromised) ++count;
    }
    return count;
}

}  // namespace acd
