#pragma once

// Mutable simple graph used while generating or rewiring. Not part of the
// public interface; everything leaves through to_graph().

#include "colornet/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace colornet::detail {

inline std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

class EdgeStore {
public:
    explicit EdgeStore(std::size_t n) : adj_(n) {}

    explicit EdgeStore(const Graph& g) : adj_(g.node_count()) {
        edges_.reserve(g.edge_count());
        keys_.reserve(g.edge_count() * 2);
        for (const Edge& e : g.edges()) add(e.u, e.v);
    }

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    std::size_t degree(NodeId v) const { return adj_[v].size(); }

    bool has(NodeId u, NodeId v) const { return keys_.count(edge_key(u, v)) != 0; }
    // Caller guarantees the edge is present.
    std::size_t index_of(NodeId u, NodeId v) const { return keys_.at(edge_key(u, v)); }

    // Caller guarantees u != v and the edge is absent.
    void add(NodeId u, NodeId v) {
        keys_.emplace(edge_key(u, v), edges_.size());
        edges_.push_back(u < v ? Edge{u, v} : Edge{v, u});
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void replace(std::size_t i, Edge next) {
        unlink(edges_[i]);
        if (next.u > next.v) std::swap(next.u, next.v);
        edges_[i] = next;
        keys_.emplace(edge_key(next.u, next.v), i);
        adj_[next.u].push_back(next.v);
        adj_[next.v].push_back(next.u);
    }

    void remove_at(std::size_t i) {
        unlink(edges_[i]);
        edges_[i] = edges_.back();
        edges_.pop_back();
        if (i < edges_.size()) keys_[edge_key(edges_[i].u, edges_[i].v)] = i;
    }

    bool connected() const {
        const std::size_t n = adj_.size();
        if (n == 0) return true;
        std::vector<char> seen(n, 0);
        std::vector<NodeId> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : adj_[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == n;
    }

    Graph to_graph() const { return Graph::from_edges(adj_.size(), edges_); }

private:
    void unlink(const Edge& e) {
        keys_.erase(edge_key(e.u, e.v));
        erase_one(adj_[e.u], e.v);
        erase_one(adj_[e.v], e.u);
    }

    static void erase_one(std::vector<NodeId>& list, NodeId x) {
        auto it = std::find(list.begin(), list.end(), x);
        *it = list.back();
        list.pop_back();
    }

    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> keys_;  // key -> index in edges_
    std::vector<std::vector<NodeId>> adj_;
};

} // namespace colornet::detail
