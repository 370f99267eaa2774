#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

#include "skeline/errors.hpp"

namespace skeline {

using NodeId = std::uint32_t;

/// Undirected edge, normalised so that u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw InvalidReferenceError("self-loop edge");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept { return (static_cast<std::size_t>(e.u) << 32) ^ e.v; }
};

/// Three mutually adjacent nodes, sorted ascending.
using Triangle = std::array<NodeId, 3>;

/// Simple undirected graph over dense ids 0..n-1.
///
/// Ids stay stable under removal: a removed node is marked dead and keeps its
/// slot. Adjacency lists are kept sorted so every traversal is in ascending id
/// order.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t node_count) : adj_(node_count), live_(node_count, 1), live_count_(node_count) {}

    std::size_t capacity() const noexcept { return adj_.size(); }
    std::size_t node_count() const noexcept { return live_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool is_live(NodeId u) const noexcept { return u < adj_.size() && live_[u]; }
    bool has_edge(NodeId u, NodeId v) const noexcept {
        return is_live(u) && is_live(v) && std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Neighbours of a live node, ascending.
    std::span<const NodeId> neighbors(NodeId u) const {
        require_live(u);
        return adj_[u];
    }

    std::size_t degree(NodeId u) const {
        require_live(u);
        return adj_[u].size();
    }

    /// Live node ids, ascending.
    std::vector<NodeId> nodes() const;
    /// All edges sorted by (u, v).
    std::vector<Edge> edges() const;

    /// Adds an edge between two live nodes. Adding an existing edge is a no-op;
    /// returns whether the edge was new.
    bool add_edge(NodeId u, NodeId v);
    void remove_edge(Edge e);
    /// Removes the node and all its incident edges.
    void remove_node(NodeId u);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void require_live(NodeId u) const {
        if (!is_live(u))
            throw InvalidReferenceError("node " + std::to_string(u) + " is not live");
    }

    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::uint8_t> live_;
    std::size_t live_count_ = 0;
    std::size_t edge_count_ = 0;
};

/// Number of neighbours of a live node. Throws InvalidReferenceError otherwise.
inline std::size_t degree(const Graph& g, NodeId u) { return g.degree(u); }

/// Live nodes partitioned into connected components. Each component is sorted
/// ascending; components are ordered by their smallest id.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// Every triangle exactly once, each sorted, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

/// Same graph with only the nodes of `keep` live and only edges inside `keep`.
/// Node ids are unchanged.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

/// Compact copy of the subgraph induced on `nodes` (ascending, live). Local id i
/// corresponds to nodes[i], so id order is preserved.
Graph relabeled_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Minimum-hop path from `src` to the nearest node satisfying `is_target`.
///
/// Neighbours are expanded in ascending id order; among targets at the minimum
/// distance the smallest id wins, and the returned path follows the parent
/// pointers of that expansion. `src` itself is never a target.
template <class Pred>
std::optional<std::vector<NodeId>> shortest_path_bfs_if(const Graph& g, NodeId src, Pred is_target) {
    if (!g.is_live(src))
        throw InvalidReferenceError("BFS source is not live");
    std::unordered_map<NodeId, NodeId> parent{{src, src}};
    std::vector<NodeId> frontier{src};
    std::vector<NodeId> next;
    std::optional<NodeId> found;
    while (!frontier.empty() && !found) {
        next.clear();
        for (auto u : frontier)
            for (auto v : g.neighbors(u)) {
                if (!parent.try_emplace(v, u).second)
                    continue;
                next.push_back(v);
                if (is_target(v) && (!found || v < *found))
                    found = v;
            }
        frontier.swap(next);
    }
    if (!found)
        return std::nullopt;
    std::vector<NodeId> path{*found};
    while (path.back() != src)
        path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

/// Set form of shortest_path_bfs_if; `targets` must be sorted ascending.
std::optional<std::vector<NodeId>> shortest_path_bfs(const Graph& g, NodeId src, std::span<const NodeId> targets);

/// One cycle per non-tree edge of a BFS spanning forest.
///
/// Each component is rooted at its smallest id and expanded in ascending id
/// order. Non-tree edges are taken in (u, v) order; the cycle for (u, v) is
/// listed as u, its ancestors up to the lowest common ancestor, then down to v.
/// The start node is not repeated.
std::vector<std::vector<NodeId>> fundamental_cycles(const Graph& g);

}  // namespace skeline
