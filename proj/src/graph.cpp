#include "skeline/graph.hpp"

#include <string>

namespace skeline {

std::vector<NodeId> Graph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_count_);
    for (NodeId u = 0; u < adj_.size(); ++u)
        if (live_[u])
            out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adj_.size(); ++u)
        for (auto v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::add_edge(NodeId u, NodeId v) {
    require_live(u);
    require_live(v);
    if (u == v)
        throw InvalidReferenceError("self-loop on node " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

void Graph::remove_edge(Edge e) {
    if (!has_edge(e.u, e.v))
        throw InvalidReferenceError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") does not exist");
    auto& au = adj_[e.u];
    au.erase(std::lower_bound(au.begin(), au.end(), e.v));
    auto& av = adj_[e.v];
    av.erase(std::lower_bound(av.begin(), av.end(), e.u));
    --edge_count_;
}

void Graph::remove_node(NodeId u) {
    require_live(u);
    for (auto v : adj_[u]) {
        auto& av = adj_[v];
        av.erase(std::lower_bound(av.begin(), av.end(), u));
    }
    edge_count_ -= adj_[u].size();
    adj_[u].clear();
    adj_[u].shrink_to_fit();
    live_[u] = 0;
    --live_count_;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<std::vector<NodeId>> components;
    std::vector<std::uint8_t> seen(g.capacity(), 0);
    std::vector<NodeId> stack;
    for (auto start : g.nodes()) {
        if (seen[start])
            continue;
        std::vector<NodeId> component;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (auto v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

std::vector<Triangle> triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (auto a : g.nodes()) {
        const auto na = g.neighbors(a);
        for (auto ib = std::upper_bound(na.begin(), na.end(), a); ib != na.end(); ++ib)
            for (auto ic = ib + 1; ic != na.end(); ++ic)
                if (g.has_edge(*ib, *ic))
                    out.push_back({a, *ib, *ic});
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    std::vector<std::uint8_t> in(g.capacity(), 0);
    for (auto u : keep) {
        if (!g.is_live(u))
            throw InvalidReferenceError("node " + std::to_string(u) + " is not live");
        in[u] = 1;
    }
    Graph out(g.capacity());
    for (NodeId u = 0; u < g.capacity(); ++u)
        if (!in[u])
            out.remove_node(u);
    for (auto e : g.edges())
        if (in[e.u] && in[e.v])
            out.add_edge(e.u, e.v);
    return out;
}

Graph relabeled_subgraph(const Graph& g, std::span<const NodeId> nodes) {
    if (!std::is_sorted(nodes.begin(), nodes.end()))
        throw std::invalid_argument("relabeled_subgraph expects ascending node ids");
    Graph out(nodes.size());
    for (NodeId local = 0; local < nodes.size(); ++local)
        for (auto v : g.neighbors(nodes[local])) {
            if (v <= nodes[local])
                continue;
            const auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
            if (it != nodes.end() && *it == v)
                out.add_edge(local, static_cast<NodeId>(it - nodes.begin()));
        }
    return out;
}

std::optional<std::vector<NodeId>> shortest_path_bfs(const Graph& g, NodeId src, std::span<const NodeId> targets) {
    if (std::binary_search(targets.begin(), targets.end(), src))
        throw std::invalid_argument("BFS source must not be a target");
    return shortest_path_bfs_if(g, src, [&](NodeId v) { return std::binary_search(targets.begin(), targets.end(), v); });
}

std::vector<std::vector<NodeId>> fundamental_cycles(const Graph& g) {
    constexpr auto kNone = static_cast<NodeId>(-1);
    std::vector<NodeId> parent(g.capacity(), kNone);
    std::vector<std::uint32_t> depth(g.capacity(), 0);
    std::vector<std::uint8_t> seen(g.capacity(), 0);

    for (auto root : g.nodes()) {
        if (seen[root])
            continue;
        seen[root] = 1;
        std::queue<NodeId> queue;
        queue.push(root);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (auto v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push(v);
                }
        }
    }

    std::vector<std::vector<NodeId>> cycles;
    for (auto e : g.edges()) {
        if (parent[e.u] == e.v || parent[e.v] == e.u)
            continue;
        std::vector<NodeId> up{e.u};
        std::vector<NodeId> down{e.v};
        while (up.back() != down.back()) {
            if (depth[up.back()] >= depth[down.back()])
                up.push_back(parent[up.back()]);
            else
                down.push_back(parent[down.back()]);
        }
        down.pop_back();  // common ancestor already ends `up`
        up.insert(up.end(), down.rbegin(), down.rend());
        cycles.push_back(std::move(up));
    }
    return cycles;
}

}  // namespace skeline
