#include "skeline/segment.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace skeline {

namespace {

// Cut `nodes` (an open walk) at every interior endpoint.
void split_open(const std::vector<NodeId>& nodes, const std::vector<std::uint8_t>& is_endpoint,
                std::vector<PathSeq>& out) {
    std::vector<NodeId> piece{nodes.front()};
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        piece.push_back(nodes[i]);
        if (i + 1 < nodes.size() && is_endpoint[nodes[i]]) {
            out.push_back({PathKind::Open, piece});
            piece.assign(1, nodes[i]);
        }
    }
    out.push_back({PathKind::Open, std::move(piece)});
}

// Rotate a cycle to start at `start`, heading to whichever cycle neighbour of
// `start` has the smaller id.
std::vector<NodeId> rotate_cycle(const std::vector<NodeId>& cycle, NodeId start) {
    const auto at = std::find(cycle.begin(), cycle.end(), start);
    std::vector<NodeId> out(at, cycle.end());
    out.insert(out.end(), cycle.begin(), at);
    if (out.back() < out[1])
        std::reverse(out.begin() + 1, out.end());
    return out;
}

void split_cycle(const std::vector<NodeId>& cycle, const std::vector<std::uint8_t>& is_endpoint,
                 std::vector<PathSeq>& out) {
    std::vector<NodeId> ends;
    for (auto u : cycle)
        if (is_endpoint[u])
            ends.push_back(u);
    if (ends.size() <= 1) {
        const auto start = ends.empty() ? *std::min_element(cycle.begin(), cycle.end()) : ends.front();
        out.push_back({PathKind::Cycle, rotate_cycle(cycle, start)});
        return;
    }
    auto walk = rotate_cycle(cycle, *std::min_element(ends.begin(), ends.end()));
    walk.push_back(walk.front());
    split_open(walk, is_endpoint, out);
}

struct Record {
    PathKind kind;
    std::vector<NodeId> nodes;
};

void drop_if_isolated(Graph& g, NodeId u) {
    if (g.is_live(u) && g.degree(u) == 0)
        g.remove_node(u);
}

// Surviving edges of a partially claimed cycle, as maximal open chains.
std::vector<std::vector<NodeId>> surviving_chains(const std::vector<NodeId>& cycle, const std::vector<bool>& alive) {
    const std::size_t k = cycle.size();
    std::size_t first_dead = 0;
    while (alive[first_dead])
        ++first_dead;
    std::vector<std::vector<NodeId>> chains;
    std::vector<NodeId> chain;
    for (std::size_t step = 1; step <= k; ++step) {
        const std::size_t i = (first_dead + step) % k;  // edge i joins cycle[i] and cycle[i+1]
        if (alive[i]) {
            if (chain.empty())
                chain.push_back(cycle[i]);
            chain.push_back(cycle[(i + 1) % k]);
        } else if (!chain.empty()) {
            chains.push_back(std::move(chain));
            chain.clear();
        }
    }
    if (!chain.empty())
        chains.push_back(std::move(chain));
    return chains;
}

}  // namespace

std::string_view to_string(PathKind k) { return k == PathKind::Open ? "open" : "cycle"; }

std::vector<Edge> path_edges(const PathSeq& p) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
        out.emplace_back(p.nodes[i], p.nodes[i + 1]);
    if (p.kind == PathKind::Cycle && p.nodes.size() >= 3)
        out.emplace_back(p.nodes.back(), p.nodes.front());
    return out;
}

SegmentationOutcome segment_subgraph(const SimplifiedSubgraph& s) {
    const std::size_t n = s.nodes.size();
    std::vector<std::uint8_t> is_endpoint(n, 0);
    std::vector<NodeId> endpoints;
    for (NodeId i = 0; i < n; ++i)
        if (s.classes.at(i) != NodeClass::Turning) {
            is_endpoint[i] = 1;
            endpoints.push_back(i);
        }

    Graph work = s.graph;
    std::vector<Record> records;

    // Cycle phase.
    auto cycles = fundamental_cycles(work);
    std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    for (const auto& cycle : cycles) {
        const std::size_t k = cycle.size();
        std::vector<bool> alive(k);
        for (std::size_t i = 0; i < k; ++i)
            alive[i] = work.has_edge(cycle[i], cycle[(i + 1) % k]);
        if (std::none_of(alive.begin(), alive.end(), [](bool a) { return a; }))
            continue;
        if (std::all_of(alive.begin(), alive.end(), [](bool a) { return a; }))
            records.push_back({PathKind::Cycle, cycle});
        else
            for (auto& chain : surviving_chains(cycle, alive))
                records.push_back({PathKind::Open, std::move(chain)});
        for (std::size_t i = 0; i < k; ++i)
            if (alive[i])
                work.remove_edge(Edge(cycle[i], cycle[(i + 1) % k]));
        for (auto u : cycle)
            drop_if_isolated(work, u);
    }

    // Path phase.
    std::size_t next = 0;
    while (true) {
        while (next < endpoints.size() && (!work.is_live(endpoints[next]) || work.degree(endpoints[next]) == 0))
            ++next;
        if (next == endpoints.size())
            break;
        const NodeId src = endpoints[next];
        auto path = shortest_path_bfs_if(work, src, [&](NodeId v) { return is_endpoint[v] && v != src; });
        if (!path) {
            // No other endpoint reachable: consume the dangling chain.
            path = std::vector<NodeId>{src};
            for (NodeId cur = src; work.degree(cur) > 0;) {
                const NodeId step = work.neighbors(cur).front();
                work.remove_edge(Edge(cur, step));
                path->push_back(step);
                cur = step;
            }
        } else {
            for (std::size_t i = 0; i + 1 < path->size(); ++i)
                work.remove_edge(Edge((*path)[i], (*path)[i + 1]));
        }
        for (auto u : *path)
            drop_if_isolated(work, u);
        records.push_back({PathKind::Open, std::move(*path)});
    }

    if (work.edge_count() != 0)
        throw InternalInvariantError(std::to_string(work.edge_count()) + " edges left after segmentation");

    // Split phase.
    std::vector<PathSeq> local_paths;
    for (const auto& r : records) {
        if (r.kind == PathKind::Cycle)
            split_cycle(r.nodes, is_endpoint, local_paths);
        else
            split_open(r.nodes, is_endpoint, local_paths);
    }

    SegmentationOutcome out;
    std::vector<std::uint8_t> covered(n, 0);
    for (auto& p : local_paths) {
        for (auto& u : p.nodes) {
            covered[u] = 1;
            u = s.nodes[u];
        }
        for (auto e : path_edges(p))
            out.covered_edges.push_back(e);
        out.paths.push_back(std::move(p));
    }
    std::sort(out.covered_edges.begin(), out.covered_edges.end());
    for (NodeId i = 0; i < n; ++i)
        if (!covered[i])
            out.uncovered_nodes.push_back(s.nodes[i]);

    std::vector<Edge> expected;
    for (auto e : s.graph.edges())
        expected.emplace_back(s.nodes[e.u], s.nodes[e.v]);
    std::sort(expected.begin(), expected.end());
    if (out.covered_edges != expected)
        throw InternalInvariantError("segmented paths do not partition the simplified edge set");
    return out;
}

bool verify_span(std::span<const NodeId> all_nodes, std::span<const NodeId> noise, std::span<const PathSeq> paths) {
    std::unordered_set<NodeId> seen(noise.begin(), noise.end());
    for (const auto& p : paths)
        seen.insert(p.nodes.begin(), p.nodes.end());
    return std::all_of(all_nodes.begin(), all_nodes.end(), [&](NodeId u) { return seen.contains(u); });
}

}  // namespace skeline
