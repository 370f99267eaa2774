#include "skeline/simplify.hpp"

#include <algorithm>
#include <string>

namespace skeline {

std::string_view to_string(NodeClass c) {
    switch (c) {
    case NodeClass::Terminal: return "terminal";
    case NodeClass::Turning: return "turning";
    case NodeClass::Junction: return "junction";
    }
    return "unknown";
}

std::vector<NodeClass> classify_nodes(const Graph& g, std::span<const NodeId> nodes) {
    std::vector<NodeClass> out;
    out.reserve(nodes.size());
    for (auto u : nodes) {
        const auto d = g.degree(u);
        if (d == 0)
            throw ContractViolationError("node " + std::to_string(u) + " is isolated; speckle must be removed first");
        out.push_back(d == 1 ? NodeClass::Terminal : d == 2 ? NodeClass::Turning : NodeClass::Junction);
    }
    return out;
}

std::vector<Triangle> junction_triangles(const Graph& g, std::span<const NodeId> junctions) {
    if (junctions.size() < 3)
        return {};
    std::vector<NodeId> sorted(junctions.begin(), junctions.end());
    std::sort(sorted.begin(), sorted.end());
    return triangles(induced_subgraph(g, sorted));
}

std::vector<Edge> select_removable_edges(std::span<const Triangle> tris, std::span<const Pixel> coords,
                                         std::size_t* skipped) {
    const auto diagonal = [&](NodeId a, NodeId b) {
        const auto& pa = coords[a];
        const auto& pb = coords[b];
        return pa.row != pb.row && pa.col != pb.col;
    };
    std::vector<Edge> out;
    std::size_t without_diagonal = 0;
    for (const auto& t : tris) {
        bool any = false;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
            if (diagonal(t[i], t[j])) {
                out.emplace_back(t[i], t[j]);
                any = true;
            }
        without_diagonal += !any;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (skipped != nullptr)
        *skipped = without_diagonal;
    return out;
}

SimplifiedSubgraph simplify_subgraph(const SkeletonGraph& sg, std::span<const NodeId> nodes) {
    SimplifiedSubgraph out;
    out.nodes.assign(nodes.begin(), nodes.end());
    out.graph = relabeled_subgraph(sg.graph, out.nodes);

    std::vector<Pixel> coords;
    coords.reserve(out.nodes.size());
    for (auto u : out.nodes)
        coords.push_back(sg.coords.at(u));

    std::vector<NodeId> local(out.nodes.size());
    for (NodeId i = 0; i < local.size(); ++i)
        local[i] = i;

    const auto initial = classify_nodes(out.graph, local);
    std::vector<NodeId> initial_junctions;
    for (NodeId i = 0; i < initial.size(); ++i)
        if (initial[i] == NodeClass::Junction)
            initial_junctions.push_back(i);

    const auto tris = junction_triangles(out.graph, initial_junctions);
    const auto removable = select_removable_edges(tris, coords);
    for (auto e : removable)
        out.graph.remove_edge(e);

    out.classes = classify_nodes(out.graph, local);

    for (auto j : initial_junctions)
        out.initial_junctions.push_back(out.nodes[j]);
    for (const auto& t : tris)
        out.cliques.push_back({out.nodes[t[0]], out.nodes[t[1]], out.nodes[t[2]]});
    for (auto e : removable)
        out.removed_edges.emplace_back(out.nodes[e.u], out.nodes[e.v]);
    for (NodeId i = 0; i < local.size(); ++i) {
        if (out.classes[i] == NodeClass::Junction)
            out.junctions.push_back(out.nodes[i]);
        else if (out.classes[i] == NodeClass::Terminal)
            out.terminals.push_back(out.nodes[i]);
        if (out.classes[i] != NodeClass::Turning)
            out.endpoints.push_back(out.nodes[i]);
    }
    return out;
}

}  // namespace skeline
