#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "skeline/graph.hpp"
#include "skeline/image.hpp"
#include "skeline/skeleton_graph.hpp"

namespace skeline {

enum class NodeClass {
    Terminal,  ///< degree 1
    Turning,   ///< degree 2
    Junction,  ///< degree >= 3
};

std::string_view to_string(NodeClass c);

/// Degree class of each node in `nodes`, in the same order. A degree-0 node is a
/// speckle that should have been removed earlier and raises
/// ContractViolationError.
std::vector<NodeClass> classify_nodes(const Graph& g, std::span<const NodeId> nodes);

/// Triangles of the subgraph induced on `junctions`.
std::vector<Triangle> junction_triangles(const Graph& g, std::span<const NodeId> junctions);

/// Diagonal edges of the given triangles (endpoint pixels differ in both row
/// and column), deduplicated and sorted. `coords` is indexed by the ids used in
/// the triangles. A triangle without a diagonal cannot come from a pixel grid;
/// it is skipped and counted in `skipped` when provided.
std::vector<Edge> select_removable_edges(std::span<const Triangle> tris, std::span<const Pixel> coords,
                                         std::size_t* skipped = nullptr);

/// One connected component after clique-diagonal removal.
///
/// `graph` uses compact local ids: local id i is global node `nodes[i]`.
/// Every other member is expressed in global (skeleton graph) ids. The node
/// classes are recomputed after removal, so `junctions` are the primary
/// junctions.
struct SimplifiedSubgraph {
    Graph graph;
    std::vector<NodeId> nodes;
    std::vector<NodeClass> classes;  ///< parallel to `nodes`
    std::vector<Edge> removed_edges;
    std::vector<Triangle> cliques;
    std::vector<NodeId> initial_junctions;
    std::vector<NodeId> junctions;
    std::vector<NodeId> terminals;
    std::vector<NodeId> endpoints;  ///< junctions and terminals, ascending

    NodeId global_id(NodeId local) const { return nodes.at(local); }
};

/// Simplify the component `nodes` (ascending ids of one despeckled component).
SimplifiedSubgraph simplify_subgraph(const SkeletonGraph& sg, std::span<const NodeId> nodes);

}  // namespace skeline
