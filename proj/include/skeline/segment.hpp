#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "skeline/graph.hpp"
#include "skeline/simplify.hpp"

namespace skeline {

enum class PathKind { Open, Cycle };

std::string_view to_string(PathKind k);

/// Ordered node sequence. An Open path runs between two segmentation endpoints
/// with none in between. A Cycle lists each node once; its last node is
/// adjacent to its first and it holds at most one endpoint, at the front.
struct PathSeq {
    PathKind kind = PathKind::Open;
    std::vector<NodeId> nodes;

    friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// Edges traversed by a path, including the closing edge of a cycle.
std::vector<Edge> path_edges(const PathSeq& p);

struct SegmentationOutcome {
    std::vector<PathSeq> paths;
    std::vector<Edge> covered_edges;     ///< sorted
    std::vector<NodeId> uncovered_nodes;  ///< empty on success
};

/// Split a simplified component into paths and cycles. All ids are global.
///
/// Works on a private copy of the simplified graph. Cycles of a spanning-forest
/// basis are taken first (ascending smallest id); edges already claimed by an
/// earlier cycle are dropped and what survives becomes open chains. The
/// remaining forest is then consumed by repeated BFS from the smallest endpoint
/// that still has edges to its nearest other endpoint. Finally every record is
/// cut at interior endpoints. The resulting paths use each simplified edge
/// exactly once; otherwise InternalInvariantError is thrown.
SegmentationOutcome segment_subgraph(const SimplifiedSubgraph& s);

/// True iff every node of `all_nodes` is either noise or on some path.
bool verify_span(std::span<const NodeId> all_nodes, std::span<const NodeId> noise, std::span<const PathSeq> paths);

}  // namespace skeline
