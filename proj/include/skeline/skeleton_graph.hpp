#pragma once

#include <cstddef>
#include <vector>

#include "skeline/graph.hpp"
#include "skeline/image.hpp"

namespace skeline {

/// Pixel adjacency graph of a skeleton: one node per foreground pixel, edges
/// between 8-neighbours. Node ids follow row-major scan order.
struct SkeletonGraph {
    Graph graph;
    std::vector<Pixel> coords;  ///< node id -> pixel
    int rows = 0;
    int cols = 0;
};

/// Connected components split into kept subgraphs and speckle.
struct SubgraphSet {
    std::vector<std::vector<NodeId>> subgraphs;  ///< ordered by smallest id
    std::vector<NodeId> noise_nodes;             ///< ascending
};

inline constexpr std::size_t kDefaultSpeckleThreshold = 2;

SkeletonGraph build_skeleton_graph(const BinaryImage& skel);

/// Components with at most `speckle_threshold` nodes are reported as noise.
SubgraphSet split_and_despeckle(const SkeletonGraph& sg, std::size_t speckle_threshold = kDefaultSpeckleThreshold);

}  // namespace skeline
