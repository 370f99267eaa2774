#include "skeline/skeleton_graph.hpp"

#include <limits>

namespace skeline {

SkeletonGraph build_skeleton_graph(const BinaryImage& skel) {
    constexpr auto kNone = std::numeric_limits<NodeId>::max();
    const int rows = skel.rows();
    const int cols = skel.cols();

    std::vector<NodeId> id_at(skel.size(), kNone);
    std::vector<Pixel> coords;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (skel(r, c)) {
                id_at[static_cast<std::size_t>(r) * cols + c] = static_cast<NodeId>(coords.size());
                coords.push_back({r, c});
            }

    Graph g(coords.size());
    // Forward half of the 8-neighbourhood; the other half is covered by symmetry.
    constexpr int kForward[4][2] = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};
    for (NodeId u = 0; u < coords.size(); ++u) {
        const auto [r, c] = coords[u];
        for (const auto& d : kForward) {
            const int nr = r + d[0];
            const int nc = c + d[1];
            if (!skel.contains(nr, nc))
                continue;
            const auto v = id_at[static_cast<std::size_t>(nr) * cols + nc];
            if (v != kNone)
                g.add_edge(u, v);
        }
    }
    return {std::move(g), std::move(coords), rows, cols};
}

SubgraphSet split_and_despeckle(const SkeletonGraph& sg, std::size_t speckle_threshold) {
    SubgraphSet out;
    for (auto& component : connected_components(sg.graph)) {
        if (component.size() > speckle_threshold)
            out.subgraphs.push_back(std::move(component));
        else
            out.noise_nodes.insert(out.noise_nodes.end(), component.begin(), component.end());
    }
    std::sort(out.noise_nodes.begin(), out.noise_nodes.end());
    return out;
}

}  // namespace skeline
