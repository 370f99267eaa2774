#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skeline/graph.hpp"
#include "skeline/image.hpp"
#include "skeline/raster_io.hpp"
#include "skeline/segment.hpp"
#include "skeline/simplify.hpp"
#include "skeline/skeleton_graph.hpp"

namespace skeline {

/// Wall-clock milliseconds per stage.
struct StageTimes {
    double preprocess_ms = 0;  ///< binarize + thin (zero when given a skeleton)
    double build_ms = 0;       ///< skeleton graph + component split
    double simplify_ms = 0;
    double segment_ms = 0;
    double merge_ms = 0;  ///< merge, span check, metrics
    double total_ms = 0;

    friend bool operator==(const StageTimes&, const StageTimes&) = default;
};

/// Graph statistics used to study where the detector spends its time.
struct Metrics {
    std::size_t junction_count = 0;  ///< primary junctions
    std::size_t terminal_count = 0;
    std::size_t endpoint_count = 0;
    std::size_t node_count = 0;       ///< skeleton pixels, speckle included
    double endpoint_fraction = 0;     ///< endpoint_count / node_count
    std::size_t image_pixel_count = 0;
    double skeleton_pixel_fraction = 0;  ///< node_count / image_pixel_count
    StageTimes runtime;

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Per-component part of a detection.
struct SubgraphRecord {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;  ///< simplified edges
    std::vector<Edge> removed_edges;
    std::vector<Triangle> cliques;
    std::vector<NodeId> junctions;
    std::vector<NodeId> terminals;
    std::vector<NodeId> endpoints;
    std::vector<PathSeq> paths;

    friend bool operator==(const SubgraphRecord&, const SubgraphRecord&) = default;
};

/// Label attached to every skeleton node in a result.
enum class NodeLabel { Terminal, Turning, Junction, Noise };

/// Everything the detector reports about one skeleton.
struct DetectionResult {
    int rows = 0;
    int cols = 0;
    std::vector<Pixel> coords;     ///< node id -> pixel
    std::vector<NodeLabel> labels;  ///< node id -> class after simplification
    std::vector<Edge> edges;        ///< simplified graph, all kept subgraphs
    std::vector<PathSeq> paths;
    std::vector<NodeId> endpoints;
    std::vector<Edge> removed_edges;
    std::vector<Triangle> cliques;
    std::vector<NodeId> noise_nodes;
    std::vector<SubgraphRecord> subgraphs;
    Metrics metrics;
    bool span_ok = true;

    friend bool operator==(const DetectionResult&, const DetectionResult&) = default;
};

/// Simplify and segment one component. Pure: components can be processed in
/// any order, or concurrently, and merged afterwards.
SubgraphRecord process_subgraph(const SkeletonGraph& sg, std::span<const NodeId> nodes);

/// Concatenate per-component records (already in component order) into a
/// result, run the span check and compute metrics.
DetectionResult merge_subgraphs(const SkeletonGraph& sg, std::vector<SubgraphRecord> records,
                                std::vector<NodeId> noise_nodes);

/// Run the detector on a skeleton. The image is not thinned first.
DetectionResult detect_lines(const BinaryImage& skeleton, std::size_t speckle_threshold = kDefaultSpeckleThreshold);

struct PreprocessOptions {
    Polarity polarity = Polarity::Auto;
    bool invert = false;
    std::optional<int> fixed_threshold;  ///< Otsu when empty
    std::size_t speckle_threshold = kDefaultSpeckleThreshold;
};

/// Binarize according to `opts` (including inversion). An image with a single
/// intensity under automatic polarity has no lines and yields an empty mask.
BinaryImage preprocess(const GrayImage& img, const PreprocessOptions& opts);

/// Binarize, optionally invert, thin, then detect.
DetectionResult detect_from_gray(const GrayImage& img, const PreprocessOptions& opts = {});

/// Counts and fractions derived from an assembled result.
Metrics compute_metrics(const DetectionResult& result, std::size_t image_pixels, const StageTimes& runtime);

}  // namespace skeline
