#include "skeline/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "skeline/errors.hpp"
#include "skeline/thinning.hpp"

namespace skeline {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

template <class T>
void append(std::vector<T>& dst, const std::vector<T>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

SubgraphRecord make_record(SimplifiedSubgraph simplified, SegmentationOutcome outcome) {
    SubgraphRecord rec;
    rec.nodes = std::move(simplified.nodes);
    for (auto e : simplified.graph.edges())
        rec.edges.emplace_back(rec.nodes[e.u], rec.nodes[e.v]);
    rec.removed_edges = std::move(simplified.removed_edges);
    rec.cliques = std::move(simplified.cliques);
    rec.junctions = std::move(simplified.junctions);
    rec.terminals = std::move(simplified.terminals);
    rec.endpoints = std::move(simplified.endpoints);
    rec.paths = std::move(outcome.paths);
    return rec;
}

DetectionResult run(const BinaryImage& skeleton, std::size_t speckle_threshold, StageTimes times) {
    auto t0 = Clock::now();
    const auto sg = build_skeleton_graph(skeleton);
    auto split = split_and_despeckle(sg, speckle_threshold);
    times.build_ms = elapsed_ms(t0);

    std::vector<SubgraphRecord> records;
    records.reserve(split.subgraphs.size());
    for (const auto& nodes : split.subgraphs) {
        t0 = Clock::now();
        auto simplified = simplify_subgraph(sg, nodes);
        times.simplify_ms += elapsed_ms(t0);

        t0 = Clock::now();
        auto outcome = segment_subgraph(simplified);
        times.segment_ms += elapsed_ms(t0);

        records.push_back(make_record(std::move(simplified), std::move(outcome)));
    }

    t0 = Clock::now();
    auto result = merge_subgraphs(sg, std::move(records), std::move(split.noise_nodes));
    times.merge_ms = elapsed_ms(t0);
    times.total_ms = times.preprocess_ms + times.build_ms + times.simplify_ms + times.segment_ms + times.merge_ms;
    result.metrics.runtime = times;
    return result;
}

}  // namespace

SubgraphRecord process_subgraph(const SkeletonGraph& sg, std::span<const NodeId> nodes) {
    auto simplified = simplify_subgraph(sg, nodes);
    auto outcome = segment_subgraph(simplified);
    return make_record(std::move(simplified), std::move(outcome));
}

DetectionResult merge_subgraphs(const SkeletonGraph& sg, std::vector<SubgraphRecord> records,
                                std::vector<NodeId> noise_nodes) {
    DetectionResult r;
    r.rows = sg.rows;
    r.cols = sg.cols;
    r.coords = sg.coords;
    r.labels.assign(sg.coords.size(), NodeLabel::Noise);
    r.noise_nodes = std::move(noise_nodes);

    for (const auto& rec : records) {
        for (auto u : rec.nodes)
            r.labels[u] = NodeLabel::Turning;
        for (auto u : rec.junctions)
            r.labels[u] = NodeLabel::Junction;
        for (auto u : rec.terminals)
            r.labels[u] = NodeLabel::Terminal;
        append(r.edges, rec.edges);
        append(r.paths, rec.paths);
        append(r.endpoints, rec.endpoints);
        append(r.removed_edges, rec.removed_edges);
        append(r.cliques, rec.cliques);
    }
    r.subgraphs = std::move(records);

    const auto all_nodes = sg.graph.nodes();
    r.span_ok = verify_span(all_nodes, r.noise_nodes, r.paths);
    r.metrics = compute_metrics(r, static_cast<std::size_t>(sg.rows) * sg.cols, {});
    return r;
}

DetectionResult detect_lines(const BinaryImage& skeleton, std::size_t speckle_threshold) {
    return run(skeleton, speckle_threshold, {});
}

BinaryImage preprocess(const GrayImage& img, const PreprocessOptions& opts) {
    BinaryImage mask(img.rows(), img.cols());
    if (opts.fixed_threshold) {
        mask = binarize_fixed(img, *opts.fixed_threshold, opts.polarity);
    } else {
        try {
            mask = binarize_otsu(img, opts.polarity);
        } catch (const DegenerateHistogramError&) {
            // A single intensity carries no lines.
        }
    }
    return opts.invert ? invert(mask) : mask;
}

DetectionResult detect_from_gray(const GrayImage& img, const PreprocessOptions& opts) {
    const auto t0 = Clock::now();
    const auto skeleton = thin_zhang_suen(preprocess(img, opts));
    StageTimes times;
    times.preprocess_ms = elapsed_ms(t0);
    return run(skeleton, opts.speckle_threshold, times);
}

Metrics compute_metrics(const DetectionResult& result, std::size_t image_pixels, const StageTimes& runtime) {
    Metrics m;
    m.junction_count = static_cast<std::size_t>(std::count(result.labels.begin(), result.labels.end(), NodeLabel::Junction));
    m.terminal_count = static_cast<std::size_t>(std::count(result.labels.begin(), result.labels.end(), NodeLabel::Terminal));
    m.endpoint_count = m.junction_count + m.terminal_count;
    m.node_count = result.coords.size();
    m.endpoint_fraction = m.node_count == 0 ? 0.0 : static_cast<double>(m.endpoint_count) / static_cast<double>(m.node_count);
    m.image_pixel_count = image_pixels;
    m.skeleton_pixel_fraction =
        image_pixels == 0 ? 0.0 : static_cast<double>(m.node_count) / static_cast<double>(image_pixels);
    m.runtime = runtime;
    return m;
}

}  // namespace skeline
