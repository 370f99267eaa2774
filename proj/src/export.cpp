#include "skeline/export.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "skeline/errors.hpp"

namespace skeline {

namespace {

using Json = nlohmann::ordered_json;

std::string_view label_name(NodeLabel l) {
    switch (l) {
    case NodeLabel::Terminal: return "terminal";
    case NodeLabel::Turning: return "turning";
    case NodeLabel::Junction: return "junction";
    case NodeLabel::Noise: return "noise";
    }
    return "noise";
}

NodeLabel parse_label(const std::string& s) {
    if (s == "terminal")
        return NodeLabel::Terminal;
    if (s == "turning")
        return NodeLabel::Turning;
    if (s == "junction")
        return NodeLabel::Junction;
    if (s == "noise")
        return NodeLabel::Noise;
    throw ParseError("unknown node class '" + s + "'");
}

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (auto e : edges)
        out.push_back({e.u, e.v});
    return out;
}

Json triangles_json(const std::vector<Triangle>& tris) {
    Json out = Json::array();
    for (const auto& t : tris)
        out.push_back({t[0], t[1], t[2]});
    return out;
}

Json paths_json(const std::vector<PathSeq>& paths) {
    Json out = Json::array();
    for (const auto& p : paths)
        out.push_back({{"kind", to_string(p.kind)}, {"node_ids", p.nodes}});
    return out;
}

Json metrics_json(const Metrics& m) {
    return {
        {"junctions", m.junction_count},
        {"terminals", m.terminal_count},
        {"endpoints", m.endpoint_count},
        {"nodes", m.node_count},
        {"endpoint_fraction", m.endpoint_fraction},
        {"image_pixels", m.image_pixel_count},
        {"skeleton_fraction", m.skeleton_pixel_fraction},
        {"runtime_ms",
         {
             {"preprocess", m.runtime.preprocess_ms},
             {"build", m.runtime.build_ms},
             {"simplify", m.runtime.simplify_ms},
             {"segment", m.runtime.segment_ms},
             {"merge", m.runtime.merge_ms},
             {"total", m.runtime.total_ms},
         }},
    };
}

// --- parsing helpers ---------------------------------------------------------

class Reader {
public:
    explicit Reader(std::size_t node_count) : node_count_(node_count) {}

    NodeId id(const Json& j) const {
        const auto v = j.get<std::uint64_t>();
        if (v >= node_count_)
            throw ParseError("node id " + std::to_string(v) + " does not resolve");
        return static_cast<NodeId>(v);
    }

    std::vector<NodeId> ids(const Json& j) const {
        std::vector<NodeId> out;
        for (const auto& v : j)
            out.push_back(id(v));
        return out;
    }

    std::vector<Edge> edges(const Json& j) const {
        std::vector<Edge> out;
        for (const auto& e : j) {
            if (e.size() != 2)
                throw ParseError("edge must have two ids");
            out.emplace_back(id(e[0]), id(e[1]));
        }
        return out;
    }

    std::vector<Triangle> triangles(const Json& j) const {
        std::vector<Triangle> out;
        for (const auto& t : j) {
            if (t.size() != 3)
                throw ParseError("clique must have three ids");
            out.push_back({id(t[0]), id(t[1]), id(t[2])});
        }
        return out;
    }

    std::vector<PathSeq> paths(const Json& j) const {
        std::vector<PathSeq> out;
        for (const auto& p : j) {
            const auto kind = p.at("kind").get<std::string>();
            if (kind != "open" && kind != "cycle")
                throw ParseError("unknown path kind '" + kind + "'");
            out.push_back({kind == "open" ? PathKind::Open : PathKind::Cycle, ids(p.at("node_ids"))});
        }
        return out;
    }

private:
    std::size_t node_count_;
};

std::string hex_color(double hue) {
    // HSV with s = 0.75, v = 0.85.
    const double s = 0.75;
    const double v = 0.85;
    const double h = hue * 6.0;
    const int sector = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    const double p = v * (1 - s);
    const double q = v * (1 - s * f);
    const double t = v * (1 - s * (1 - f));
    double r = v, g = t, b = p;
    switch (sector) {
    case 1: r = q, g = v, b = p; break;
    case 2: r = p, g = v, b = t; break;
    case 3: r = p, g = q, b = v; break;
    case 4: r = t, g = p, b = v; break;
    case 5: r = v, g = p, b = q; break;
    default: break;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r * 255)),
                  static_cast<int>(std::lround(g * 255)), static_cast<int>(std::lround(b * 255)));
    return buf;
}

}  // namespace

std::string to_json(const DetectionResult& r, int indent) {
    Json nodes = Json::array();
    for (NodeId id = 0; id < r.coords.size(); ++id)
        nodes.push_back({{"id", id}, {"row", r.coords[id].row}, {"col", r.coords[id].col}, {"class", label_name(r.labels.at(id))}});

    Json subgraphs = Json::array();
    for (const auto& s : r.subgraphs)
        subgraphs.push_back({
            {"nodes", s.nodes},
            {"edges", edges_json(s.edges)},
            {"removed_edges", edges_json(s.removed_edges)},
            {"cliques", triangles_json(s.cliques)},
            {"junctions", s.junctions},
            {"terminals", s.terminals},
            {"endpoints", s.endpoints},
            {"paths", paths_json(s.paths)},
        });

    Json doc = {
        {"schema_version", kSchemaVersion},
        {"image", {{"rows", r.rows}, {"cols", r.cols}}},
        {"nodes", std::move(nodes)},
        {"edges", edges_json(r.edges)},
        {"paths", paths_json(r.paths)},
        {"removed_edges", edges_json(r.removed_edges)},
        {"cliques", triangles_json(r.cliques)},
        {"endpoints", r.endpoints},
        {"noise", r.noise_nodes},
        {"subgraphs", std::move(subgraphs)},
        {"metrics", metrics_json(r.metrics)},
        {"span_ok", r.span_ok},
    };
    return doc.dump(indent);
}

DetectionResult from_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<std::string>() != kSchemaVersion)
            throw ParseError("unsupported schema_version");
        DetectionResult r;
        r.rows = doc.at("image").at("rows").get<int>();
        r.cols = doc.at("image").at("cols").get<int>();

        const auto& nodes = doc.at("nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            if (n.at("id").get<std::uint64_t>() != i)
                throw ParseError("node ids must be dense and ordered");
            r.coords.push_back({n.at("row").get<int>(), n.at("col").get<int>()});
            r.labels.push_back(parse_label(n.at("class").get<std::string>()));
        }

        const Reader read(r.coords.size());
        r.edges = read.edges(doc.at("edges"));
        r.paths = read.paths(doc.at("paths"));
        r.removed_edges = read.edges(doc.at("removed_edges"));
        r.cliques = read.triangles(doc.at("cliques"));
        r.endpoints = read.ids(doc.at("endpoints"));
        r.noise_nodes = read.ids(doc.at("noise"));
        for (const auto& s : doc.at("subgraphs")) {
            SubgraphRecord rec;
            rec.nodes = read.ids(s.at("nodes"));
            rec.edges = read.edges(s.at("edges"));
            rec.removed_edges = read.edges(s.at("removed_edges"));
            rec.cliques = read.triangles(s.at("cliques"));
            rec.junctions = read.ids(s.at("junctions"));
            rec.terminals = read.ids(s.at("terminals"));
            rec.endpoints = read.ids(s.at("endpoints"));
            rec.paths = read.paths(s.at("paths"));
            r.subgraphs.push_back(std::move(rec));
        }

        const auto& m = doc.at("metrics");
        r.metrics.junction_count = m.at("junctions").get<std::size_t>();
        r.metrics.terminal_count = m.at("terminals").get<std::size_t>();
        r.metrics.endpoint_count = m.at("endpoints").get<std::size_t>();
        r.metrics.node_count = m.at("nodes").get<std::size_t>();
        r.metrics.endpoint_fraction = m.at("endpoint_fraction").get<double>();
        r.metrics.image_pixel_count = m.at("image_pixels").get<std::size_t>();
        r.metrics.skeleton_pixel_fraction = m.at("skeleton_fraction").get<double>();
        const auto& t = m.at("runtime_ms");
        r.metrics.runtime.preprocess_ms = t.at("preprocess").get<double>();
        r.metrics.runtime.build_ms = t.at("build").get<double>();
        r.metrics.runtime.simplify_ms = t.at("simplify").get<double>();
        r.metrics.runtime.segment_ms = t.at("segment").get<double>();
        r.metrics.runtime.merge_ms = t.at("merge").get<double>();
        r.metrics.runtime.total_ms = t.at("total").get<double>();
        r.span_ok = doc.at("span_ok").get<bool>();
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed result document: ") + e.what());
    } catch (const InvalidReferenceError& e) {
        throw ParseError(std::string("malformed result document: ") + e.what());
    }
}

std::string to_svg(const DetectionResult& r, const SvgStyle& style) {
    std::mt19937 rng(style.palette_seed);
    const double hue0 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    constexpr double kGoldenRatioConjugate = 0.6180339887498949;

    std::ostringstream svg;
    svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
        << R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" << r.cols << R"(" height=")" << r.rows
        << R"(" viewBox="-0.5 -0.5 )" << r.cols << ' ' << r.rows << R"(">)" << '\n';
    svg << R"(<g fill="none" stroke-width=")" << style.stroke_width
        << R"(" stroke-linejoin="round" stroke-linecap="round">)" << '\n';
    for (std::size_t i = 0; i < r.paths.size(); ++i) {
        const auto& p = r.paths[i];
        const double hue = std::fmod(hue0 + kGoldenRatioConjugate * static_cast<double>(i), 1.0);
        svg << (p.kind == PathKind::Cycle ? "<polygon" : "<polyline") << R"( stroke=")" << hex_color(hue)
            << R"(" points=")";
        for (std::size_t k = 0; k < p.nodes.size(); ++k) {
            const auto& px = r.coords.at(p.nodes[k]);
            svg << (k ? " " : "") << px.col << ',' << px.row;
        }
        svg << R"("/>)" << '\n';
    }
    svg << "</g>\n";
    if (style.endpoint_markers && !r.endpoints.empty()) {
        svg << R"(<g stroke="none">)" << '\n';
        for (auto u : r.endpoints) {
            const auto& px = r.coords.at(u);
            const char* fill = r.labels.at(u) == NodeLabel::Junction ? "#d62728" : "#2ca02c";
            svg << R"(<circle cx=")" << px.col << R"(" cy=")" << px.row << R"(" r="0.4" fill=")" << fill << R"("/>)"
                << '\n';
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace skeline
