#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "skeline/errors.hpp"
#include "skeline/export.hpp"
#include "skeline/pipeline.hpp"
#include "skeline/raster_io.hpp"
#include "skeline/thinning.hpp"

namespace skeline::cli {

namespace fs = std::filesystem;

namespace {

struct InputOptions {
    std::optional<int> threshold;
    bool otsu = false;
    std::string polarity = "auto";
    bool invert = false;
    std::size_t speckle = kDefaultSpeckleThreshold;
    bool skip_preprocess = false;
};

void add_input_flags(CLI::App& cmd, InputOptions& opts) {
    auto* threshold = cmd.add_option("--threshold", opts.threshold, "Fixed binarization threshold")->check(CLI::Range(0, 255));
    auto* otsu = cmd.add_flag("--otsu", opts.otsu, "Otsu binarization (default)");
    threshold->excludes(otsu);
    cmd.add_option("--polarity", opts.polarity, "Foreground polarity")
        ->check(CLI::IsMember({"auto", "bright", "dark"}));
    cmd.add_flag("--invert", opts.invert, "Invert the binary image before thinning");
    cmd.add_option("--speckle", opts.speckle, "Components with at most this many pixels are noise");
    cmd.add_flag("--skip-preprocess", opts.skip_preprocess, "Input is already a binary skeleton");
}

// Run the detector on one image according to the input flags.
DetectionResult detect_file(const fs::path& input, const InputOptions& opts) {
    const auto gray = load_gray(input);
    PreprocessOptions pre;
    pre.polarity = parse_polarity(opts.polarity);
    pre.invert = opts.invert;
    pre.fixed_threshold = opts.threshold;
    pre.speckle_threshold = opts.speckle;
    if (!opts.skip_preprocess)
        return detect_from_gray(gray, pre);

    // A skeleton is taken as is: nonzero pixels (or zero ones, for dark
    // polarity) are foreground unless a threshold says otherwise.
    if (!pre.fixed_threshold)
        pre.fixed_threshold = 1;
    if (pre.polarity == Polarity::Auto)
        pre.polarity = Polarity::ForegroundBright;
    return detect_lines(preprocess(gray, pre), pre.speckle_threshold);
}

constexpr const char* kMetricColumns[] = {"junctions", "terminals", "endpoints", "nodes", "endpoint_fraction",
                                          "image_pixels", "skeleton_fraction", "runtime_ms"};

std::vector<std::string> metric_values(const Metrics& m, double runtime_ms) {
    return {std::to_string(m.junction_count),    std::to_string(m.terminal_count),
            std::to_string(m.endpoint_count),    std::to_string(m.node_count),
            format_decimal(m.endpoint_fraction), std::to_string(m.image_pixel_count),
            format_decimal(m.skeleton_pixel_fraction), format_decimal(runtime_ms)};
}

template <class Range>
std::string join(const Range& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty())
            out += ',';
        out += v;
    }
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!f)
        throw std::runtime_error("write failed: " + path.string());
}

int cmd_detect(const fs::path& input, const fs::path& out_json, const std::string& svg_path, const InputOptions& opts,
               std::ostream& out) {
    const auto result = detect_file(input, opts);
    write_text(out_json, to_json(result, 2));
    if (!svg_path.empty())
        write_text(svg_path, to_svg(result));
    out << "subgraphs=" << result.subgraphs.size() << " paths=" << result.paths.size()
        << " endpoints=" << result.endpoints.size() << " runtime_ms=" << format_decimal(result.metrics.runtime.total_ms)
        << '\n';
    return kOk;
}

int cmd_metrics(const fs::path& input, const std::string& format, const InputOptions& opts, std::ostream& out) {
    const auto result = detect_file(input, opts);
    const auto& m = result.metrics;
    const auto values = metric_values(m, m.runtime.total_ms);
    if (format == "csv") {
        out << join(kMetricColumns) << '\n' << join(values) << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json j = {
            {"junctions", m.junction_count},
            {"terminals", m.terminal_count},
            {"endpoints", m.endpoint_count},
            {"nodes", m.node_count},
            {"endpoint_fraction", m.endpoint_fraction},
            {"image_pixels", m.image_pixel_count},
            {"skeleton_fraction", m.skeleton_pixel_fraction},
            {"runtime_ms",
             {{"preprocess", m.runtime.preprocess_ms},
              {"build", m.runtime.build_ms},
              {"simplify", m.runtime.simplify_ms},
              {"segment", m.runtime.segment_ms},
              {"merge", m.runtime.merge_ms},
              {"total", m.runtime.total_ms}}},
        };
        out << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            out << std::left << std::setw(20) << kMetricColumns[i] << values[i] << '\n';
    }
    return kOk;
}

int cmd_bench(const fs::path& dir, int repeat, const InputOptions& opts, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(dir)) {
        err << "error: not a directory: " << dir.string() << '\n';
        return kIoError;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    out << "file," << join(kMetricColumns) << '\n';
    std::size_t ok = 0;
    for (const auto& file : files) {
        try {
            std::vector<double> times;
            std::optional<DetectionResult> result;
            for (int k = 0; k < repeat; ++k) {
                result = detect_file(file, opts);
                times.push_back(result->metrics.runtime.total_ms);
            }
            std::sort(times.begin(), times.end());
            const double median = times.size() % 2 ? times[times.size() / 2]
                                                   : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
            out << file.filename().string() << ',' << join(metric_values(result->metrics, median)) << '\n';
            ++ok;
        } catch (const InternalInvariantError&) {
            throw;
        } catch (const std::exception& e) {
            err << "warning: skipping " << file.filename().string() << ": " << e.what() << '\n';
        }
    }
    if (ok == 0) {
        err << "error: no image in " << dir.string() << " could be processed\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace

std::string format_decimal(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skeleton-graph line detection"};
    app.require_subcommand(1);

    InputOptions detect_opts;
    std::string detect_input;
    std::string detect_out;
    std::string detect_svg;
    auto* detect = app.add_subcommand("detect", "Detect line paths and write the result document");
    detect->add_option("input", detect_input, "Input image (PNG, PGM or CSV grid)")->required();
    detect->add_option("--out", detect_out, "Output JSON path")->required();
    detect->add_option("--svg", detect_svg, "Also write an SVG rendering");
    add_input_flags(*detect, detect_opts);

    InputOptions metrics_opts;
    std::string metrics_input;
    std::string metrics_format = "table";
    auto* metrics = app.add_subcommand("metrics", "Print graph statistics and stage runtimes");
    metrics->add_option("input", metrics_input, "Input image")->required();
    metrics->add_option("--format", metrics_format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    add_input_flags(*metrics, metrics_opts);

    InputOptions bench_opts;
    std::string bench_dir;
    int repeat = 1;
    auto* bench = app.add_subcommand("bench", "Metrics and median runtime for every image in a directory");
    bench->add_option("dir", bench_dir, "Directory of images")->required();
    bench->add_option("--repeat", repeat, "Runs per image; the median runtime is reported")->check(CLI::PositiveNumber);
    add_input_flags(*bench, bench_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*detect)
            return cmd_detect(detect_input, detect_out, detect_svg, detect_opts, out);
        if (*metrics)
            return cmd_metrics(metrics_input, metrics_format, metrics_opts, out);
        return cmd_bench(bench_dir, repeat, bench_opts, out, err);
    } catch (const InternalInvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const ContractViolationError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace skeline::cli
