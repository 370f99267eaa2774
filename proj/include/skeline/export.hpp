#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "skeline/pipeline.hpp"

namespace skeline {

inline constexpr std::string_view kSchemaVersion = "1";

/// Serialize a result as a JSON document with a fixed key order.
std::string to_json(const DetectionResult& result, int indent = -1);

/// Inverse of to_json. Throws ParseError on malformed or inconsistent documents.
DetectionResult from_json(std::string_view text);

struct SvgStyle {
    double stroke_width = 1.0;
    std::uint32_t palette_seed = 0;
    bool endpoint_markers = true;
};

/// One <polyline> per open path and one <polygon> per cycle, coordinates as
/// (col, row) pixel centres, plus a circle on each segmentation endpoint.
std::string to_svg(const DetectionResult& result, const SvgStyle& style = {});

}  // namespace skeline
