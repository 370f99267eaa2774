#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "skeline/image.hpp"

namespace skeline::testing {

/// Binary image from rows of text; '#' (or '1') is foreground.
BinaryImage from_ascii(const std::vector<std::string>& rows);
std::vector<std::string> to_ascii(const BinaryImage& img);

/// Loop with two diagonal strokes that meet just above it. The meeting pixel
/// touches three loop pixels, giving four junctions that form two triangles.
BinaryImage fig2_glyph_skeleton();

/// A flat stroke in the top right, and below-left a stroke ending in a loop.
BinaryImage fig3_skeleton();

/// T on a 10 x 10 canvas: one primary junction, three terminals.
BinaryImage t_skeleton();

/// Closed loop with cut corners (every pixel has exactly two neighbours).
BinaryImage ring_skeleton();

/// Simple grayscale drawing surface for synthetic test images.
class Canvas {
public:
    Canvas(int rows, int cols, std::uint8_t background);

    /// Filled disc centred at (x = col, y = row).
    void disc(double x, double y, double radius, std::uint8_t value);
    /// Round-capped line of the given width.
    void line(double x0, double y0, double x1, double y1, double width, std::uint8_t value);
    /// Round-joined polyline through (x, y) pairs.
    void polyline(const std::vector<std::pair<double, double>>& pts, double width, std::uint8_t value);
    /// Elliptical arc, angles in degrees, y axis pointing down.
    void arc(double cx, double cy, double rx, double ry, double from_deg, double to_deg, double width,
             std::uint8_t value);
    void rect(int r0, int c0, int r1, int c1, std::uint8_t value);

    const GrayImage& image() const { return img_; }

private:
    GrayImage img_;
};

/// Lowercase "m" drawn dark on white, `height` pixels tall.
GrayImage m_glyph(int height);

/// Digit-like glyph (a "4" with a closed counter) scaled into a side x side
/// image, bright on dark like the handwritten-digit benchmarks.
GrayImage digit_glyph(int side);

/// Several disjoint thick straight lines, bright on dark.
GrayImage straight_lines_image();

/// Thick T, bright on dark.
GrayImage thick_t_image();

/// Dark 3 px diagonal stroke on a white canvas.
GrayImage diagonal_stroke_image();

/// Dense contour-map style image: many nested closed curves, bright on dark.
GrayImage dense_contour_image(int side);

/// One to three random strokes drawn by a 3 x 3 brush walking with a
/// persistent heading, each branching off an earlier one. Connected, at least
/// 3 px wide everywhere, and clear of the image border.
BinaryImage random_thick_blob(std::mt19937& rng, int rows, int cols);

/// Random elliptical ring drawn 2-3.5 px wide, with up to two spokes.
BinaryImage random_loop_blob(std::mt19937& rng, int rows, int cols);

/// Random union of rectangles and discs (may be thin, may be disconnected).
BinaryImage random_blobs(std::mt19937& rng, int rows, int cols);

/// Random subset of at most `max_pixels` pixels.
BinaryImage random_pixel_subset(std::mt19937& rng, int rows, int cols, int max_pixels);

/// Fresh empty directory under the system temp dir, unique per process.
std::filesystem::path scratch_dir(const std::string& name);

/// The 25 shape family: bars, L, T, plus and rings at 3-5 px thickness
/// (five shapes x three thicknesses, plus ten bar/L orientations).
std::vector<std::pair<std::string, BinaryImage>> hand_checkable_shapes();

}  // namespace skeline::testing
