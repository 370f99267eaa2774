#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unistd.h>

namespace skeline::testing {

BinaryImage from_ascii(const std::vector<std::string>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.front().size());
    BinaryImage img(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged ascii image");
        for (int j = 0; j < c; ++j)
            img(i, j) = rows[i][j] == '#' || rows[i][j] == '1';
    }
    return img;
}

std::vector<std::string> to_ascii(const BinaryImage& img) {
    std::vector<std::string> out;
    for (int r = 0; r < img.rows(); ++r) {
        std::string row;
        for (int c = 0; c < img.cols(); ++c)
            row += img(r, c) ? '#' : '.';
        out.push_back(row);
    }
    return out;
}

BinaryImage fig2_glyph_skeleton() {
    return from_ascii({
        "...............",
        "...............",
        "...............",
        "..#.........#..",
        "...#.......#...",
        "....#.....#....",
        ".....#...#.....",
        "......#.#......",
        ".......#.......",
        ".....#####.....",
        "....#.....#....",
        "....#.....#....",
        "....#.....#....",
        "....#.....#....",
        ".....#####.....",
        "...............",
    });
}

BinaryImage fig3_skeleton() {
    return from_ascii({
        "....................",
        "............#######.",
        "....................",
        "....................",
        ".......#............",
        ".......#............",
        ".......#............",
        ".......#............",
        ".......#............",
        ".....#####..........",
        "....#.....#.........",
        "....#.....#.........",
        "....#.....#.........",
        ".....#####..........",
        "....................",
    });
}

BinaryImage t_skeleton() {
    return from_ascii({
        "..........",
        ".########.",
        "....#.....",
        "....#.....",
        "....#.....",
        "....#.....",
        "....#.....",
        "....#.....",
        "....#.....",
        "..........",
    });
}

BinaryImage ring_skeleton() {
    return from_ascii({
        "..........",
        "...####...",
        "..#....#..",
        "..#....#..",
        "..#....#..",
        "...####...",
        "..........",
    });
}

// ---------------------------------------------------------------------------

Canvas::Canvas(int rows, int cols, std::uint8_t background) : img_(rows, cols, background) {}

void Canvas::disc(double x, double y, double radius, std::uint8_t value) {
    const int r0 = std::max(0, static_cast<int>(std::floor(y - radius)));
    const int r1 = std::min(img_.rows() - 1, static_cast<int>(std::ceil(y + radius)));
    const int c0 = std::max(0, static_cast<int>(std::floor(x - radius)));
    const int c1 = std::min(img_.cols() - 1, static_cast<int>(std::ceil(x + radius)));
    for (int r = r0; r <= r1; ++r)
        for (int c = c0; c <= c1; ++c)
            if ((c - x) * (c - x) + (r - y) * (r - y) <= radius * radius)
                img_(r, c) = value;
}

void Canvas::line(double x0, double y0, double x1, double y1, double width, std::uint8_t value) {
    const double len = std::hypot(x1 - x0, y1 - y0);
    const int steps = std::max(1, static_cast<int>(std::ceil(len * 4)));
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        disc(x0 + t * (x1 - x0), y0 + t * (y1 - y0), width / 2, value);
    }
}

void Canvas::polyline(const std::vector<std::pair<double, double>>& pts, double width, std::uint8_t value) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        line(pts[i].first, pts[i].second, pts[i + 1].first, pts[i + 1].second, width, value);
}

void Canvas::arc(double cx, double cy, double rx, double ry, double from_deg, double to_deg, double width,
                 std::uint8_t value) {
    std::vector<std::pair<double, double>> pts;
    const int steps = std::max(8, static_cast<int>(std::abs(to_deg - from_deg) / 3));
    for (int i = 0; i <= steps; ++i) {
        const double a = (from_deg + (to_deg - from_deg) * i / steps) * std::numbers::pi / 180.0;
        pts.emplace_back(cx + rx * std::cos(a), cy - ry * std::sin(a));
    }
    polyline(pts, width, value);
}

void Canvas::rect(int r0, int c0, int r1, int c1, std::uint8_t value) {
    for (int r = std::max(0, r0); r <= std::min(img_.rows() - 1, r1); ++r)
        for (int c = std::max(0, c0); c <= std::min(img_.cols() - 1, c1); ++c)
            img_(r, c) = value;
}

GrayImage m_glyph(int height) {
    // Designed on a 64-unit em box and scaled.
    const double s = height / 64.0;
    const int cols = static_cast<int>(std::ceil(72 * s));
    Canvas cv(height, cols, 255);
    const double w = 7 * s;
    // Left stem, rising into the first arch.
    cv.line(12 * s, 56 * s, 12 * s, 30 * s, w, 0);
    cv.arc(24 * s, 30 * s, 12 * s, 16 * s, 180, 0, w, 0);
    // Middle stem; the second arch leaves it below the first arch's end.
    cv.line(36 * s, 30 * s, 36 * s, 56 * s, w, 0);
    cv.arc(48 * s, 34 * s, 12 * s, 20 * s, 160, 0, w, 0);
    cv.line(60 * s, 34 * s, 60 * s, 56 * s, w, 0);
    return cv.image();
}

GrayImage digit_glyph(int side) {
    const double s = side / 28.0;
    Canvas cv(side, side, 0);
    const double w = std::max(2.5, 2.6 * s);
    // Closed counter on the upper left, stem on the right, crossbar, tail.
    cv.polyline({{17 * s, 4 * s}, {7 * s, 16 * s}, {21 * s, 16 * s}}, w, 255);
    cv.line(17 * s, 4 * s, 17 * s, 24 * s, w, 255);
    return cv.image();
}

GrayImage straight_lines_image() {
    Canvas cv(96, 96, 0);
    for (int i = 0; i < 6; ++i)
        cv.line(8, 8 + 14 * i, 88, 8 + 14 * i, 3, 255);
    return cv.image();
}

GrayImage thick_t_image() {
    Canvas cv(40, 40, 0);
    cv.rect(6, 6, 10, 33, 255);
    cv.rect(11, 18, 33, 21, 255);
    return cv.image();
}

GrayImage diagonal_stroke_image() {
    Canvas cv(40, 40, 255);
    cv.line(6, 6, 33, 33, 3, 0);
    return cv.image();
}

GrayImage dense_contour_image(int side) {
    GrayImage img(side, side, 0);
    const double k = 2.0 * std::numbers::pi / side;
    auto field = [&](double x, double y) {
        return std::sin(3 * k * x) * std::cos(2 * k * y) + 0.6 * std::sin(5 * k * (x + y)) +
               0.4 * std::cos(7 * k * (x - 0.5 * y));
    };
    constexpr double kLevels = 10.0;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c + 1 < side; ++c) {
            const auto here = std::floor(field(c, r) * kLevels);
            const bool edge = here != std::floor(field(c + 1, r) * kLevels) ||
                              (r + 1 < side && here != std::floor(field(c, r + 1) * kLevels));
            if (edge)
                img(r, c) = 255;
        }
    return img;
}

BinaryImage random_thick_blob(std::mt19937& rng, int rows, int cols) {
    static constexpr int kDr[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
    static constexpr int kDc[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    BinaryImage img(rows, cols);
    std::uniform_int_distribution<int> row(2, rows - 3);
    std::uniform_int_distribution<int> col(2, cols - 3);
    std::uniform_int_distribution<int> heading(0, 7);
    std::uniform_int_distribution<int> turn(-1, 1);
    std::uniform_int_distribution<int> walks(1, 3);
    std::bernoulli_distribution wander(0.25);
    std::uniform_int_distribution<int> length(4, 2 * std::max(rows, cols));
    // Later walks branch off a centre visited earlier, so the blob stays connected.
    std::vector<Pixel> visited{{row(rng), col(rng)}};
    const int k = walks(rng);
    for (int w = 0; w < k; ++w) {
        const auto start = visited[std::uniform_int_distribution<std::size_t>(0, visited.size() - 1)(rng)];
        int r = start.row;
        int c = start.col;
        int h = heading(rng);
        const int n = length(rng);
        for (int i = 0; i < n; ++i) {
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc)
                    img(r + dr, c + dc) = 1;
            visited.push_back({r, c});
            if (wander(rng))
                h = (h + turn(rng) + 8) % 8;
            // Turn around at the margin so the brush never touches the border.
            if (r + kDr[h] < 2 || r + kDr[h] > rows - 3 || c + kDc[h] < 2 || c + kDc[h] > cols - 3)
                h = (h + 4) % 8;
            r = std::clamp(r + kDr[h], 2, rows - 3);
            c = std::clamp(c + kDc[h], 2, cols - 3);
        }
    }
    return img;
}

BinaryImage random_loop_blob(std::mt19937& rng, int rows, int cols) {
    std::uniform_real_distribution<double> cy(0.35 * rows, 0.65 * rows);
    std::uniform_real_distribution<double> cx(0.35 * cols, 0.65 * cols);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Canvas cv(rows, cols, 0);
    const double y = cy(rng);
    const double x = cx(rng);
    const double ry = 2.5 + unit(rng) * std::max(0.0, std::min(y, rows - 1 - y) - 4.0);
    const double rx = 2.5 + unit(rng) * std::max(0.0, std::min(x, cols - 1 - x) - 4.0);
    const double width = 2.2 + unit(rng) * 1.2;
    cv.arc(x, y, rx, ry, 0, 360, width, 1);
    // Up to two spokes from the loop outwards.
    const int spokes = static_cast<int>(unit(rng) * 3);
    for (int i = 0; i < spokes; ++i) {
        const double a = unit(rng) * 2 * std::numbers::pi;
        const double reach = 1.0 + unit(rng) * 0.8;
        cv.line(x + rx * std::cos(a), y - ry * std::sin(a), x + reach * rx * std::cos(a) * 1.6,
                y - reach * ry * std::sin(a) * 1.6, width, 1);
    }
    return BinaryImage(rows, cols, cv.image().data());
}

BinaryImage random_blobs(std::mt19937& rng, int rows, int cols) {
    BinaryImage img(rows, cols);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> row(0, rows - 1);
    std::uniform_int_distribution<int> col(0, cols - 1);
    std::uniform_int_distribution<int> extent(1, std::max(2, std::max(rows, cols) / 2));
    std::uniform_real_distribution<double> radius(1.0, std::max(rows, cols) / 3.0);
    std::bernoulli_distribution use_disc(0.4);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int r0 = row(rng);
        const int c0 = col(rng);
        if (use_disc(rng)) {
            const double rad = radius(rng);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    if ((r - r0) * (r - r0) + (c - c0) * (c - c0) <= rad * rad)
                        img(r, c) = 1;
        } else {
            const int h = extent(rng);
            const int w = extent(rng);
            for (int r = r0; r < std::min(rows, r0 + h); ++r)
                for (int c = c0; c < std::min(cols, c0 + w); ++c)
                    img(r, c) = 1;
        }
    }
    return img;
}

BinaryImage random_pixel_subset(std::mt19937& rng, int rows, int cols, int max_pixels) {
    BinaryImage img(rows, cols);
    std::uniform_int_distribution<int> count(0, max_pixels);
    std::uniform_int_distribution<int> row(0, rows - 1);
    std::uniform_int_distribution<int> col(0, cols - 1);
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        img(row(rng), col(rng)) = 1;
    return img;
}

std::vector<std::pair<std::string, BinaryImage>> hand_checkable_shapes() {
    std::vector<std::pair<std::string, BinaryImage>> out;
    auto fill = [](BinaryImage& img, int r0, int c0, int r1, int c1) {
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c)
                img(r, c) = 1;
    };
    for (int t = 3; t <= 5; ++t) {
        const auto tag = std::to_string(t) + "px";
        {
            BinaryImage img(t + 4, 20);
            fill(img, 2, 2, 1 + t, 17);
            out.emplace_back("hbar_" + tag, img);
        }
        {
            BinaryImage img(20, t + 4);
            fill(img, 2, 2, 17, 1 + t);
            out.emplace_back("vbar_" + tag, img);
        }
        {
            BinaryImage img(20, 20);
            fill(img, 2, 2, 17, 1 + t);
            fill(img, 18 - t, 2, 17, 17);
            out.emplace_back("L_" + tag, img);
        }
        {
            BinaryImage img(20, 20);
            fill(img, 2, 2, 17, 1 + t);
            fill(img, 2, 2, 1 + t, 17);
            out.emplace_back("L_flipped_" + tag, img);
        }
        {
            BinaryImage img(22, 22);
            fill(img, 2, 2, 1 + t, 19);
            fill(img, 2, 11 - t / 2, 19, 11 - t / 2 + t - 1);
            out.emplace_back("T_" + tag, img);
        }
        {
            BinaryImage img(23, 23);
            fill(img, 11 - t / 2, 2, 11 - t / 2 + t - 1, 20);
            fill(img, 2, 11 - t / 2, 20, 11 - t / 2 + t - 1);
            out.emplace_back("plus_" + tag, img);
        }
        {
            BinaryImage img(24, 24);
            fill(img, 2, 2, 21, 21);
            for (int r = 2 + t; r <= 21 - t; ++r)
                for (int c = 2 + t; c <= 21 - t; ++c)
                    img(r, c) = 0;
            out.emplace_back("ring_" + tag, img);
        }
        {
            BinaryImage img(24, 24);
            for (int r = 0; r < 24; ++r)
                for (int c = 0; c < 24; ++c) {
                    const double d = std::hypot(r - 11.5, c - 11.5);
                    img(r, c) = d <= 10.5 && d > 10.5 - t;
                }
            out.emplace_back("round_ring_" + tag, img);
        }
    }
    // Upside-down T.
    BinaryImage inv_t(22, 22);
    fill(inv_t, 16, 2, 19, 19);
    fill(inv_t, 2, 10, 19, 13);
    out.emplace_back("T_inverted_4px", inv_t);
    return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / ("skeline-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace skeline::testing
