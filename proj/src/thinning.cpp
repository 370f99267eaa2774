#include "skeline/thinning.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace skeline {

namespace {

// Neighbour code bit i corresponds to P(i+2) in the clockwise order
// N, NE, E, SE, S, SW, W, NW.
enum : unsigned { kN = 1u << 0, kNE = 1u << 1, kE = 1u << 2, kSE = 1u << 3, kS = 1u << 4, kSW = 1u << 5, kW = 1u << 6, kNW = 1u << 7 };

constexpr int transitions(unsigned code) {
    int a = 0;
    for (int i = 0; i < 8; ++i) {
        const bool cur = (code >> i) & 1u;
        const bool next = (code >> ((i + 1) % 8)) & 1u;
        a += !cur && next;
    }
    return a;
}

constexpr bool deletable(unsigned code, bool first_pass) {
    const int b = std::popcount(code);
    if (b < 2 || b > 6 || transitions(code) != 1)
        return false;
    if (first_pass)
        return (code & (kN | kE | kS)) != (kN | kE | kS) && (code & (kE | kS | kW)) != (kE | kS | kW);
    return (code & (kN | kE | kW)) != (kN | kE | kW) && (code & (kN | kS | kW)) != (kN | kS | kW);
}

using Table = std::array<bool, 256>;

constexpr Table make_table(bool first_pass) {
    Table t{};
    for (unsigned code = 0; code < 256; ++code)
        t[code] = deletable(code, first_pass);
    return t;
}

constexpr Table kFirst = make_table(true);
constexpr Table kSecond = make_table(false);

}  // namespace

BinaryImage thin_zhang_suen(const BinaryImage& img) {
    // One pixel of background padding on every side.
    const int rows = img.rows();
    const int cols = img.cols();
    const int stride = cols + 2;
    std::vector<std::uint8_t> grid(static_cast<std::size_t>(rows + 2) * stride, 0);
    std::vector<std::size_t> live;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (img(r, c)) {
                const auto at = static_cast<std::size_t>(r + 1) * stride + (c + 1);
                grid[at] = 1;
                live.push_back(at);
            }

    const std::array<std::ptrdiff_t, 8> offsets = {-stride, -stride + 1, 1, stride + 1, stride, stride - 1, -1, -stride - 1};
    std::vector<std::size_t> marked;

    auto subiteration = [&](const Table& table) {
        marked.clear();
        for (auto at : live) {
            unsigned code = 0;
            for (int i = 0; i < 8; ++i)
                code |= static_cast<unsigned>(grid[at + offsets[i]]) << i;
            if (table[code])
                marked.push_back(at);
        }
        for (auto at : marked)
            grid[at] = 0;
        if (!marked.empty())
            std::erase_if(live, [&](std::size_t at) { return grid[at] == 0; });
        return marked.size();
    };

    while (true) {
        const auto removed = subiteration(kFirst) + subiteration(kSecond);
        if (removed == 0)
            break;
    }

    BinaryImage out(rows, cols);
    for (auto at : live)
        out(static_cast<int>(at / stride) - 1, static_cast<int>(at % stride) - 1) = 1;
    return out;
}

}  // namespace skeline
