#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skeline/thinning.hpp"

using namespace skeline;
using namespace skeline::testing;

TEST_CASE("all background is unchanged") {
    const BinaryImage img(6, 7);
    CHECK(thin_zhang_suen(img) == img);
}

TEST_CASE("isolated pixel is unchanged") {
    BinaryImage img(5, 5);
    img(2, 2) = 1;
    CHECK(thin_zhang_suen(img) == img);
}

TEST_CASE("3x9 rectangle thins to its horizontal centreline") {
    BinaryImage img(5, 11);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 9; ++c)
            img(r, c) = 1;
    // Worked by hand from the rule set. Subiteration 1 strips the bottom row,
    // the right column and the top-left corner. Subiteration 2 strips the rest
    // of the top row, (2,1) and (2,8). Row 2 from col 2 to col 7 remains, and
    // the next pair deletes nothing.
    const auto expected = from_ascii({
        "...........",
        "...........",
        "..######...",
        "...........",
        "...........",
    });
    CHECK(reference_thinning(img) == expected);
    CHECK(thin_zhang_suen(img) == expected);
}

TEST_CASE("rectangle touching the border") {
    BinaryImage img(3, 9, std::vector<std::uint8_t>(27, 1));
    CHECK(thin_zhang_suen(img) == reference_thinning(img));
}

TEST_CASE("hand-checkable shapes match the rule-application oracle") {
    const auto shapes = hand_checkable_shapes();
    CHECK(shapes.size() == 25);
    for (const auto& [name, img] : shapes) {
        CAPTURE(name);
        const auto thin = thin_zhang_suen(img);
        CHECK(thin == reference_thinning(img));
        CHECK(thin_zhang_suen(thin) == thin);
        CHECK(count_components_8(thin) == count_components_8(img));
    }
}

TEST_CASE("random blobs match the oracle and thinning is idempotent") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 150; ++i) {
        const auto img = random_blobs(rng, 4 + i % 13, 4 + (i * 7) % 13);
        const auto thin = thin_zhang_suen(img);
        CHECK(thin == reference_thinning(img));
        CHECK(thin_zhang_suen(thin) == thin);
    }
}

TEST_CASE("thinning never adds pixels or splits components") {
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
        const auto img = i % 2 ? random_thick_blob(rng, 16, 16) : random_blobs(rng, 16, 16);
        const auto thin = thin_zhang_suen(img);
        CHECK(count_components_8(thin) <= count_components_8(img));
        for (std::size_t k = 0; k < img.size(); ++k)
            CHECK(img.data()[k] >= thin.data()[k]);
    }
}

TEST_CASE("solid squares of side 3 and more keep one pixel") {
    for (int k = 3; k <= 8; ++k) {
        BinaryImage sq(k + 2, k + 2);
        for (int r = 1; r <= k; ++r)
            for (int c = 1; c <= k; ++c)
                sq(r, c) = 1;
        CHECK(thin_zhang_suen(sq).foreground_count() == 1);
    }
}

TEST_CASE("some compact blocks vanish entirely") {
    // Known property of the two-subiteration rule set, pinned so that a change
    // in behaviour is noticed.
    const auto square = from_ascii({"....", ".##.", ".##.", "...."});
    CHECK(thin_zhang_suen(square).foreground_count() == 0);
    CHECK(reference_thinning(square).foreground_count() == 0);

    const auto notched = from_ascii({
        ".......",
        ".####..",
        ".#####.",
        ".#####.",
        ".#####.",
        ".#####.",
        ".#####.",
        ".......",
    });
    CHECK(thin_zhang_suen(notched).foreground_count() == 0);
    CHECK(reference_thinning(notched).foreground_count() == 0);
}
