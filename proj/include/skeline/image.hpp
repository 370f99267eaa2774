#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace skeline {

/// Row/column position of a pixel.
struct Pixel {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// Dense row-major 8-bit raster. Shared storage for gray and binary images.
template <class Derived>
class Raster {
public:
    Raster(int rows, int cols, std::uint8_t fill = 0) : Raster(rows, cols, std::vector<std::uint8_t>(checked_size(rows, cols), fill)) {}

    Raster(int rows, int cols, std::vector<std::uint8_t> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != checked_size(rows, cols))
            throw std::invalid_argument("raster data length does not match rows x cols");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    bool contains(int row, int col) const noexcept { return row >= 0 && row < rows_ && col >= 0 && col < cols_; }

    std::uint8_t operator()(int row, int col) const { return data_[index(row, col)]; }
    std::uint8_t& operator()(int row, int col) { return data_[index(row, col)]; }

    const std::vector<std::uint8_t>& data() const noexcept { return data_; }

    friend bool operator==(const Raster&, const Raster&) = default;

protected:
    std::vector<std::uint8_t>& mutable_data() noexcept { return data_; }

private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("raster dimensions must be positive");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t index(int row, int col) const noexcept {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col);
    }

    int rows_;
    int cols_;
    std::vector<std::uint8_t> data_;
};

/// Intensities in [0, 255].
class GrayImage : public Raster<GrayImage> {
public:
    using Raster::Raster;
};

/// Foreground flags, each exactly 0 or 1. Also carries skeletons.
class BinaryImage : public Raster<BinaryImage> {
public:
    BinaryImage(int rows, int cols) : Raster(rows, cols, std::uint8_t{0}) {}

    BinaryImage(int rows, int cols, std::vector<std::uint8_t> data) : Raster(rows, cols, std::move(data)) {
        for (auto v : this->data())
            if (v > 1)
                throw std::invalid_argument("binary image values must be 0 or 1");
    }

    std::size_t foreground_count() const noexcept {
        std::size_t n = 0;
        for (auto v : data())
            n += v;
        return n;
    }
};

}  // namespace skeline
