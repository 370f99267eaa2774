#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>

#include "skeline/image.hpp"

namespace skeline {

enum class ImageFormat { Png, Pgm, CsvGrid };

enum class Polarity {
    Auto,              ///< minority class is foreground
    ForegroundBright,  ///< intensity >= t is foreground
    ForegroundDark,    ///< intensity < t is foreground
};

/// Guess the format from magic bytes, falling back to the file extension.
std::optional<ImageFormat> detect_format(std::span<const std::uint8_t> bytes, const std::filesystem::path& hint = {});

/// Decode an image and reduce it to 8-bit luma.
///
/// RGB sources are converted with round(0.299 R + 0.587 G + 0.114 B). Alpha is
/// discarded. PGM files with maxval other than 255 are rescaled to [0, 255].
/// A CSV grid holds one image row per line; a single line of exactly 784 values
/// is read as a 28 x 28 digit raster.
///
/// Throws DecodeError (with byte offset) on malformed input.
GrayImage load_gray(std::span<const std::uint8_t> bytes, ImageFormat format);

/// Reads a file and decodes it. Throws FormatError if the format is not recognised
/// and std::runtime_error if the file cannot be read.
GrayImage load_gray(const std::filesystem::path& path);

void save_png(const std::filesystem::path& path, const GrayImage& img);
void save_pgm(const std::filesystem::path& path, const GrayImage& img);

/// Threshold maximizing between-class variance, where the classes are
/// {v < t} and {v >= t} for t in [1, 255]. Ties go to the smallest t.
/// Returns nullopt when fewer than two histogram bins are occupied.
std::optional<int> otsu_threshold(const GrayImage& img);

/// Otsu binarization. Under Polarity::Auto the class with fewer pixels becomes
/// foreground (bright wins an exact tie); a constant image then throws
/// DegenerateHistogramError. With an explicit polarity a constant image has no
/// foreground.
BinaryImage binarize_otsu(const GrayImage& img, Polarity polarity = Polarity::Auto);

/// Pointwise threshold. Auto is treated as ForegroundBright.
BinaryImage binarize_fixed(const GrayImage& img, int threshold, Polarity polarity);

BinaryImage invert(const BinaryImage& img);

/// Maps foreground to 255 and background to 0.
GrayImage to_gray(const BinaryImage& img);

Polarity parse_polarity(std::string_view name);

}  // namespace skeline
