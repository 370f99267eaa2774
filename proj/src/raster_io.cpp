#include "skeline/raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeline/errors.hpp"

namespace skeline {

namespace {

constexpr std::array<std::uint8_t, 8> kPngMagic = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
constexpr int kMnistSide = 28;

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<std::uint8_t>(std::clamp(std::lround(y), 0L, 255L));
}

// ---------------------------------------------------------------------------
// PNG

struct PngReadState {
    std::span<const std::uint8_t> bytes;
    std::size_t offset = 0;
    std::string error;
};

void png_read_from_span(png_structp png, png_bytep out, png_size_t length) {
    auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
    if (state->offset + length > state->bytes.size()) {
        state->offset = state->bytes.size();
        png_error(png, "unexpected end of data");
    }
    std::memcpy(out, state->bytes.data() + state->offset, length);
    state->offset += length;
}

void png_on_error(png_structp png, png_const_charp message) {
    auto* state = static_cast<PngReadState*>(png_get_error_ptr(png));
    state->error = message;
    png_longjmp(png, 1);
}

void png_on_warning(png_structp, png_const_charp) {}

// Everything that needs cleanup across the longjmp boundary lives outside this
// function; it only touches POD locals.
bool decode_png_rows(png_structp png, png_infop info, std::vector<std::uint8_t>& pixels,
                     std::vector<png_bytep>& rows, png_uint_32& width, png_uint_32& height, int& channels) {
    if (setjmp(png_jmpbuf(png)))
        return false;

    png_read_info(png, info);
    width = png_get_image_width(png, info);
    height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (bit_depth == 16)
        png_set_strip_16(png);
    if (color_type & PNG_COLOR_MASK_ALPHA)
        png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    channels = png_get_channels(png, info);
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    pixels.assign(rowbytes * height, 0);
    rows.assign(height, nullptr);
    for (png_uint_32 r = 0; r < height; ++r)
        rows[r] = pixels.data() + r * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    return true;
}

GrayImage decode_png(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kPngMagic.size() || !std::equal(kPngMagic.begin(), kPngMagic.end(), bytes.begin()))
        throw DecodeError("missing PNG signature", 0);

    PngReadState state{bytes, 0, {}};
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, png_on_error, png_on_warning);
    if (png == nullptr)
        throw std::runtime_error("libpng initialisation failed");
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("libpng initialisation failed");
    }
    png_set_read_fn(png, &state, png_read_from_span);

    std::vector<std::uint8_t> pixels;
    std::vector<png_bytep> row_ptrs;
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    int channels = 0;
    const bool ok = decode_png_rows(png, info, pixels, row_ptrs, width, height, channels);
    png_destroy_read_struct(&png, &info, nullptr);
    if (!ok)
        throw DecodeError("PNG decode failed: " + state.error, state.offset);
    if (width == 0 || height == 0)
        throw DecodeError("PNG has zero size", state.offset);

    const int rows = static_cast<int>(height);
    const int cols = static_cast<int>(width);
    std::vector<std::uint8_t> gray(static_cast<std::size_t>(rows) * cols);
    for (std::size_t i = 0; i < gray.size(); ++i) {
        const std::uint8_t* p = pixels.data() + i * channels;
        gray[i] = channels >= 3 ? luma(p[0], p[1], p[2]) : p[0];
    }
    return GrayImage(rows, cols, std::move(gray));
}

// ---------------------------------------------------------------------------
// PGM

class PgmCursor {
public:
    explicit PgmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const noexcept { return pos_; }

    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    unsigned long read_uint(const char* what) {
        skip_separators();
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 0xFFFFFFFFul)
                throw DecodeError(std::string("PGM ") + what + " out of range", start);
            ++pos_;
        }
        if (pos_ == start)
            throw DecodeError(std::string("expected PGM ") + what, start);
        return value;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        throw DecodeError("missing PGM magic (P2/P5)", 0);
    const bool binary = bytes[1] == '5';

    PgmCursor cur(bytes);
    cur.advance(2);
    const auto width = cur.read_uint("width");
    const auto height = cur.read_uint("height");
    const std::size_t maxval_at = cur.offset();
    const auto maxval = cur.read_uint("maxval");
    if (width == 0 || height == 0)
        throw DecodeError("PGM has zero size", maxval_at);
    if (maxval == 0 || maxval > 65535)
        throw DecodeError("PGM maxval must be in [1, 65535]", maxval_at);

    const auto rescale = [maxval](unsigned long v) -> std::uint8_t {
        if (maxval == 255)
            return static_cast<std::uint8_t>(v);
        return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
    };

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> data(count);
    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        if (cur.offset() >= bytes.size() || !std::isspace(bytes[cur.offset()]))
            throw DecodeError("expected whitespace after PGM header", cur.offset());
        cur.advance(1);
        const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
        const auto raster = cur.rest();
        if (raster.size() < count * sample_bytes)
            throw DecodeError("truncated PGM raster", bytes.size());
        for (std::size_t i = 0; i < count; ++i) {
            unsigned long v = sample_bytes == 2 ? (raster[2 * i] << 8u) | raster[2 * i + 1] : raster[i];
            if (v > maxval)
                throw DecodeError("PGM sample exceeds maxval", cur.offset() + i * sample_bytes);
            data[i] = rescale(v);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_separators();
            const std::size_t at = cur.offset();
            if (at >= bytes.size())
                throw DecodeError("truncated PGM raster", at);
            const auto v = cur.read_uint("sample");
            if (v > maxval)
                throw DecodeError("PGM sample exceeds maxval", at);
            data[i] = rescale(v);
        }
    }
    return GrayImage(static_cast<int>(height), static_cast<int>(width), std::move(data));
}

// ---------------------------------------------------------------------------
// CSV grid

GrayImage decode_csv(std::span<const std::uint8_t> bytes) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::uint8_t> row;
    std::size_t pos = 0;
    const auto n = bytes.size();

    auto skip_blanks = [&] {
        while (pos < n && (bytes[pos] == ' ' || bytes[pos] == '\t' || bytes[pos] == '\r'))
            ++pos;
    };

    while (pos < n) {
        skip_blanks();
        if (pos < n && bytes[pos] == '\n') {  // blank line
            ++pos;
            continue;
        }
        if (pos >= n)
            break;
        row.clear();
        while (true) {
            skip_blanks();
            const std::size_t start = pos;
            unsigned value = 0;
            while (pos < n && std::isdigit(bytes[pos])) {
                value = value * 10 + (bytes[pos] - '0');
                if (value > 255)
                    throw DecodeError("CSV value exceeds 255", start);
                ++pos;
            }
            if (pos == start)
                throw DecodeError("expected an integer in CSV grid", start);
            row.push_back(static_cast<std::uint8_t>(value));
            skip_blanks();
            if (pos < n && bytes[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos >= n || bytes[pos] == '\n') {
                if (pos < n)
                    ++pos;
                break;
            }
            throw DecodeError("unexpected character in CSV grid", pos);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw DecodeError("ragged CSV grid: row " + std::to_string(rows.size()) + " has " +
                                  std::to_string(row.size()) + " values, expected " +
                                  std::to_string(rows.front().size()),
                              pos);
        rows.push_back(row);
    }
    if (rows.empty())
        throw DecodeError("empty CSV grid", 0);

    if (rows.size() == 1 && rows.front().size() == kMnistSide * kMnistSide)
        return GrayImage(kMnistSide, kMnistSide, rows.front());

    std::vector<std::uint8_t> data;
    data.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows)
        data.insert(data.end(), r.begin(), r.end());
    return GrayImage(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), std::move(data));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

std::optional<ImageFormat> detect_format(std::span<const std::uint8_t> bytes, const std::filesystem::path& hint) {
    if (bytes.size() >= kPngMagic.size() && std::equal(kPngMagic.begin(), kPngMagic.end(), bytes.begin()))
        return ImageFormat::Png;
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5'))
        return ImageFormat::Pgm;
    const auto ext = lower(hint.extension().string());
    if (ext == ".csv" || ext == ".txt")
        return ImageFormat::CsvGrid;
    if (ext == ".png")
        return ImageFormat::Png;
    if (ext == ".pgm")
        return ImageFormat::Pgm;
    return std::nullopt;
}

GrayImage load_gray(std::span<const std::uint8_t> bytes, ImageFormat format) {
    switch (format) {
    case ImageFormat::Png: return decode_png(bytes);
    case ImageFormat::Pgm: return decode_pgm(bytes);
    case ImageFormat::CsvGrid: return decode_csv(bytes);
    }
    throw FormatError("unknown image format");
}

GrayImage load_gray(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    const auto format = detect_format(bytes, path);
    if (!format)
        throw FormatError("unsupported image format: " + path.string());
    return load_gray(bytes, *format);
}

void save_png(const std::filesystem::path& path, const GrayImage& img) {
    FILE* fp = std::fopen(path.c_str(), "wb");
    if (fp == nullptr)
        throw std::runtime_error("cannot write " + path.string());

    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.cols());
    image.height = static_cast<png_uint_32>(img.rows());
    image.format = PNG_FORMAT_GRAY;
    const int ok = png_image_write_to_stdio(&image, fp, 0, img.data().data(), 0, nullptr);
    std::fclose(fp);
    if (!ok)
        throw std::runtime_error("PNG encode failed: " + std::string(image.message));
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << "P5\n" << img.cols() << ' ' << img.rows() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data().data()), static_cast<std::streamsize>(img.size()));
}

std::optional<int> otsu_threshold(const GrayImage& img) {
    std::array<std::uint64_t, 256> hist{};
    for (auto v : img.data())
        ++hist[v];

    const auto total = static_cast<double>(img.size());
    double total_sum = 0;
    for (int v = 0; v < 256; ++v)
        total_sum += static_cast<double>(v) * static_cast<double>(hist[v]);

    // Class "below" holds intensities < t. Between-class variance up to the
    // constant factor 1/N^2 is (N*S0 - T*w0)^2 / (w0 * w1).
    std::optional<int> best;
    double best_score = -1;
    std::uint64_t w0 = 0;
    double s0 = 0;
    for (int t = 1; t < 256; ++t) {
        w0 += hist[t - 1];
        s0 += static_cast<double>(t - 1) * static_cast<double>(hist[t - 1]);
        const auto w1 = img.size() - w0;
        if (w0 == 0 || w1 == 0)
            continue;
        const double d = total * s0 - total_sum * static_cast<double>(w0);
        const double score = d * d / (static_cast<double>(w0) * static_cast<double>(w1));
        if (score > best_score) {
            best_score = score;
            best = t;
        }
    }
    return best;
}

BinaryImage binarize_fixed(const GrayImage& img, int threshold, Polarity polarity) {
    if (threshold < 0 || threshold > 255)
        throw std::invalid_argument("threshold must be in [0, 255]");
    const bool dark = polarity == Polarity::ForegroundDark;
    std::vector<std::uint8_t> out(img.size());
    std::transform(img.data().begin(), img.data().end(), out.begin(), [&](std::uint8_t v) -> std::uint8_t {
        const bool above = v >= threshold;
        return dark ? !above : above;
    });
    return BinaryImage(img.rows(), img.cols(), std::move(out));
}

BinaryImage binarize_otsu(const GrayImage& img, Polarity polarity) {
    const auto t = otsu_threshold(img);
    if (!t) {
        if (polarity == Polarity::Auto)
            throw DegenerateHistogramError("image has a single intensity; supply a fixed threshold or polarity");
        return BinaryImage(img.rows(), img.cols());
    }
    if (polarity == Polarity::Auto) {
        const auto above = std::count_if(img.data().begin(), img.data().end(), [&](auto v) { return v >= *t; });
        const auto below = static_cast<std::ptrdiff_t>(img.size()) - above;
        polarity = above <= below ? Polarity::ForegroundBright : Polarity::ForegroundDark;
    }
    return binarize_fixed(img, *t, polarity);
}

BinaryImage invert(const BinaryImage& img) {
    std::vector<std::uint8_t> out(img.size());
    std::transform(img.data().begin(), img.data().end(), out.begin(), [](std::uint8_t v) -> std::uint8_t { return v ^ 1u; });
    return BinaryImage(img.rows(), img.cols(), std::move(out));
}

GrayImage to_gray(const BinaryImage& img) {
    std::vector<std::uint8_t> out(img.size());
    std::transform(img.data().begin(), img.data().end(), out.begin(), [](std::uint8_t v) -> std::uint8_t { return v ? 255 : 0; });
    return GrayImage(img.rows(), img.cols(), std::move(out));
}

Polarity parse_polarity(std::string_view name) {
    if (name == "auto")
        return Polarity::Auto;
    if (name == "bright" || name == "foreground-bright")
        return Polarity::ForegroundBright;
    if (name == "dark" || name == "foreground-dark")
        return Polarity::ForegroundDark;
    throw std::invalid_argument("unknown polarity: " + std::string(name));
}

}  // namespace skeline
