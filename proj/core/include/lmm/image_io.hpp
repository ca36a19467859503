#pragma once

#include <filesystem>
#include <iosfwd>

#include "lmm/image.hpp"

namespace lmm::io {

// 8-bit greyscale image files. A stored value k in {0..255} loads as the
// grey value k; saving rounds half-up and therefore requires every pixel to
// lie in [0, 255.5). Use rescale_for_display() first for anything else.

/// Reads a binary PGM (P5, maxval 255).
[[nodiscard]] Image read_pgm(std::istream& in, GreyScale scale = GreyScale{});
void write_pgm(std::ostream& out, const Image& img);

/// Dispatches on the extension (.pgm or .png, case-insensitive).
/// Colour PNGs are converted by Rec. 601 luma; 16-bit PNGs are rejected.
[[nodiscard]] Image load_image(const std::filesystem::path& path, GreyScale scale = GreyScale{});
void save_image(const Image& img, const std::filesystem::path& path);

/// True if save_image() accepts the image.
[[nodiscard]] bool encodable_8bit(const Image& img) noexcept;

/// Signal CSV: header "x,value", one row per sample in row-major order,
/// values with 9 significant digits, LF line endings.
void write_signal_csv(std::ostream& out, const Image& signal);
void write_signal_csv(const Image& signal, const std::filesystem::path& path);
[[nodiscard]] Image read_signal_csv(std::istream& in, GreyScale scale = GreyScale{});

}  // namespace lmm::io
