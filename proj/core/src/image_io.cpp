#include "lmm/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lmm/error.hpp"

namespace lmm::io {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::ranges::transform(ext, ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

std::vector<unsigned char> encode_bytes(const Image& img) {
  if (!encodable_8bit(img)) {
    throw PreconditionError(
        "image is not displayable as 8-bit (values must lie in [0, 255.5)); rescale it first");
  }
  std::vector<unsigned char> bytes(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    bytes[i] = static_cast<unsigned char>(std::floor(img[i] + 0.5));
  }
  return bytes;
}

Image from_bytes(int width, int height, const std::vector<unsigned char>& bytes,
                 GreyScale scale) {
  std::vector<double> pixels(bytes.begin(), bytes.end());
  Image img(width, height, std::move(pixels), scale);
  if (!img.within_lattice()) {
    throw PreconditionError("8-bit pixel values exceed the grey scale M");
  }
  return img;
}

// PGM header tokens are separated by whitespace; '#' starts a comment that
// runs to the end of the line.
std::string next_header_token(std::istream& in) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) return token;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  if (token.empty()) throw FormatError("PGM: truncated header");
  return token;
}

int parse_header_int(std::istream& in, const char* field) {
  const std::string token = next_header_token(in);
  if (token.empty() || !std::ranges::all_of(token, [](unsigned char c) { return std::isdigit(c); }) ||
      token.size() > 9) {
    throw FormatError(std::string("PGM: bad ") + field + " '" + token + "'");
  }
  return std::stoi(token);
}

// ---- PNG (libpng simplified API) ----------------------------------------

struct PngImage {
  png_image image{};
  PngImage() {
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;

  [[noreturn]] void fail(const std::filesystem::path& path) const {
    throw FormatError("PNG: " + std::string(image.message) + " ('" + path.string() + "')");
  }
};

Image read_png(const std::filesystem::path& path, GreyScale scale) {
  PngImage png;
  if (!png_image_begin_read_from_file(&png.image, path.string().c_str())) png.fail(path);
  if (png.image.format & PNG_FORMAT_FLAG_LINEAR) {
    throw FormatError("PNG: unsupported bit depth 16 ('" + path.string() + "')");
  }
  const bool colour = (png.image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.image.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const auto width = static_cast<int>(png.image.width);
  const auto height = static_cast<int>(png.image.height);
  std::vector<unsigned char> raw(PNG_IMAGE_SIZE(png.image));
  if (!png_image_finish_read(&png.image, nullptr, raw.data(), 0, nullptr)) png.fail(path);

  if (!colour) return from_bytes(width, height, raw, scale);

  std::vector<unsigned char> grey(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (std::size_t i = 0; i < grey.size(); ++i) {
    const unsigned char* p = raw.data() + 3 * i;
    const double luma = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
    grey[i] = static_cast<unsigned char>(std::clamp(std::floor(luma + 0.5), 0.0, 255.0));
  }
  return from_bytes(width, height, grey, scale);
}

void write_png(const Image& img, const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = encode_bytes(img);
  PngImage png;
  png.image.width = static_cast<png_uint_32>(img.width());
  png.image.height = static_cast<png_uint_32>(img.height());
  png.image.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png.image, path.string().c_str(), 0, bytes.data(), 0, nullptr)) {
    png.fail(path);
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

bool encodable_8bit(const Image& img) noexcept {
  return std::ranges::all_of(img.pixels(), [](double v) { return v >= 0.0 && v < 255.5; });
}

Image read_pgm(std::istream& in, GreyScale scale) {
  if (next_header_token(in) != "P5") throw FormatError("PGM: expected magic 'P5'");
  const int width = parse_header_int(in, "width");
  const int height = parse_header_int(in, "height");
  const int maxval = parse_header_int(in, "maxval");
  if (width <= 0 || height <= 0) throw FormatError("PGM: non-positive dimensions");
  if (maxval != 255) {
    throw FormatError("PGM: unsupported maxval " + std::to_string(maxval) + " (need 255)");
  }
  // next_header_token consumed exactly one whitespace byte after maxval.
  std::vector<unsigned char> bytes(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    throw FormatError("PGM: truncated pixel data");
  }
  return from_bytes(width, height, bytes, scale);
}

void write_pgm(std::ostream& out, const Image& img) {
  const std::vector<unsigned char> bytes = encode_bytes(img);
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("PGM: write failed");
}

Image load_image(const std::filesystem::path& path, GreyScale scale) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") return read_png(path, scale);
  if (ext == ".pgm") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    return read_pgm(in, scale);
  }
  throw FormatError("unsupported image extension '" + ext + "' (use .pgm or .png)");
}

void save_image(const Image& img, const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    write_png(img, path);
    return;
  }
  if (ext == ".pgm") {
    encode_bytes(img);  // validate before creating the file
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    write_pgm(out, img);
    return;
  }
  throw FormatError("unsupported image extension '" + ext + "' (use .pgm or .png)");
}

void write_signal_csv(std::ostream& out, const Image& signal) {
  out << "x,value\n";
  for (std::size_t i = 0; i < signal.size(); ++i) {
    out << i << ',' << format_value(signal[i]) << '\n';
  }
  if (!out) throw FormatError("CSV: write failed");
}

void write_signal_csv(const Image& signal, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  write_signal_csv(out, signal);
}

Image read_signal_csv(std::istream& in, GreyScale scale) {
  std::string line;
  if (!std::getline(in, line) || line != "x,value") {
    throw FormatError("CSV: expected header 'x,value'");
  }
  std::vector<double> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("CSV: missing comma in '" + line + "'");
    const std::string index = line.substr(0, comma);
    if (index != std::to_string(samples.size())) {
      throw FormatError("CSV: expected sample index " + std::to_string(samples.size()));
    }
    const std::string value = line.substr(comma + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size() || std::isnan(v)) {
      throw FormatError("CSV: bad value '" + value + "'");
    }
    samples.push_back(v);
  }
  if (samples.empty()) throw FormatError("CSV: no samples");
  return Image::signal(std::move(samples), scale);
}

}  // namespace lmm::io
