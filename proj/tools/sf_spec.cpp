#include "sf_spec.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lmm::cli {

namespace {

double parse_number(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("sf spec: bad number for '" + std::string(key) + "': '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

SfSpec parse_sf_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("sf spec: expected '<shape>:r=<float>[,a=<float>]', got '" +
                                std::string(text) + "'");
  }
  const std::string_view shape = text.substr(0, colon);
  SfSpec spec;
  if (shape == "hemisphere") {
    spec.shape = SfSpec::Shape::hemisphere;
  } else if (shape == "flat") {
    spec.shape = SfSpec::Shape::flat;
  } else {
    throw std::invalid_argument("sf spec: unknown shape '" + std::string(shape) +
                                "' (hemisphere or flat)");
  }

  std::optional<double> radius, amplitude;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("sf spec: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const double value = parse_number(key, item.substr(eq + 1));
    if (key == "r" && !radius) {
      radius = value;
    } else if (key == "a" && !amplitude && spec.shape == SfSpec::Shape::hemisphere) {
      amplitude = value;
    } else {
      throw std::invalid_argument("sf spec: unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (!radius) throw std::invalid_argument("sf spec: missing r=<radius>");
  if (!(*radius > 0.0)) throw std::invalid_argument("sf spec: radius must be positive");
  spec.radius = *radius;
  spec.amplitude = spec.shape == SfSpec::Shape::flat ? 0.0 : amplitude.value_or(*radius);
  if (spec.shape == SfSpec::Shape::hemisphere && !(spec.amplitude > 0.0)) {
    throw std::invalid_argument("sf spec: amplitude must be positive");
  }
  return spec;
}

StructuringFunction make_sf(const SfSpec& spec, SfKind kind, GreyScale scale) {
  if (spec.shape == SfSpec::Shape::flat) return flat_sf(spec.radius, kind);
  return hemisphere_sf(spec.radius, spec.amplitude, kind, scale);
}

std::string to_string(const SfSpec& spec) {
  std::ostringstream os;
  if (spec.shape == SfSpec::Shape::flat) {
    os << "flat:r=" << spec.radius;
  } else {
    os << "hemisphere:r=" << spec.radius << ",a=" << spec.amplitude;
  }
  return os.str();
}

}  // namespace lmm::cli
