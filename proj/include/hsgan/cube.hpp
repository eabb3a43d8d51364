#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "hsgan/errors.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::dataio {

enum class Interleave { BandSequential, PixelInterleaved };
enum class CubeDtype { U16, F32 };  // little-endian on disk

struct CubeHeader {
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t bands = 0;
  Interleave interleave = Interleave::BandSequential;
  CubeDtype dtype = CubeDtype::U16;
  std::optional<double> scale_hint;  // declared max reflectance

  std::size_t bytes_per_value() const { return dtype == CubeDtype::U16 ? 2 : 4; }
  std::size_t pixels() const { return height * width; }
  std::size_t payload_bytes() const { return pixels() * bands * bytes_per_value(); }
};

// Plain-text header: one `key: value` per line, keys height/width/bands/
// interleave/dtype plus optional scale. Blank lines and `#` comments allowed;
// anything else is rejected.
inline CubeHeader parse_cube_header(const std::string& text) {
  CubeHeader h;
  bool saw_height = false, saw_width = false, saw_bands = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw FormatError("cube header line " + std::to_string(lineno) + ": expected `key: value`");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (value.empty()) throw FormatError("cube header: empty value for `" + key + "`");
    auto parse_count = [&](const char* name) {
      try {
        const long long v = std::stoll(value);
        if (v <= 0) throw FormatError("cube header: " + std::string(name) + " must be positive");
        return static_cast<std::size_t>(v);
      } catch (const std::invalid_argument&) {
        throw FormatError("cube header: bad number for `" + std::string(name) + "`");
      }
    };
    if (key == "height") {
      h.height = parse_count("height");
      saw_height = true;
    } else if (key == "width") {
      h.width = parse_count("width");
      saw_width = true;
    } else if (key == "bands") {
      h.bands = parse_count("bands");
      saw_bands = true;
    } else if (key == "interleave") {
      if (value == "bsq") {
        h.interleave = Interleave::BandSequential;
      } else if (value == "bip") {
        h.interleave = Interleave::PixelInterleaved;
      } else {
        throw FormatError("cube header: unknown interleave `" + value + "` (expected bsq|bip)");
      }
    } else if (key == "dtype") {
      if (value == "u16") {
        h.dtype = CubeDtype::U16;
      } else if (value == "f32") {
        h.dtype = CubeDtype::F32;
      } else {
        throw FormatError("cube header: unknown dtype `" + value + "` (expected u16|f32)");
      }
    } else if (key == "scale") {
      h.scale_hint = std::stod(value);
    } else {
      throw FormatError("cube header: unknown key `" + key + "`");
    }
  }
  if (!saw_height || !saw_width || !saw_bands) {
    throw FormatError("cube header: height, width and bands are required");
  }
  return h;
}

namespace detail {

inline double decode_value(const std::uint8_t* p, CubeDtype dtype) {
  if (dtype == CubeDtype::U16) {
    const std::uint16_t v = static_cast<std::uint16_t>(p[0]) |
                            static_cast<std::uint16_t>(p[1]) << 8;
    return static_cast<double>(v);
  }
  std::uint32_t bits = 0;
  std::memcpy(&bits, p, 4);
  if constexpr (std::endian::native == std::endian::big) {
    bits = __builtin_bswap32(bits);
  }
  float f;
  std::memcpy(&f, &bits, 4);
  return static_cast<double>(f);
}

}  // namespace detail

// Flatten a cube into one spectrum per pixel. Values are copied as stored --
// normalization is a separate step. Pixel (r, c) keeps its coordinates so
// spatial splits stay possible.
inline SpectraTable load_cube(const CubeHeader& header, std::span<const std::uint8_t> payload,
                              std::span<const std::uint16_t> labels) {
  if (payload.size() != header.payload_bytes()) {
    throw FormatError("cube payload: expected " + std::to_string(header.payload_bytes()) +
                      " bytes, got " + std::to_string(payload.size()));
  }
  if (labels.size() != header.pixels()) {
    throw FormatError("cube labels: expected " + std::to_string(header.pixels()) +
                      " entries, got " + std::to_string(labels.size()));
  }
  SpectraTable t;
  t.spectra = Matrix(header.pixels(), header.bands);
  t.labels.assign(labels.begin(), labels.end());
  t.coords.resize(header.pixels());
  const std::size_t bpv = header.bytes_per_value();
  for (std::size_t r = 0; r < header.height; ++r) {
    for (std::size_t c = 0; c < header.width; ++c) {
      const std::size_t pixel = r * header.width + c;
      t.coords[pixel] = PixelCoord{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)};
      double* row = t.spectra.row(pixel);
      for (std::size_t b = 0; b < header.bands; ++b) {
        const std::size_t index = header.interleave == Interleave::BandSequential
                                      ? b * header.pixels() + pixel
                                      : pixel * header.bands + b;
        row[b] = detail::decode_value(payload.data() + index * bpv, header.dtype);
      }
    }
  }
  return t;
}

}  // namespace hsgan::dataio
