#pragma once

#include <string>

#include "hsgan/serialize.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::dataio {

// .hsit table file: magic HSIT, version u16, little-endian counts as u64,
// spectra as raw 64-bit floats, trailing CRC-32.
inline constexpr std::uint16_t kTableFormatVersion = 1;

inline void write_table(const SpectraTable& t, const std::string& path) {
  t.validate();
  hsgan::detail::ByteWriter w;
  w.bytes("HSIT", 4);
  w.u16(kTableFormatVersion);
  w.u64(t.rows());
  w.u64(t.bands());
  for (double v : t.spectra.values) w.f64(v);
  for (std::uint16_t l : t.labels) w.u16(l);
  w.u8(t.has_coords() ? 1 : 0);
  for (const PixelCoord& c : t.coords) {
    w.u32(c.row);
    w.u32(c.col);
  }
  w.u8(t.origin.empty() ? 0 : 1);
  for (std::uint8_t o : t.origin) w.u8(o);
  w.u64(t.class_names.size());
  for (const auto& [id, name] : t.class_names) {
    w.u16(id);
    w.str(name);
  }
  w.append_crc32();
  w.write_file(path);
}

inline SpectraTable read_table(const std::string& path) {
  auto r = hsgan::detail::ByteReader::from_file(path);
  r.check_crc32();
  r.expect_magic("HSIT");
  const std::uint16_t version = r.u16();
  if (version != kTableFormatVersion) {
    throw VersionError("unsupported .hsit version " + std::to_string(version));
  }
  SpectraTable t;
  const std::uint64_t rows = r.u64();
  const std::uint64_t bands = r.u64();
  t.spectra = Matrix(rows, bands);
  for (double& v : t.spectra.values) v = r.f64();
  t.labels.resize(rows);
  for (auto& l : t.labels) l = r.u16();
  if (r.u8() != 0) {
    t.coords.resize(rows);
    for (auto& c : t.coords) {
      c.row = r.u32();
      c.col = r.u32();
    }
  }
  if (r.u8() != 0) {
    t.origin.resize(rows);
    for (auto& o : t.origin) o = r.u8();
  }
  const std::uint64_t n_names = r.u64();
  for (std::uint64_t i = 0; i < n_names; ++i) {
    const std::uint16_t id = r.u16();
    t.class_names[id] = r.str();
  }
  if (!r.exhausted()) throw FormatError(".hsit file has trailing bytes");
  t.validate();
  return t;
}

}  // namespace hsgan::dataio
