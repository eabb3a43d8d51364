#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/matrix.hpp"

namespace hsgan::dataio {

struct PixelCoord {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  bool operator==(const PixelCoord&) const = default;
};

// Labeled spectra, one row per pixel. Label 0 is reserved for unlabeled rows.
// `origin` flags rows appended by augmentation (1 = synthetic).
struct SpectraTable {
  Matrix spectra;                                  // n x bands
  std::vector<std::uint16_t> labels;               // size n
  std::vector<PixelCoord> coords;                  // empty or size n
  std::vector<std::uint8_t> origin;                // empty or size n
  std::map<std::uint16_t, std::string> class_names;

  std::size_t rows() const { return spectra.rows; }
  std::size_t bands() const { return spectra.cols; }
  bool has_coords() const { return !coords.empty(); }

  // Count of real classes; valid labels are 0 (unlabeled) .. num_classes().
  std::uint16_t num_classes() const {
    std::uint16_t k = 0;
    for (std::uint16_t l : labels) k = std::max(k, l);
    for (const auto& [id, _] : class_names) k = std::max(k, id);
    return k;
  }

  bool row_is_fake(std::size_t i) const { return !origin.empty() && origin[i] != 0; }

  void validate() const {
    if (labels.size() != rows()) {
      throw ShapeError("spectra table: " + std::to_string(labels.size()) + " labels for " +
                       std::to_string(rows()) + " rows");
    }
    if (!coords.empty() && coords.size() != rows()) {
      throw ShapeError("spectra table: " + std::to_string(coords.size()) + " coords for " +
                       std::to_string(rows()) + " rows");
    }
    if (!origin.empty() && origin.size() != rows()) {
      throw ShapeError("spectra table: " + std::to_string(origin.size()) +
                       " origin flags for " + std::to_string(rows()) + " rows");
    }
  }
};

inline std::vector<std::size_t> labeled_row_indices(const SpectraTable& t) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.labels[i] != 0) idx.push_back(i);
  }
  return idx;
}

inline std::vector<std::size_t> unlabeled_row_indices(const SpectraTable& t) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.labels[i] == 0) idx.push_back(i);
  }
  return idx;
}

// Classes that actually occur in the table, ascending.
inline std::vector<std::uint16_t> present_classes(const SpectraTable& t) {
  std::vector<std::uint16_t> classes;
  for (std::uint16_t l : t.labels) {
    if (l != 0 && std::find(classes.begin(), classes.end(), l) == classes.end()) {
      classes.push_back(l);
    }
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

inline SpectraTable take_rows(const SpectraTable& t, const std::vector<std::size_t>& indices) {
  SpectraTable out;
  out.spectra = Matrix(indices.size(), t.bands());
  out.labels.resize(indices.size());
  if (t.has_coords()) out.coords.resize(indices.size());
  if (!t.origin.empty()) out.origin.resize(indices.size());
  out.class_names = t.class_names;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const std::size_t i = indices[k];
    std::copy(t.spectra.row(i), t.spectra.row(i) + t.bands(), out.spectra.row(k));
    out.labels[k] = t.labels[i];
    if (t.has_coords()) out.coords[k] = t.coords[i];
    if (!t.origin.empty()) out.origin[k] = t.origin[i];
  }
  return out;
}

// Stack rows of b under a. Coords/origin survive only if present on both.
inline SpectraTable concat_tables(const SpectraTable& a, const SpectraTable& b) {
  if (a.bands() != b.bands()) {
    throw ShapeError("concat_tables: " + std::to_string(a.bands()) + " vs " +
                     std::to_string(b.bands()) + " bands");
  }
  SpectraTable out;
  out.spectra = Matrix(a.rows() + b.rows(), a.bands());
  std::copy(a.spectra.values.begin(), a.spectra.values.end(), out.spectra.values.begin());
  std::copy(b.spectra.values.begin(), b.spectra.values.end(),
            out.spectra.values.begin() + static_cast<std::ptrdiff_t>(a.spectra.values.size()));
  out.labels = a.labels;
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  if (a.has_coords() && b.has_coords()) {
    out.coords = a.coords;
    out.coords.insert(out.coords.end(), b.coords.begin(), b.coords.end());
  }
  const bool need_origin = !a.origin.empty() || !b.origin.empty();
  if (need_origin) {
    out.origin.assign(a.rows() + b.rows(), 0);
    if (!a.origin.empty()) std::copy(a.origin.begin(), a.origin.end(), out.origin.begin());
    if (!b.origin.empty()) {
      std::copy(b.origin.begin(), b.origin.end(),
                out.origin.begin() + static_cast<std::ptrdiff_t>(a.rows()));
    }
  }
  out.class_names = a.class_names;
  for (const auto& [id, name] : b.class_names) out.class_names.emplace(id, name);
  return out;
}

// Affine map of the whole table onto [0,1]: global min -> 0, global max -> 1.
// One scale for all bands, so relative band shape is preserved. Idempotent on
// already-normalized data. A constant table maps to all zeros and reports a
// warning through `warning` when given.
inline SpectraTable normalize_reflectance(const SpectraTable& t, std::string* warning = nullptr) {
  if (t.rows() == 0) throw ContractError("normalize_reflectance: empty table");
  t.validate();
  double lo = t.spectra.values[0], hi = t.spectra.values[0];
  for (double v : t.spectra.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  SpectraTable out = t;
  if (hi == lo) {
    for (double& v : out.spectra.values) v = 0.0;
    if (warning) *warning = "normalize_reflectance: constant table, all values mapped to 0";
    return out;
  }
  if (lo == 0.0 && hi == 1.0) return out;  // already normalized, keep bits
  // Division (not multiplication by a reciprocal) so the extremes land on
  // exactly 0 and 1.
  const double range = hi - lo;
  for (double& v : out.spectra.values) v = (v - lo) / range;
  return out;
}

}  // namespace hsgan::dataio
