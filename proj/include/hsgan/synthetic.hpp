#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::dataio {

// Bundled desk-scale dataset: Gaussian class prototypes plus noise on a small
// image grid, so the whole pipeline runs without any external data. Classes
// are laid out in a repeating tile pattern, which puts every class on both
// sides of any half-image split.
struct SyntheticSpec {
  std::size_t height = 32;
  std::size_t width = 32;
  std::size_t bands = 8;
  std::uint16_t n_classes = 4;
  double noise = 0.05;             // additive band noise
  double amplitude_jitter = 0.08;  // per-pixel multiplicative spread
  double unlabeled_fraction = 0.25;
  std::size_t tile = 8;  // class-patch edge length in pixels
  std::uint64_t seed = 1;
};

namespace detail {

inline double class_prototype(std::uint16_t class_id, double x) {
  // Distinct smooth curves per class: varying frequency and phase.
  const double freq = 0.5 + 0.5 * static_cast<double>(class_id);
  const double phase = 0.35 * static_cast<double>(class_id);
  return 0.5 + 0.3 * std::sin(2.0 * std::numbers::pi * (freq * x + phase));
}

}  // namespace detail

inline SpectraTable make_synthetic_table(const SyntheticSpec& spec) {
  if (spec.height == 0 || spec.width == 0 || spec.bands == 0 || spec.n_classes == 0) {
    throw ContractError("synthetic table: all dimensions must be positive");
  }
  if (spec.tile == 0) throw ContractError("synthetic table: tile must be positive");
  if (spec.unlabeled_fraction < 0.0 || spec.unlabeled_fraction >= 1.0) {
    throw ContractError("synthetic table: unlabeled_fraction must be in [0,1)");
  }
  Rng rng(spec.seed);
  const std::size_t n = spec.height * spec.width;
  SpectraTable t;
  t.spectra = Matrix(n, spec.bands);
  t.labels.resize(n);
  t.coords.resize(n);

  const std::size_t tiles_x = (spec.width + spec.tile - 1) / spec.tile;
  for (std::size_t r = 0; r < spec.height; ++r) {
    for (std::size_t c = 0; c < spec.width; ++c) {
      const std::size_t pixel = r * spec.width + c;
      t.coords[pixel] = PixelCoord{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)};
      const std::size_t tile_index = (r / spec.tile) * tiles_x + (c / spec.tile);
      const std::uint16_t class_id = static_cast<std::uint16_t>(1 + tile_index % spec.n_classes);
      t.labels[pixel] = class_id;
      const double amp = 1.0 + spec.amplitude_jitter * rng.normal();
      double* row = t.spectra.row(pixel);
      for (std::size_t b = 0; b < spec.bands; ++b) {
        const double x = spec.bands == 1
                             ? 0.0
                             : static_cast<double>(b) / static_cast<double>(spec.bands - 1);
        row[b] = amp * detail::class_prototype(class_id, x) + spec.noise * rng.normal();
      }
    }
  }

  // Hide a seeded fraction of labels; the spectra keep their class structure.
  const std::size_t n_unlabeled =
      static_cast<std::size_t>(spec.unlabeled_fraction * static_cast<double>(n));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  for (std::size_t i = 0; i < n_unlabeled; ++i) t.labels[order[i]] = 0;

  for (std::uint16_t c = 1; c <= spec.n_classes; ++c) {
    t.class_names[c] = "class-" + std::to_string(c);
  }
  return normalize_reflectance(t);
}

}  // namespace hsgan::dataio
