#pragma once

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::dataio {

// Sample floor(fraction * labeled count) labeled rows for training; remaining
// labeled rows are the test set. Unlabeled rows belong to neither side.
struct RandomFraction {
  double fraction = 0.03;
  std::uint64_t seed = 0;
};

enum class SplitAxis { Row, Col };

// Partition by pixel position: coordinate < boundary goes to train.
struct SpatialHalves {
  SplitAxis axis = SplitAxis::Col;
  std::uint32_t boundary = 0;
};

using SplitSpec = std::variant<RandomFraction, SpatialHalves>;

// Unlabeled rows excluded by a RandomFraction split stay retrievable here;
// a spatial split puts every row on one side, so `unlabeled` stays empty.
struct SplitResult {
  SpectraTable train;
  SpectraTable test;
  SpectraTable unlabeled;
};

inline SplitResult split(const SpectraTable& table, const SplitSpec& spec) {
  table.validate();
  SplitResult result;
  if (const auto* rf = std::get_if<RandomFraction>(&spec)) {
    if (!(rf->fraction > 0.0 && rf->fraction < 1.0)) {
      throw ContractError("split: fraction must be in (0,1)");
    }
    const std::vector<std::size_t> labeled = labeled_row_indices(table);
    if (labeled.empty()) {
      throw ContractError("split: random-fraction split requires labeled rows");
    }
    const std::size_t n_train =
        static_cast<std::size_t>(rf->fraction * static_cast<double>(labeled.size()));
    std::vector<std::size_t> pool = labeled;
    Rng rng(rf->seed);
    // Partial Fisher-Yates: the first n_train entries are the train sample.
    for (std::size_t i = 0; i < n_train; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.index(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> train_idx(pool.begin(), pool.begin() + n_train);
    std::vector<std::size_t> test_idx(pool.begin() + n_train, pool.end());
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    result.train = take_rows(table, train_idx);
    result.test = take_rows(table, test_idx);
    result.unlabeled = take_rows(table, unlabeled_row_indices(table));
    return result;
  }

  const auto& sh = std::get<SpatialHalves>(spec);
  if (!table.has_coords()) {
    throw ContractError("split: spatial split requires pixel coordinates");
  }
  std::vector<std::size_t> train_idx, test_idx;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const std::uint32_t pos =
        sh.axis == SplitAxis::Col ? table.coords[i].col : table.coords[i].row;
    (pos < sh.boundary ? train_idx : test_idx).push_back(i);
  }
  if (train_idx.empty() || test_idx.empty()) {
    throw ContractError("split: boundary " + std::to_string(sh.boundary) +
                        " leaves one side of the image empty");
  }
  result.train = take_rows(table, train_idx);
  result.test = take_rows(table, test_idx);
  return result;
}

// Median coordinate along the axis; the paper-style default of two image halves.
inline SpatialHalves default_spatial_halves(const SpectraTable& table,
                                            SplitAxis axis = SplitAxis::Col) {
  if (!table.has_coords()) {
    throw ContractError("default_spatial_halves: table has no coordinates");
  }
  std::vector<std::uint32_t> pos(table.rows());
  for (std::size_t i = 0; i < table.rows(); ++i) {
    pos[i] = axis == SplitAxis::Col ? table.coords[i].col : table.coords[i].row;
  }
  std::sort(pos.begin(), pos.end());
  return SpatialHalves{axis, pos[pos.size() / 2]};
}

}  // namespace hsgan::dataio
