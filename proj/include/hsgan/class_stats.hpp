#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::analysis {

using dataio::SpectraTable;

// Per-class elementwise mean and population standard deviation.
struct ClassStats {
  std::uint16_t class_id = 0;
  std::vector<double> mean;
  std::vector<double> stdev;
  std::size_t count = 0;
};

struct ClassStatsResult {
  std::vector<ClassStats> stats;            // classes with at least one row, ascending id
  std::vector<std::uint16_t> skipped;       // declared classes with zero rows
};

inline ClassStatsResult class_stats(const SpectraTable& table) {
  table.validate();
  if (dataio::labeled_row_indices(table).empty()) {
    throw ContractError("class_stats: table has no labeled rows");
  }
  ClassStatsResult result;
  const std::uint16_t n_classes = table.num_classes();
  for (std::uint16_t c = 1; c <= n_classes; ++c) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < table.rows(); ++i) {
      if (table.labels[i] == c) rows.push_back(i);
    }
    if (rows.empty()) {
      result.skipped.push_back(c);
      continue;
    }
    ClassStats s;
    s.class_id = c;
    s.count = rows.size();
    s.mean.assign(table.bands(), 0.0);
    s.stdev.assign(table.bands(), 0.0);
    for (std::size_t i : rows) {
      const double* row = table.spectra.row(i);
      for (std::size_t b = 0; b < table.bands(); ++b) s.mean[b] += row[b];
    }
    const double n = static_cast<double>(rows.size());
    for (double& m : s.mean) m /= n;
    for (std::size_t i : rows) {
      const double* row = table.spectra.row(i);
      for (std::size_t b = 0; b < table.bands(); ++b) {
        const double d = row[b] - s.mean[b];
        s.stdev[b] += d * d;
      }
    }
    for (double& v : s.stdev) v = std::sqrt(v / n);  // population std
    result.stats.push_back(std::move(s));
  }
  return result;
}

}  // namespace hsgan::analysis
