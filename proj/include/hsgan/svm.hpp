#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::analysis {

using dataio::SpectraTable;

struct SvmConfig {
  double regularization = 1e-2;
  std::size_t epochs = 50;
  std::uint64_t seed = 0;
};

struct Hyperplane {
  std::vector<double> weights;
  double bias = 0.0;
};

// One-vs-rest linear SVM: one hyperplane per class present in training.
struct LinearSvmModel {
  std::vector<std::uint16_t> classes;  // ascending
  std::vector<Hyperplane> hyperplanes;
  SvmConfig config;
};

namespace detail {

// Pegasos-style stochastic subgradient descent on the L2-regularized hinge
// loss, with tail averaging over the second half of the updates. The bias is
// treated as a constant-1 feature (regularized with the weights); leaving it
// unregularized lets the 1/(lambda*t) schedule blow it up on the first step.
inline Hyperplane train_binary_hyperplane(const SpectraTable& table,
                                          const std::vector<std::size_t>& rows,
                                          std::uint16_t positive_class, const SvmConfig& config,
                                          std::uint64_t seed) {
  const double lambda = config.regularization;
  const std::size_t bands = table.bands();
  Hyperplane h;
  h.weights.assign(bands, 0.0);
  std::vector<double> avg_w(bands, 0.0);
  double avg_b = 0.0;
  std::size_t avg_n = 0;
  const std::size_t total_updates = config.epochs * rows.size();
  const std::size_t avg_start = total_updates / 2;

  Rng rng(seed);
  std::vector<std::size_t> order = rows;
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    for (const std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double y = table.labels[i] == positive_class ? 1.0 : -1.0;
      const double* x = table.spectra.row(i);
      double score = h.bias;
      for (std::size_t j = 0; j < bands; ++j) score += h.weights[j] * x[j];
      const double shrink = 1.0 - eta * lambda;
      if (y * score < 1.0) {
        for (std::size_t j = 0; j < bands; ++j) {
          h.weights[j] = shrink * h.weights[j] + eta * y * x[j];
        }
        h.bias = shrink * h.bias + eta * y;
      } else {
        for (double& w : h.weights) w *= shrink;
        h.bias *= shrink;
      }
      if (t > avg_start) {
        for (std::size_t j = 0; j < bands; ++j) avg_w[j] += h.weights[j];
        avg_b += h.bias;
        ++avg_n;
      }
    }
  }
  if (avg_n > 0) {
    for (std::size_t j = 0; j < bands; ++j) h.weights[j] = avg_w[j] / static_cast<double>(avg_n);
    h.bias = avg_b / static_cast<double>(avg_n);
  }
  return h;
}

}  // namespace detail

inline LinearSvmModel svm_train(const SpectraTable& table, const SvmConfig& config = {}) {
  table.validate();
  if (!(config.regularization > 0.0)) throw ContractError("svm_train: regularization must be > 0");
  if (config.epochs == 0) throw ContractError("svm_train: epochs must be >= 1");
  const std::vector<std::size_t> rows = dataio::labeled_row_indices(table);
  const std::vector<std::uint16_t> classes = dataio::present_classes(table);
  if (classes.size() < 2) {
    throw ContractError("svm_train: need at least 2 classes, got " +
                        std::to_string(classes.size()));
  }
  LinearSvmModel model;
  model.classes = classes;
  model.config = config;
  model.hyperplanes.reserve(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    model.hyperplanes.push_back(detail::train_binary_hyperplane(
        table, rows, classes[k], config, derive_seed(config.seed, k)));
  }
  return model;
}

// Argmax of the one-vs-rest scores; ties break toward the lower class id.
inline std::uint16_t svm_predict(const LinearSvmModel& model, const double* x,
                                 std::size_t bands) {
  if (model.classes.empty()) throw ContractError("svm_predict: empty model");
  std::uint16_t best_class = model.classes[0];
  double best_score = 0.0;
  for (std::size_t k = 0; k < model.classes.size(); ++k) {
    const Hyperplane& h = model.hyperplanes[k];
    if (h.weights.size() != bands) {
      throw ShapeError("svm_predict: model expects " + std::to_string(h.weights.size()) +
                       " bands, got " + std::to_string(bands));
    }
    double score = h.bias;
    for (std::size_t j = 0; j < bands; ++j) score += h.weights[j] * x[j];
    if (k == 0 || score > best_score) {  // strict: ties keep the lower id
      best_score = score;
      best_class = model.classes[k];
    }
  }
  return best_class;
}

// Fraction of labeled rows whose prediction matches the label.
inline double svm_accuracy(const LinearSvmModel& model, const SpectraTable& table) {
  const std::vector<std::size_t> rows = dataio::labeled_row_indices(table);
  if (rows.empty()) throw ContractError("svm_accuracy: no labeled rows");
  std::size_t correct = 0;
  for (const std::size_t i : rows) {
    if (svm_predict(model, table.spectra.row(i), table.bands()) == table.labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(rows.size());
}

// The Table-1 shape: accuracy of an SVM trained on {real,fake} train sets,
// evaluated on {real,fake} test sets.
struct SeparationGrid {
  double real_real = 0.0;
  double real_fake = 0.0;
  double fake_real = 0.0;
  double fake_fake = 0.0;
};

inline SeparationGrid separation_table(const SpectraTable& real_train,
                                       const SpectraTable& real_test,
                                       const SpectraTable& fake_train,
                                       const SpectraTable& fake_test,
                                       const SvmConfig& config = {}) {
  const std::size_t bands = real_train.bands();
  for (const SpectraTable* t : {&real_test, &fake_train, &fake_test}) {
    if (t->bands() != bands) {
      throw ShapeError("separation_table: band mismatch " + std::to_string(bands) + " vs " +
                       std::to_string(t->bands()));
    }
  }
  SvmConfig cfg_real = config;
  cfg_real.seed = derive_seed(config.seed, 0);
  SvmConfig cfg_fake = config;
  cfg_fake.seed = derive_seed(config.seed, 1);
  const LinearSvmModel on_real = svm_train(real_train, cfg_real);
  const LinearSvmModel on_fake = svm_train(fake_train, cfg_fake);
  SeparationGrid grid;
  grid.real_real = svm_accuracy(on_real, real_test);
  grid.real_fake = svm_accuracy(on_real, fake_test);
  grid.fake_real = svm_accuracy(on_fake, real_test);
  grid.fake_fake = svm_accuracy(on_fake, fake_test);
  return grid;
}

}  // namespace hsgan::analysis
