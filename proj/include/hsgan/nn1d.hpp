#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/losses.hpp"
#include "hsgan/mlp.hpp"
#include "hsgan/rmsprop.hpp"
#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::augment {

using dataio::SpectraTable;

// The downstream "NN 1D" classifier: a fully connected leaky-ReLU network on
// single spectra, cross-entropy loss, RMSprop. Defaults follow the GAN
// recipe (4 layers of 512); width/depth stay configurable for desk-scale runs.
struct Nn1dConfig {
  std::size_t epochs = 200;
  std::size_t batch_size = 64;
  double learning_rate = 5e-5;
  std::size_t hidden_width = 512;
  std::size_t n_layers = 4;
  double rmsprop_decay = 0.99;
  double rmsprop_epsilon = 1e-8;
  std::uint64_t seed = 0;

  void validate() const {
    if (epochs == 0) throw ConfigError("nn1d config: epochs must be >= 1");
    if (batch_size == 0) throw ConfigError("nn1d config: batch_size must be > 0");
    if (hidden_width == 0 || n_layers == 0) {
      throw ConfigError("nn1d config: hidden_width and n_layers must be > 0");
    }
    if (!(learning_rate >= 0.0)) throw ConfigError("nn1d config: learning_rate must be >= 0");
  }
};

inline MlpParams train_nn1d(const SpectraTable& table, const Nn1dConfig& config) {
  config.validate();
  table.validate();
  const std::vector<std::size_t> rows = dataio::labeled_row_indices(table);
  if (rows.empty()) throw ContractError("train_nn1d: no labeled rows");
  const std::uint16_t n_classes = table.num_classes();

  std::vector<std::size_t> dims;
  dims.push_back(table.bands());
  for (std::size_t l = 0; l + 1 < config.n_layers; ++l) dims.push_back(config.hidden_width);
  dims.push_back(n_classes);

  Rng init_rng(derive_seed(config.seed, 0));
  MlpParams net = make_mlp(dims, 0.2, OutputActivation::Logits, init_rng);
  RmspropState opt = make_rmsprop_state(net, config.learning_rate, config.rmsprop_decay,
                                        config.rmsprop_epsilon);

  Rng shuffle_rng(derive_seed(config.seed, 1));
  std::vector<std::size_t> order = rows;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    shuffle_rng.shuffle(order);
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t count = std::min(config.batch_size, order.size() - start);
      Matrix batch(count, table.bands());
      std::vector<std::size_t> labels(count);
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t i = order[start + k];
        std::copy(table.spectra.row(i), table.spectra.row(i) + table.bands(), batch.row(k));
        labels[k] = table.labels[i] - 1;
      }
      const auto fwd = mlp_forward(net, batch);
      const auto ce = softmax_cross_entropy(fwd.output, labels);
      const auto bwd = mlp_backward(net, fwd.cache, ce.logits_grad);
      rmsprop_step(net, bwd.param_grads, opt);
    }
  }
  return net;
}

// Argmax class ids (1-based); ties break toward the lower class id.
inline std::vector<std::uint16_t> predict_classes(const MlpParams& classifier,
                                                  const Matrix& spectra) {
  const Matrix logits = mlp_output(classifier, spectra);
  std::vector<std::uint16_t> out(spectra.rows);
  for (std::size_t i = 0; i < logits.rows; ++i) {
    const double* row = logits.row(i);
    std::size_t best = 0;
    for (std::size_t j = 1; j < logits.cols; ++j) {
      if (row[j] > row[best]) best = j;
    }
    out[i] = static_cast<std::uint16_t>(best + 1);
  }
  return out;
}

// Fraction of labeled rows classified correctly.
inline double overall_accuracy(const MlpParams& classifier, const SpectraTable& table) {
  const std::vector<std::size_t> rows = dataio::labeled_row_indices(table);
  if (rows.empty()) throw ContractError("overall_accuracy: no labeled rows");
  const SpectraTable labeled = dataio::take_rows(table, rows);
  const auto predicted = predict_classes(classifier, labeled.spectra);
  std::size_t correct = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (predicted[k] == labeled.labels[k]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(rows.size());
}

inline std::map<std::uint16_t, double> per_class_accuracy(const MlpParams& classifier,
                                                          const SpectraTable& table) {
  const std::vector<std::size_t> rows = dataio::labeled_row_indices(table);
  if (rows.empty()) throw ContractError("per_class_accuracy: no labeled rows");
  const SpectraTable labeled = dataio::take_rows(table, rows);
  const auto predicted = predict_classes(classifier, labeled.spectra);
  std::map<std::uint16_t, std::pair<std::size_t, std::size_t>> tally;  // correct, total
  for (std::size_t k = 0; k < labeled.rows(); ++k) {
    auto& [correct, total] = tally[labeled.labels[k]];
    ++total;
    correct += predicted[k] == labeled.labels[k];
  }
  std::map<std::uint16_t, double> out;
  for (const auto& [cls, counts] : tally) {
    out[cls] = static_cast<double>(counts.first) / static_cast<double>(counts.second);
  }
  return out;
}

}  // namespace hsgan::augment
