#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "hsgan/errors.hpp"
#include "hsgan/matrix.hpp"

namespace hsgan {

struct CrossEntropyResult {
  double loss = 0.0;   // mean over the batch
  Matrix logits_grad;  // (softmax - onehot) / batch
};

// Softmax cross-entropy over a batch of logit rows. `labels` are 0-based
// column indices into the logits.
inline CrossEntropyResult softmax_cross_entropy(const Matrix& logits,
                                                std::span<const std::size_t> labels) {
  if (labels.size() != logits.rows) {
    throw ShapeError("softmax_cross_entropy: " + std::to_string(labels.size()) +
                     " labels for " + std::to_string(logits.rows) + " logit rows");
  }
  if (logits.rows == 0) {
    throw ContractError("softmax_cross_entropy: empty batch");
  }
  for (std::size_t b = 0; b < labels.size(); ++b) {
    if (labels[b] >= logits.cols) {
      throw LabelError("softmax_cross_entropy: label " + std::to_string(labels[b]) +
                       " out of range for " + std::to_string(logits.cols) + " classes");
    }
  }

  CrossEntropyResult r;
  r.logits_grad = Matrix(logits.rows, logits.cols);
  const double inv_batch = 1.0 / static_cast<double>(logits.rows);
  double total = 0.0;
  for (std::size_t b = 0; b < logits.rows; ++b) {
    const double* z = logits.row(b);
    double* g = r.logits_grad.row(b);
    double zmax = z[0];
    for (std::size_t j = 1; j < logits.cols; ++j) zmax = std::max(zmax, z[j]);
    double sum = 0.0;
    for (std::size_t j = 0; j < logits.cols; ++j) sum += std::exp(z[j] - zmax);
    const double lse = zmax + std::log(sum);
    total += lse - z[labels[b]];
    for (std::size_t j = 0; j < logits.cols; ++j) {
      g[j] = std::exp(z[j] - lse) * inv_batch;
    }
    g[labels[b]] -= inv_batch;
  }
  r.loss = total * inv_batch;
  return r;
}

}  // namespace hsgan
