#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/matrix.hpp"
#include "hsgan/rng.hpp"

namespace hsgan {

enum class OutputActivation { Identity, Sigmoid, Logits };

inline const char* to_string(OutputActivation a) {
  switch (a) {
    case OutputActivation::Identity: return "identity";
    case OutputActivation::Sigmoid: return "sigmoid";
    case OutputActivation::Logits: return "logits";
  }
  return "?";
}

struct Layer {
  Matrix weight;             // in x out
  std::vector<double> bias;  // out
};

// Parameters of one fully connected network. Hidden layers apply LeakyReLU
// with `leaky_slope`; the final layer applies `output`. Logits means raw
// scores, softmax is applied by the loss.
struct MlpParams {
  std::vector<Layer> layers;
  double leaky_slope = 0.2;
  OutputActivation output = OutputActivation::Identity;

  std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().weight.rows; }
  std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().weight.cols; }

  void validate() const {
    if (layers.empty()) throw ShapeError("mlp: no layers");
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const Layer& lay = layers[l];
      if (lay.bias.size() != lay.weight.cols) {
        throw ShapeError("mlp layer " + std::to_string(l) + ": bias length " +
                         std::to_string(lay.bias.size()) + " vs weight " +
                         shape_str(lay.weight));
      }
      if (l > 0 && layers[l - 1].weight.cols != lay.weight.rows) {
        throw ShapeError("mlp layers " + std::to_string(l - 1) + "->" + std::to_string(l) +
                         ": " + shape_str(layers[l - 1].weight) + " does not chain with " +
                         shape_str(lay.weight));
      }
    }
  }
};

// Gradients with exactly the layer shapes of the parameters they belong to.
struct ParamGrads {
  std::vector<Layer> layers;
};

inline ParamGrads zero_grads_like(const MlpParams& p) {
  ParamGrads g;
  g.layers.reserve(p.layers.size());
  for (const Layer& l : p.layers) {
    g.layers.push_back(Layer{Matrix(l.weight.rows, l.weight.cols),
                             std::vector<double>(l.bias.size(), 0.0)});
  }
  return g;
}

inline void accumulate(ParamGrads& acc, const ParamGrads& g, double scale = 1.0) {
  if (acc.layers.size() != g.layers.size()) throw ShapeError("accumulate: layer count mismatch");
  for (std::size_t l = 0; l < acc.layers.size(); ++l) {
    Layer& a = acc.layers[l];
    const Layer& b = g.layers[l];
    if (!a.weight.same_shape(b.weight) || a.bias.size() != b.bias.size()) {
      throw ShapeError("accumulate: layer " + std::to_string(l) + " shape mismatch");
    }
    for (std::size_t i = 0; i < a.weight.values.size(); ++i) {
      a.weight.values[i] += scale * b.weight.values[i];
    }
    for (std::size_t i = 0; i < a.bias.size(); ++i) a.bias[i] += scale * b.bias[i];
  }
}

// Glorot-uniform weights in [-sqrt(6/(in+out)), +sqrt(6/(in+out))], zero biases.
inline MlpParams make_mlp(std::span<const std::size_t> dims, double leaky_slope,
                          OutputActivation output, Rng& rng) {
  if (dims.size() < 2) throw ShapeError("make_mlp: need at least input and output dims");
  MlpParams p;
  p.leaky_slope = leaky_slope;
  p.output = output;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    const std::size_t in = dims[l], out = dims[l + 1];
    Layer lay{Matrix(in, out), std::vector<double>(out, 0.0)};
    const double bound = std::sqrt(6.0 / static_cast<double>(in + out));
    for (double& w : lay.weight.values) w = rng.uniform(-bound, bound);
    p.layers.push_back(std::move(lay));
  }
  return p;
}

inline double leaky_relu(double z, double slope) { return z >= 0.0 ? z : slope * z; }
inline double leaky_relu_grad(double z, double slope) { return z >= 0.0 ? 1.0 : slope; }

inline double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

struct ForwardCache {
  Matrix input;
  std::vector<Matrix> pre;   // pre-activation per layer
  std::vector<Matrix> post;  // post-activation per layer
};

struct ForwardResult {
  Matrix output;
  ForwardCache cache;
};

namespace detail {

inline void apply_hidden_activation(Matrix& m, double slope) {
  for (double& v : m.values) v = leaky_relu(v, slope);
}

inline void apply_output_activation(Matrix& m, OutputActivation act) {
  if (act == OutputActivation::Sigmoid) {
    for (double& v : m.values) v = sigmoid(v);
  }
  // Identity and Logits leave the pre-activation untouched.
}

}  // namespace detail

inline ForwardResult mlp_forward(const MlpParams& p, const Matrix& input) {
  p.validate();
  if (input.cols != p.input_dim()) {
    throw ShapeError("mlp_forward: input " + shape_str(input) + " vs first layer " +
                     shape_str(p.layers.front().weight));
  }
  ForwardResult r;
  r.cache.input = input;
  const std::size_t n_layers = p.layers.size();
  r.cache.pre.reserve(n_layers);
  r.cache.post.reserve(n_layers);
  const Matrix* act = &input;
  for (std::size_t l = 0; l < n_layers; ++l) {
    Matrix z = matmul(*act, p.layers[l].weight);
    add_row_vector(z, p.layers[l].bias);
    r.cache.pre.push_back(z);  // keep pre-activation
    if (l + 1 < n_layers) {
      detail::apply_hidden_activation(z, p.leaky_slope);
    } else {
      detail::apply_output_activation(z, p.output);
    }
    r.cache.post.push_back(std::move(z));
    act = &r.cache.post.back();
  }
  r.output = r.cache.post.back();
  return r;
}

// Output only; skips the cache.
inline Matrix mlp_output(const MlpParams& p, const Matrix& input) {
  p.validate();
  if (input.cols != p.input_dim()) {
    throw ShapeError("mlp_output: input " + shape_str(input) + " vs first layer " +
                     shape_str(p.layers.front().weight));
  }
  Matrix act = input;
  const std::size_t n_layers = p.layers.size();
  for (std::size_t l = 0; l < n_layers; ++l) {
    Matrix z = matmul(act, p.layers[l].weight);
    add_row_vector(z, p.layers[l].bias);
    if (l + 1 < n_layers) {
      detail::apply_hidden_activation(z, p.leaky_slope);
    } else {
      detail::apply_output_activation(z, p.output);
    }
    act = std::move(z);
  }
  return act;
}

struct BackwardResult {
  ParamGrads param_grads;
  Matrix input_grad;
};

// Reverse-mode pass. `output_grad` is dLoss/dOutput (post output activation);
// returns dLoss/dParams and dLoss/dInput.
inline BackwardResult mlp_backward(const MlpParams& p, const ForwardCache& cache,
                                   const Matrix& output_grad) {
  p.validate();
  const std::size_t n_layers = p.layers.size();
  if (cache.pre.size() != n_layers || cache.post.size() != n_layers) {
    throw CacheError("mlp_backward: cache holds " + std::to_string(cache.pre.size()) +
                     " layers, params have " + std::to_string(n_layers));
  }
  if (cache.input.cols != p.input_dim()) {
    throw CacheError("mlp_backward: cached input " + shape_str(cache.input) +
                     " does not match first layer " + shape_str(p.layers.front().weight));
  }
  for (std::size_t l = 0; l < n_layers; ++l) {
    if (cache.pre[l].cols != p.layers[l].weight.cols || cache.pre[l].rows != cache.input.rows) {
      throw CacheError("mlp_backward: cached layer " + std::to_string(l) + " is " +
                       shape_str(cache.pre[l]) + ", expected batch x " +
                       std::to_string(p.layers[l].weight.cols));
    }
  }
  if (output_grad.rows != cache.input.rows || output_grad.cols != p.output_dim()) {
    throw ShapeError("mlp_backward: output_grad " + shape_str(output_grad) +
                     " vs expected " + std::to_string(cache.input.rows) + "x" +
                     std::to_string(p.output_dim()));
  }

  BackwardResult r;
  r.param_grads.layers.resize(n_layers);

  // dLoss/dZ for the top layer.
  Matrix g = output_grad;
  switch (p.output) {
    case OutputActivation::Sigmoid: {
      const Matrix& a = cache.post.back();
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        g.values[i] *= a.values[i] * (1.0 - a.values[i]);
      }
      break;
    }
    case OutputActivation::Identity:
    case OutputActivation::Logits:
      break;
  }

  for (std::size_t l = n_layers; l-- > 0;) {
    const Matrix& below = (l == 0) ? cache.input : cache.post[l - 1];
    r.param_grads.layers[l].weight = matmul_at_b(below, g);
    r.param_grads.layers[l].bias = col_sums(g);
    g = matmul_a_bt(g, p.layers[l].weight);  // now dLoss/dA_{l-1}
    if (l > 0) {
      const Matrix& z = cache.pre[l - 1];
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        g.values[i] *= leaky_relu_grad(z.values[i], p.leaky_slope);
      }
    }
  }
  r.input_grad = std::move(g);
  return r;
}

// dLoss/dInput only; for backprop through a frozen downstream network.
inline Matrix mlp_input_gradient(const MlpParams& p, const ForwardCache& cache,
                                 const Matrix& output_grad) {
  const std::size_t n_layers = p.layers.size();
  if (cache.pre.size() != n_layers || cache.post.size() != n_layers) {
    throw CacheError("mlp_input_gradient: cache holds " + std::to_string(cache.pre.size()) +
                     " layers, params have " + std::to_string(n_layers));
  }
  Matrix g = output_grad;
  if (p.output == OutputActivation::Sigmoid) {
    const Matrix& a = cache.post.back();
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      g.values[i] *= a.values[i] * (1.0 - a.values[i]);
    }
  }
  for (std::size_t l = n_layers; l-- > 0;) {
    g = matmul_a_bt(g, p.layers[l].weight);
    if (l > 0) {
      const Matrix& z = cache.pre[l - 1];
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        g.values[i] *= leaky_relu_grad(z.values[i], p.leaky_slope);
      }
    }
  }
  return g;
}

}  // namespace hsgan
