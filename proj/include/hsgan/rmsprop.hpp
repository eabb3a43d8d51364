#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/mlp.hpp"

namespace hsgan {

// Per-parameter squared-gradient accumulators, shape-mirroring the network.
struct RmspropState {
  std::vector<Layer> acc;
  double decay = 0.99;
  double epsilon = 1e-8;
  double learning_rate = 5e-5;
};

inline RmspropState make_rmsprop_state(const MlpParams& p, double learning_rate,
                                       double decay = 0.99, double epsilon = 1e-8) {
  RmspropState s;
  s.decay = decay;
  s.epsilon = epsilon;
  s.learning_rate = learning_rate;
  s.acc.reserve(p.layers.size());
  for (const Layer& l : p.layers) {
    s.acc.push_back(Layer{Matrix(l.weight.rows, l.weight.cols),
                          std::vector<double>(l.bias.size(), 0.0)});
  }
  return s;
}

namespace detail {

inline void rmsprop_update(double* param, double* acc, const double* grad, std::size_t n,
                           const RmspropState& s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double g = grad[i];
    acc[i] = s.decay * acc[i] + (1.0 - s.decay) * g * g;
    param[i] -= s.learning_rate * g / (std::sqrt(acc[i]) + s.epsilon);
  }
}

}  // namespace detail

// acc <- decay*acc + (1-decay)*grad^2; param <- param - lr*grad/(sqrt(acc)+eps).
inline void rmsprop_step(MlpParams& params, const ParamGrads& grads, RmspropState& state) {
  if (grads.layers.size() != params.layers.size() || state.acc.size() != params.layers.size()) {
    throw ShapeError("rmsprop_step: layer count mismatch (params " +
                     std::to_string(params.layers.size()) + ", grads " +
                     std::to_string(grads.layers.size()) + ", state " +
                     std::to_string(state.acc.size()) + ")");
  }
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    Layer& p = params.layers[l];
    const Layer& g = grads.layers[l];
    Layer& a = state.acc[l];
    if (!p.weight.same_shape(g.weight) || p.bias.size() != g.bias.size() ||
        !p.weight.same_shape(a.weight) || p.bias.size() != a.bias.size()) {
      throw ShapeError("rmsprop_step: layer " + std::to_string(l) + " shapes " +
                       shape_str(p.weight) + " / " + shape_str(g.weight) + " / " +
                       shape_str(a.weight) + " do not mirror");
    }
    detail::rmsprop_update(p.weight.values.data(), a.weight.values.data(),
                           g.weight.values.data(), p.weight.values.size(), state);
    detail::rmsprop_update(p.bias.data(), a.bias.data(), g.bias.data(), p.bias.size(), state);
  }
}

}  // namespace hsgan
