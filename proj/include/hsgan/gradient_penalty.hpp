#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/matrix.hpp"
#include "hsgan/mlp.hpp"

namespace hsgan {

namespace detail {

inline void require_scalar_critic(const MlpParams& p, const char* op) {
  p.validate();
  if (p.output_dim() != 1) {
    throw ContractError(std::string(op) + ": critic must have a single output, got " +
                        std::to_string(p.output_dim()));
  }
  if (p.output != OutputActivation::Identity) {
    throw ContractError(std::string(op) + ": critic output activation must be identity");
  }
}

// Pre-activations only; the gradient sweeps below need nothing else.
inline std::vector<Matrix> critic_preactivations(const MlpParams& p, const Matrix& x) {
  std::vector<Matrix> pre;
  pre.reserve(p.layers.size());
  const Matrix* act = &x;
  Matrix a;
  for (std::size_t l = 0; l < p.layers.size(); ++l) {
    Matrix z = matmul(*act, p.layers[l].weight);
    add_row_vector(z, p.layers[l].bias);
    pre.push_back(z);
    if (l + 1 < p.layers.size()) {
      apply_hidden_activation(z, p.leaky_slope);
      a = std::move(z);
      act = &a;
    }
  }
  return pre;
}

}  // namespace detail

// Row b of the result is the gradient of the scalar critic w.r.t. input row b.
inline Matrix critic_input_gradient(const MlpParams& p, const Matrix& x) {
  detail::require_scalar_critic(p, "critic_input_gradient");
  if (x.cols != p.input_dim()) {
    throw ShapeError("critic_input_gradient: input " + shape_str(x) + " vs first layer " +
                     shape_str(p.layers.front().weight));
  }
  const std::vector<Matrix> pre = detail::critic_preactivations(p, x);
  const std::size_t n_layers = p.layers.size();
  Matrix s(x.rows, 1);
  for (double& v : s.values) v = 1.0;
  for (std::size_t l = n_layers; l-- > 0;) {
    s = matmul_a_bt(s, p.layers[l].weight);
    if (l > 0) {
      const Matrix& z = pre[l - 1];
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        s.values[i] *= leaky_relu_grad(z.values[i], p.leaky_slope);
      }
    }
  }
  return s;  // batch x input_dim
}

struct GradientPenaltyResult {
  double penalty = 0.0;  // coefficient * mean_b (||grad_b|| - 1)^2
  ParamGrads param_grads;
};

// Gradient penalty and its parameter gradients, differentiated through the
// input-gradient computation. The LeakyReLU second derivative is zero almost
// everywhere, which kills the dependence through the activation masks: weight
// gradients reduce to outer products of the forward-tangent and reverse
// sweeps, and the penalty has no bias gradient at all.
inline GradientPenaltyResult gradient_penalty_param_grads(const MlpParams& p, const Matrix& x_hat,
                                                          double coefficient) {
  detail::require_scalar_critic(p, "gradient_penalty_param_grads");
  if (coefficient <= 0.0) {
    throw ContractError("gradient_penalty_param_grads: coefficient must be > 0");
  }
  if (x_hat.cols != p.input_dim()) {
    throw ShapeError("gradient_penalty_param_grads: input " + shape_str(x_hat) +
                     " vs first layer " + shape_str(p.layers.front().weight));
  }
  if (x_hat.rows == 0) {
    throw ContractError("gradient_penalty_param_grads: empty batch");
  }

  const std::size_t n_layers = p.layers.size();
  const std::size_t batch = x_hat.rows;
  const std::vector<Matrix> pre = detail::critic_preactivations(p, x_hat);

  // Reverse sweep: s_l for every layer; s_1 * W_1^T is the input gradient.
  std::vector<Matrix> s(n_layers + 1);
  s[n_layers] = Matrix(batch, 1);
  for (double& v : s[n_layers].values) v = 1.0;
  for (std::size_t l = n_layers; l-- > 1;) {
    Matrix t = matmul_a_bt(s[l + 1], p.layers[l].weight);
    const Matrix& z = pre[l - 1];
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      t.values[i] *= leaky_relu_grad(z.values[i], p.leaky_slope);
    }
    s[l] = std::move(t);
  }
  const Matrix grad = matmul_a_bt(s[1], p.layers[0].weight);  // batch x input_dim

  GradientPenaltyResult result;
  const std::vector<double> norms = row_l2_norms(grad);
  double acc = 0.0;
  for (double n : norms) {
    const double d = n - 1.0;
    acc += d * d;
  }
  result.penalty = coefficient * acc / static_cast<double>(batch);

  // Adjoint of the input gradient: u_b = (2c/B) (||g_b|| - 1) g_b / ||g_b||.
  // A zero-norm row contributes (0-1)^2 to the penalty but has no defined
  // direction, so its adjoint is zero.
  Matrix u(batch, grad.cols);
  const double scale = 2.0 * coefficient / static_cast<double>(batch);
  for (std::size_t b = 0; b < batch; ++b) {
    if (norms[b] == 0.0) continue;
    const double f = scale * (norms[b] - 1.0) / norms[b];
    const double* grow = grad.row(b);
    double* urow = u.row(b);
    for (std::size_t j = 0; j < grad.cols; ++j) urow[j] = f * grow[j];
  }

  // Forward-tangent sweep seeded with the adjoint.
  result.param_grads.layers.resize(n_layers);
  Matrix r = u;
  for (std::size_t l = 0; l < n_layers; ++l) {
    result.param_grads.layers[l].weight = matmul_at_b(r, s[l + 1]);
    result.param_grads.layers[l].bias.assign(p.layers[l].bias.size(), 0.0);
    if (l + 1 < n_layers) {
      r = matmul(r, p.layers[l].weight);
      const Matrix& z = pre[l];
      for (std::size_t i = 0; i < r.values.size(); ++i) {
        r.values[i] *= leaky_relu_grad(z.values[i], p.leaky_slope);
      }
    }
  }
  return result;
}

}  // namespace hsgan
