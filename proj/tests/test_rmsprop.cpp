#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hsgan/rmsprop.hpp"
#include "support/test_util.hpp"

using hsgan::Matrix;
using hsgan::MlpParams;

namespace {

MlpParams scalar_param(double w) {
  MlpParams p;
  p.layers.push_back(hsgan::Layer{Matrix(1, 1), {}});
  p.layers[0].weight(0, 0) = w;
  return p;
}

hsgan::ParamGrads scalar_grad(double g) {
  hsgan::ParamGrads grads;
  grads.layers.push_back(hsgan::Layer{Matrix(1, 1), {}});
  grads.layers[0].weight(0, 0) = g;
  return grads;
}

}  // namespace

TEST_CASE("zero gradient leaves parameters unchanged and decays accumulators") {
  hsgan::Rng rng(13);
  MlpParams p = testutil::random_mlp({3, 4, 2}, hsgan::OutputActivation::Identity, rng);
  const MlpParams before = p;
  auto state = hsgan::make_rmsprop_state(p, 0.01, 0.9, 1e-8);
  state.acc[0].weight(0, 0) = 4.0;
  hsgan::rmsprop_step(p, hsgan::zero_grads_like(p), state);
  for (std::size_t l = 0; l < p.layers.size(); ++l) {
    REQUIRE(p.layers[l].weight.values == before.layers[l].weight.values);
    REQUIRE(p.layers[l].bias == before.layers[l].bias);
  }
  REQUIRE(state.acc[0].weight(0, 0) == 0.9 * 4.0);
}

TEST_CASE("two hand-computed scalar steps reproduce exactly") {
  MlpParams p = scalar_param(1.0);
  auto state = hsgan::make_rmsprop_state(p, 0.1, 0.9, 1e-8);

  // Oracle: straight-line scalar arithmetic with the same update formula.
  double theta = 1.0, acc = 0.0;
  const double lr = 0.1, decay = 0.9, eps = 1e-8;

  for (double g : {0.5, -0.25}) {
    hsgan::rmsprop_step(p, scalar_grad(g), state);
    acc = decay * acc + (1.0 - decay) * g * g;
    theta -= lr * g / (std::sqrt(acc) + eps);
    REQUIRE(p.layers[0].weight(0, 0) == theta);
    REQUIRE(state.acc[0].weight(0, 0) == acc);
  }
}

TEST_CASE("zero learning rate never moves parameters") {
  hsgan::Rng rng(14);
  MlpParams p = testutil::random_mlp({2, 3, 1}, hsgan::OutputActivation::Identity, rng);
  const MlpParams before = p;
  auto state = hsgan::make_rmsprop_state(p, 0.0);
  hsgan::ParamGrads g = hsgan::zero_grads_like(p);
  for (auto& layer : g.layers) {
    for (double& v : layer.weight.values) v = 3.0;
    for (double& v : layer.bias) v = -2.0;
  }
  hsgan::rmsprop_step(p, g, state);
  for (std::size_t l = 0; l < p.layers.size(); ++l) {
    REQUIRE(p.layers[l].weight.values == before.layers[l].weight.values);
    REQUIRE(p.layers[l].bias == before.layers[l].bias);
  }
}

TEST_CASE("mirroring shape violations raise shape errors") {
  hsgan::Rng rng(15);
  MlpParams p = testutil::random_mlp({2, 3, 1}, hsgan::OutputActivation::Identity, rng);
  auto state = hsgan::make_rmsprop_state(p, 0.01);
  const MlpParams other = testutil::random_mlp({2, 4, 1}, hsgan::OutputActivation::Identity, rng);
  REQUIRE_THROWS_AS(hsgan::rmsprop_step(p, hsgan::zero_grads_like(other), state),
                    hsgan::ShapeError);
}
