#include <catch2/catch_amalgamated.hpp>

#include "hsgan/mlp.hpp"
#include "support/test_util.hpp"

using hsgan::Matrix;
using hsgan::MlpParams;
using hsgan::OutputActivation;

namespace {

MlpParams identity_layer(std::size_t dim) {
  MlpParams p;
  hsgan::Layer l{Matrix(dim, dim), std::vector<double>(dim, 0.0)};
  for (std::size_t i = 0; i < dim; ++i) l.weight(i, i) = 1.0;
  p.layers.push_back(std::move(l));
  p.output = OutputActivation::Identity;
  return p;
}

}  // namespace

TEST_CASE("identity layer passes input through") {
  const MlpParams p = identity_layer(2);
  const Matrix in = Matrix::from_rows({{1.0, 2.0}});
  const auto r = hsgan::mlp_forward(p, in);
  REQUIRE(r.output.values == std::vector<double>{1.0, 2.0});
}

TEST_CASE("sigmoid of zero pre-activation is one half everywhere") {
  MlpParams p;
  p.layers.push_back(hsgan::Layer{Matrix(3, 4), std::vector<double>(4, 0.0)});
  p.output = OutputActivation::Sigmoid;
  hsgan::Rng rng(1);
  const Matrix in = testutil::random_matrix(5, 3, rng);
  const auto r = hsgan::mlp_forward(p, in);
  for (double v : r.output.values) REQUIRE(v == 0.5);
}

TEST_CASE("forward matches a scalar-by-scalar oracle") {
  hsgan::Rng rng(33);
  for (auto act : {OutputActivation::Identity, OutputActivation::Sigmoid}) {
    const MlpParams p = testutil::random_mlp({4, 6, 3}, act, rng);
    const Matrix in = testutil::random_matrix(5, 4, rng);
    const auto r = hsgan::mlp_forward(p, in);
    for (std::size_t b = 0; b < in.rows; ++b) {
      std::vector<double> row(in.row(b), in.row(b) + in.cols);
      const auto expect = testutil::naive_mlp_row(p, row);
      for (std::size_t j = 0; j < expect.size(); ++j) {
        REQUIRE_THAT(r.output(b, j), Catch::Matchers::WithinRel(expect[j], 1e-12));
      }
    }
  }
}

TEST_CASE("mlp_output equals mlp_forward output bit for bit") {
  hsgan::Rng rng(5);
  const MlpParams p = testutil::random_mlp({3, 8, 2}, OutputActivation::Sigmoid, rng);
  const Matrix in = testutil::random_matrix(4, 3, rng);
  const auto full = hsgan::mlp_forward(p, in);
  const Matrix out = hsgan::mlp_output(p, in);
  REQUIRE(full.output.values == out.values);
}

TEST_CASE("linear one-layer backward: dL/dw = x and dL/dx = w") {
  MlpParams p;
  p.layers.push_back(hsgan::Layer{Matrix(1, 1), {0.0}});
  p.layers[0].weight(0, 0) = 3.5;
  const Matrix in = Matrix::from_rows({{2.25}});
  const auto fwd = hsgan::mlp_forward(p, in);
  const Matrix ones = Matrix::from_rows({{1.0}});
  const auto bwd = hsgan::mlp_backward(p, fwd.cache, ones);
  REQUIRE(bwd.param_grads.layers[0].weight(0, 0) == 2.25);
  REQUIRE(bwd.param_grads.layers[0].bias[0] == 1.0);
  REQUIRE(bwd.input_grad(0, 0) == 3.5);
}

TEST_CASE("zero output gradient gives all-zero gradients") {
  hsgan::Rng rng(17);
  const MlpParams p = testutil::random_mlp({3, 5, 2}, OutputActivation::Identity, rng);
  const Matrix in = testutil::random_matrix(4, 3, rng);
  const auto fwd = hsgan::mlp_forward(p, in);
  const auto bwd = hsgan::mlp_backward(p, fwd.cache, Matrix(4, 2));
  for (double g : testutil::grad_scalars(bwd.param_grads)) REQUIRE(g == 0.0);
  for (double g : bwd.input_grad.values) REQUIRE(g == 0.0);
}

TEST_CASE("backward gradients match central finite differences") {
  hsgan::Rng rng(101);
  for (auto act :
       {OutputActivation::Identity, OutputActivation::Sigmoid, OutputActivation::Logits}) {
    MlpParams p = testutil::random_mlp({4, 7, 3}, act, rng);
    const Matrix in = testutil::random_matrix(3, 4, rng);
    const Matrix coeff = testutil::random_matrix(3, 3, rng);

    // Loss = sum_ij coeff_ij * out_ij, whose output gradient is coeff itself.
    const auto loss = [&]() {
      const Matrix out = hsgan::mlp_output(p, in);
      double acc = 0.0;
      for (std::size_t i = 0; i < out.values.size(); ++i) acc += coeff.values[i] * out.values[i];
      return acc;
    };

    const auto fwd = hsgan::mlp_forward(p, in);
    const auto bwd = hsgan::mlp_backward(p, fwd.cache, coeff);
    const auto grads = testutil::grad_scalars(bwd.param_grads);
    const auto params = testutil::param_scalars(p);
    REQUIRE(grads.size() == params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double fd = testutil::central_diff(loss, params[i]);
      INFO("param " << i);
      REQUIRE(testutil::close(grads[i], fd, 1e-4));
    }
  }
}

TEST_CASE("backward with a mismatched cache raises a cache error") {
  hsgan::Rng rng(2);
  const MlpParams a = testutil::random_mlp({3, 5, 2}, OutputActivation::Identity, rng);
  const MlpParams b = testutil::random_mlp({3, 6, 2}, OutputActivation::Identity, rng);
  const Matrix in = testutil::random_matrix(4, 3, rng);
  const auto fwd = hsgan::mlp_forward(a, in);
  REQUIRE_THROWS_AS(hsgan::mlp_backward(b, fwd.cache, Matrix(4, 2)), hsgan::CacheError);

  const MlpParams three = testutil::random_mlp({3, 5, 5, 2}, OutputActivation::Identity, rng);
  REQUIRE_THROWS_AS(hsgan::mlp_backward(three, fwd.cache, Matrix(4, 2)), hsgan::CacheError);
}

TEST_CASE("forward rejects mismatched input width") {
  hsgan::Rng rng(3);
  const MlpParams p = testutil::random_mlp({3, 4, 2}, OutputActivation::Identity, rng);
  REQUIRE_THROWS_AS(hsgan::mlp_forward(p, Matrix(2, 5)), hsgan::ShapeError);
}

TEST_CASE("make_mlp is deterministic for a fixed seed") {
  hsgan::Rng a(99), b(99);
  const MlpParams pa = testutil::random_mlp({5, 8, 3}, OutputActivation::Identity, a);
  const MlpParams pb = testutil::random_mlp({5, 8, 3}, OutputActivation::Identity, b);
  for (std::size_t l = 0; l < pa.layers.size(); ++l) {
    REQUIRE(pa.layers[l].weight.values == pb.layers[l].weight.values);
    REQUIRE(pa.layers[l].bias == pb.layers[l].bias);
  }
}
