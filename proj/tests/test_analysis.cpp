#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsgan/class_stats.hpp"
#include "hsgan/pca.hpp"
#include "hsgan/plot_export.hpp"
#include "hsgan/svm.hpp"
#include "support/test_util.hpp"

using namespace hsgan::analysis;
using hsgan::Matrix;
using hsgan::dataio::SpectraTable;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

// Test-only oracle: cyclic Jacobi eigensolver for symmetric matrices.
// Returns eigenvalues descending with matching eigenvector columns.
void jacobi_eigen(Matrix a, std::vector<double>& values, Matrix& vectors) {
  const std::size_t n = a.rows;
  vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) vectors(i, i) = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vectors(k, p), vkq = vectors(k, q);
          vectors(k, p) = c * vkp - s * vkq;
          vectors(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  values.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&a](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  Matrix sorted(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) sorted(i, j) = vectors(i, order[j]);
  }
  vectors = sorted;
}

// Test-only oracle: exhaustive search over hyperplane angle and offset in 2-D.
double best_linear_accuracy_2d(const SpectraTable& t) {
  const auto rows = hsgan::dataio::labeled_row_indices(t);
  double best = 0.0;
  for (int step = 0; step < 1440; ++step) {
    const double angle = std::numbers::pi * step / 1440.0;
    const double dx = std::cos(angle), dy = std::sin(angle);
    std::vector<std::pair<double, std::uint16_t>> proj;
    proj.reserve(rows.size());
    for (std::size_t i : rows) {
      proj.push_back({dx * t.spectra(i, 0) + dy * t.spectra(i, 1), t.labels[i]});
    }
    std::sort(proj.begin(), proj.end());
    // Sweep every threshold between consecutive points.
    std::size_t left_a = 0;  // class `lo` count left of the threshold
    const std::uint16_t lo = 1;
    std::size_t total_a = 0;
    for (const auto& [_, label] : proj) total_a += label == lo;
    for (std::size_t cut = 0; cut <= proj.size(); ++cut) {
      if (cut > 0 && proj[cut - 1].second == lo) ++left_a;
      const std::size_t right_b = (proj.size() - cut) - (total_a - left_a);
      const std::size_t correct1 = left_a + right_b;             // lo left / hi right
      const std::size_t correct2 = proj.size() - correct1;        // mirrored
      best = std::max({best, static_cast<double>(correct1) / proj.size(),
                       static_cast<double>(correct2) / proj.size()});
    }
  }
  return best;
}

// Two Gaussian clouds inside the unit box, the scale normalized spectra live
// on. `sigma` controls the overlap.
SpectraTable two_clouds(std::size_t per_class, double sigma, std::uint64_t seed) {
  hsgan::Rng rng(seed);
  SpectraTable t;
  t.spectra = Matrix(2 * per_class, 2);
  t.labels.resize(2 * per_class);
  for (std::size_t i = 0; i < per_class; ++i) {
    t.spectra(i, 0) = 0.3 + sigma * rng.normal();
    t.spectra(i, 1) = 0.4 + sigma * rng.normal();
    t.labels[i] = 1;
    t.spectra(per_class + i, 0) = 0.7 + sigma * rng.normal();
    t.spectra(per_class + i, 1) = 0.6 + sigma * rng.normal();
    t.labels[per_class + i] = 2;
  }
  return t;
}

}  // namespace

TEST_CASE("single-row class: mean is the row, std is zero") {
  SpectraTable t;
  t.spectra = Matrix::from_rows({{0.2, 0.4, 0.6}});
  t.labels = {3};
  const auto r = class_stats(t);
  REQUIRE(r.stats.size() == 1);
  REQUIRE(r.stats[0].class_id == 3);
  REQUIRE(r.stats[0].count == 1);
  REQUIRE(r.stats[0].mean == std::vector<double>{0.2, 0.4, 0.6});
  REQUIRE(r.stats[0].stdev == std::vector<double>{0.0, 0.0, 0.0});
  REQUIRE(r.skipped == std::vector<std::uint16_t>{1, 2});
}

TEST_CASE("two-row class: mean (a+b)/2, std |a-b|/2") {
  SpectraTable t;
  t.spectra = Matrix::from_rows({{0.1, 0.9}, {0.5, 0.3}});
  t.labels = {1, 1};
  const auto r = class_stats(t);
  REQUIRE_THAT(r.stats[0].mean[0], Catch::Matchers::WithinAbs(0.3, 1e-15));
  REQUIRE_THAT(r.stats[0].mean[1], Catch::Matchers::WithinAbs(0.6, 1e-15));
  REQUIRE_THAT(r.stats[0].stdev[0], Catch::Matchers::WithinAbs(0.2, 1e-15));
  REQUIRE_THAT(r.stats[0].stdev[1], Catch::Matchers::WithinAbs(0.3, 1e-15));
}

TEST_CASE("class stats match a scalar-loop oracle to 1e-12") {
  hsgan::Rng rng(3);
  SpectraTable t;
  t.spectra = testutil::random_matrix(60, 5, rng, 0.0, 1.0);
  t.labels.resize(60);
  for (auto& l : t.labels) l = static_cast<std::uint16_t>(1 + rng.index(3));
  const auto r = class_stats(t);
  for (const ClassStats& s : r.stats) {
    for (std::size_t b = 0; b < 5; ++b) {
      double sum = 0.0;
      std::size_t n = 0;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t.labels[i] == s.class_id) {
          sum += t.spectra(i, b);
          ++n;
        }
      }
      const double mean = sum / n;
      double var = 0.0;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t.labels[i] == s.class_id) {
          var += (t.spectra(i, b) - mean) * (t.spectra(i, b) - mean);
        }
      }
      REQUIRE_THAT(s.mean[b], Catch::Matchers::WithinAbs(mean, 1e-12));
      REQUIRE_THAT(s.stdev[b], Catch::Matchers::WithinAbs(std::sqrt(var / n), 1e-12));
    }
  }
}

TEST_CASE("planar data embedded in 10-D is explained fully by two components") {
  hsgan::Rng rng(5);
  // Random plane: two fixed directions in 10-D.
  std::vector<double> u(10), v(10);
  for (double& x : u) x = rng.normal();
  for (double& x : v) x = rng.normal();
  Matrix data(50, 10);
  for (std::size_t i = 0; i < 50; ++i) {
    const double a = rng.normal() * 3.0, b = rng.normal();
    for (std::size_t j = 0; j < 10; ++j) data(i, j) = a * u[j] + b * v[j] + 0.5;
  }
  const Pca2Projection p = fit_pca2(data);

  double total = 0.0;
  std::vector<double> mean(10, 0.0);
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 10; ++j) mean[j] += data(i, j) / 50.0;
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const double d = data(i, j) - mean[j];
      total += d * d / 50.0;
    }
  REQUIRE_THAT(p.explained_variance.first + p.explained_variance.second,
               Catch::Matchers::WithinRel(total, 1e-8));
  REQUIRE(p.explained_variance.first >= p.explained_variance.second);

  // Orthonormal within 1e-8.
  double dot = 0.0, n1 = 0.0, n2 = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    dot += p.component_1[j] * p.component_2[j];
    n1 += p.component_1[j] * p.component_1[j];
    n2 += p.component_2[j] * p.component_2[j];
  }
  REQUIRE(std::abs(dot) < 1e-8);
  REQUIRE_THAT(n1, Catch::Matchers::WithinAbs(1.0, 1e-8));
  REQUIRE_THAT(n2, Catch::Matchers::WithinAbs(1.0, 1e-8));
}

TEST_CASE("power-iteration components match a Jacobi eigensolver oracle") {
  hsgan::Rng rng(7);
  const Matrix data = testutil::random_matrix(80, 5, rng, -2.0, 2.0);
  const Pca2Projection p = fit_pca2(data);

  // Population covariance, then full eigendecomposition.
  std::vector<double> mean(5, 0.0);
  for (std::size_t i = 0; i < data.rows; ++i)
    for (std::size_t j = 0; j < 5; ++j) mean[j] += data(i, j) / data.rows;
  Matrix cov(5, 5);
  for (std::size_t i = 0; i < data.rows; ++i)
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b)
        cov(a, b) += (data(i, a) - mean[a]) * (data(i, b) - mean[b]) / data.rows;
  std::vector<double> eigvals;
  Matrix eigvecs;
  jacobi_eigen(cov, eigvals, eigvecs);

  double dot1 = 0.0, dot2 = 0.0;
  for (std::size_t j = 0; j < 5; ++j) {
    dot1 += p.component_1[j] * eigvecs(j, 0);
    dot2 += p.component_2[j] * eigvecs(j, 1);
  }
  REQUIRE(std::abs(dot1) > 0.9999);
  REQUIRE(std::abs(dot2) > 0.9999);
  REQUIRE_THAT(p.explained_variance.first, Catch::Matchers::WithinRel(eigvals[0], 1e-9));
  REQUIRE_THAT(p.explained_variance.second, Catch::Matchers::WithinRel(eigvals[1], 1e-9));
}

TEST_CASE("duplicating the dataset leaves the projection unchanged") {
  hsgan::Rng rng(9);
  const Matrix data = testutil::random_matrix(40, 4, rng);
  Matrix doubled(80, 4);
  std::copy(data.values.begin(), data.values.end(), doubled.values.begin());
  std::copy(data.values.begin(), data.values.end(), doubled.values.begin() + data.values.size());
  const Pca2Projection a = fit_pca2(data);
  const Pca2Projection b = fit_pca2(doubled);
  for (std::size_t j = 0; j < 4; ++j) {
    REQUIRE_THAT(a.component_1[j], Catch::Matchers::WithinAbs(b.component_1[j], 1e-9));
    REQUIRE_THAT(a.component_2[j], Catch::Matchers::WithinAbs(b.component_2[j], 1e-9));
  }
}

TEST_CASE("rank-deficient data raises a degenerate-rank error") {
  Matrix line(10, 3);
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 3; ++j) line(i, j) = 2.0 * static_cast<double>(i);
  }
  REQUIRE_THROWS_AS(fit_pca2(line), hsgan::NumericError);
  REQUIRE_THROWS_AS(fit_pca2(Matrix(2, 4)), hsgan::ContractError);  // too few rows
}

TEST_CASE("separable clouds reach training accuracy 1.0") {
  const SpectraTable t = two_clouds(20, 0.03, 11);
  const LinearSvmModel model = svm_train(t, SvmConfig{1e-2, 50, 1});
  REQUIRE(svm_accuracy(model, t) == 1.0);
}

TEST_CASE("svm is within 2 accuracy points of the brute-force hyperplane oracle") {
  const SpectraTable t = two_clouds(20, 0.05, 13);  // mildly overlapping, 40 points
  const LinearSvmModel model = svm_train(t, SvmConfig{1e-2, 50, 2});
  const double svm_acc = svm_accuracy(model, t);
  const double oracle = best_linear_accuracy_2d(t);
  INFO("svm " << svm_acc << " vs oracle " << oracle);
  REQUIRE(oracle >= svm_acc - 1e-12);  // oracle is exhaustive
  REQUIRE(svm_acc >= oracle - 0.02 - 1e-12);
}

TEST_CASE("svm training is deterministic per seed") {
  const SpectraTable t = two_clouds(15, 0.05, 17);
  const LinearSvmModel a = svm_train(t, SvmConfig{1e-2, 50, 5});
  const LinearSvmModel b = svm_train(t, SvmConfig{1e-2, 50, 5});
  for (std::size_t k = 0; k < a.hyperplanes.size(); ++k) {
    REQUIRE(a.hyperplanes[k].weights == b.hyperplanes[k].weights);
    REQUIRE(a.hyperplanes[k].bias == b.hyperplanes[k].bias);
  }
}

TEST_CASE("single-class tables cannot train an svm") {
  SpectraTable t;
  t.spectra = Matrix(5, 2);
  t.labels.assign(5, 1);
  REQUIRE_THROWS_AS(svm_train(t), hsgan::ContractError);
}

TEST_CASE("separation grid on identical real and fake tables is symmetric") {
  const SpectraTable train = two_clouds(20, 0.05, 19);
  const SpectraTable test = two_clouds(20, 0.05, 23);
  const SeparationGrid g = separation_table(train, test, train, test, SvmConfig{1e-2, 50, 3});
  REQUIRE(g.real_real == g.fake_fake);
  REQUIRE(g.real_fake == g.fake_real);
  REQUIRE(g.real_real >= 0.0);
  REQUIRE(g.real_real <= 1.0);
}

TEST_CASE("class-stats CSV carries the documented header and round-trips") {
  SpectraTable t;
  t.spectra = Matrix::from_rows({{0.125, 0.25}, {0.375, 0.5}, {0.8125, 0.1}});
  t.labels = {1, 1, 2};
  const auto stats = class_stats(t);
  const std::string path = temp_path("stats.csv");
  write_class_stats_csv(stats.stats, path);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  REQUIRE(header == "band,mean,std,class_id");
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    const std::size_t band = std::stoul(cell);
    std::getline(ss, cell, ',');
    const double mean = std::stod(cell);
    std::getline(ss, cell, ',');
    const double stdev = std::stod(cell);
    std::getline(ss, cell, ',');
    const std::uint16_t cls = static_cast<std::uint16_t>(std::stoul(cell));
    const ClassStats& s = cls == 1 ? stats.stats[0] : stats.stats[1];
    REQUIRE_THAT(mean, Catch::Matchers::WithinAbs(s.mean[band], 1e-12));
    REQUIRE_THAT(stdev, Catch::Matchers::WithinAbs(s.stdev[band], 1e-12));
    ++rows;
  }
  REQUIRE(rows == 4);  // 2 classes x 2 bands
  std::remove(path.c_str());
}

TEST_CASE("two-point scatter SVG contains exactly two circles") {
  Matrix points(2, 2);
  points(0, 0) = 0.0;
  points(0, 1) = 1.0;
  points(1, 0) = 2.0;
  points(1, 1) = 3.0;
  const std::vector<std::uint16_t> labels = {1, 2};
  const std::string path = temp_path("scatter.svg");
  render_scatter_svg(points, labels, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string svg = ss.str();
  std::size_t count = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++count;
    pos += 7;
  }
  REQUIRE(count == 2);
  std::remove(path.c_str());
}

TEST_CASE("interpolation CSV columns are alpha,band,value") {
  Matrix spectra(2, 3);
  for (std::size_t i = 0; i < spectra.values.size(); ++i) {
    spectra.values[i] = 0.1 * static_cast<double>(i);
  }
  const std::vector<double> alphas = {0.0, 1.0};
  const std::string path = temp_path("interp.csv");
  write_interpolation_csv(spectra, alphas, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  REQUIRE(header == "alpha,band,value");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  REQUIRE(rows == 6);
  std::remove(path.c_str());
}

TEST_CASE("unwritable paths raise io errors") {
  const SeparationGrid g{};
  REQUIRE_THROWS_AS(write_separation_csv(g, "/nonexistent-dir/x.csv"), hsgan::IoError);
}
