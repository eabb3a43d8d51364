#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/matrix.hpp"
#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::analysis {

// Top-2 principal directions of a spectra set, via iterated power method
// with deflation on the population covariance.
struct Pca2Projection {
  std::vector<double> component_1;
  std::vector<double> component_2;
  std::vector<double> mean;
  std::pair<double, double> explained_variance{0.0, 0.0};
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline void normalize(std::vector<double>& v) {
  const double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
}

// Dominant eigenpair of the symmetric PSD matrix C, optionally constrained to
// the orthogonal complement of `against`. The iterate is re-orthogonalized
// every step; rounding would otherwise leak the deflated direction back in.
inline std::pair<double, std::vector<double>> power_iterate(const Matrix& c,
                                                            const std::vector<double>* against) {
  const std::size_t d = c.rows;
  Rng rng(0x9e3779b9);  // fixed start vector; the method is deterministic
  std::vector<double> v(d);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);

  const auto orthogonalize = [against, d](std::vector<double>& u) {
    if (!against) return true;
    const double proj = dot(u, *against);
    for (std::size_t i = 0; i < d; ++i) u[i] -= proj * (*against)[i];
    const double n = std::sqrt(dot(u, u));
    if (n == 0.0) return false;  // complement is null
    for (double& x : u) x /= n;
    return true;
  };

  if (!orthogonalize(v)) return {0.0, v};
  normalize(v);
  std::vector<double> w(d);
  for (int iter = 0; iter < 10000; ++iter) {
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      const double* row = c.row(i);
      for (std::size_t j = 0; j < d; ++j) acc += row[j] * v[j];
      w[i] = acc;
    }
    if (against) {
      const double proj = dot(w, *against);
      for (std::size_t i = 0; i < d; ++i) w[i] -= proj * (*against)[i];
    }
    const double wnorm = std::sqrt(dot(w, w));
    if (wnorm == 0.0) return {0.0, v};  // v is in the (deflated) null space
    double drift = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double next = w[i] / wnorm;
      drift = std::max(drift, std::abs(next - v[i]));
      v[i] = next;
    }
    if (!orthogonalize(v)) return {0.0, v};
    if (drift < 1e-14 && iter > 2) break;
  }
  double lambda = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    const double* row = c.row(i);
    for (std::size_t j = 0; j < d; ++j) acc += row[j] * v[j];
    lambda += v[i] * acc;
  }
  return {lambda, v};
}

// Largest-magnitude entry made positive, ties to the earliest band.
inline void canonicalize_sign(std::vector<double>& v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  }
  if (v[arg] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace detail

inline Pca2Projection fit_pca2(const Matrix& data) {
  if (data.rows < 3) throw ContractError("fit_pca2: need at least 3 rows");
  if (data.cols < 2) throw ContractError("fit_pca2: need at least 2 bands");

  Pca2Projection proj;
  proj.mean.assign(data.cols, 0.0);
  for (std::size_t i = 0; i < data.rows; ++i) {
    const double* row = data.row(i);
    for (std::size_t j = 0; j < data.cols; ++j) proj.mean[j] += row[j];
  }
  for (double& m : proj.mean) m /= static_cast<double>(data.rows);

  Matrix centered(data.rows, data.cols);
  for (std::size_t i = 0; i < data.rows; ++i) {
    const double* src = data.row(i);
    double* dst = centered.row(i);
    for (std::size_t j = 0; j < data.cols; ++j) dst[j] = src[j] - proj.mean[j];
  }
  Matrix cov = matmul_at_b(centered, centered);
  for (double& v : cov.values) v /= static_cast<double>(data.rows);

  double total = 0.0;
  for (std::size_t i = 0; i < cov.rows; ++i) total += cov(i, i);
  if (!(total > 0.0)) throw NumericError("fit_pca2: degenerate rank (zero variance)");

  auto [l1, v1] = detail::power_iterate(cov, nullptr);
  if (!(l1 > 0.0)) throw NumericError("fit_pca2: degenerate rank (no principal direction)");
  // Explicit deflation: constraining the iterate alone cannot escape exactly
  // symmetric rank-deficient inputs, but the deflated matrix shrinks to
  // rounding noise there and the magnitude check below catches it.
  Matrix deflated = cov;
  for (std::size_t i = 0; i < cov.rows; ++i) {
    for (std::size_t j = 0; j < cov.cols; ++j) {
      deflated(i, j) -= l1 * v1[i] * v1[j];
    }
  }
  auto [l2, v2] = detail::power_iterate(deflated, &v1);
  if (!(l2 > l1 * 1e-12)) {
    throw NumericError("fit_pca2: degenerate rank (fewer than 2 informative directions)");
  }
  detail::canonicalize_sign(v1);
  detail::canonicalize_sign(v2);
  proj.component_1 = std::move(v1);
  proj.component_2 = std::move(v2);
  proj.explained_variance = {l1, l2};
  return proj;
}

// Rows of `data` mapped onto the two components (n x 2).
inline Matrix project(const Pca2Projection& proj, const Matrix& data) {
  if (data.cols != proj.mean.size()) {
    throw ShapeError("project: data " + shape_str(data) + " vs " +
                     std::to_string(proj.mean.size()) + " bands");
  }
  Matrix out(data.rows, 2);
  for (std::size_t i = 0; i < data.rows; ++i) {
    const double* row = data.row(i);
    double p1 = 0.0, p2 = 0.0;
    for (std::size_t j = 0; j < data.cols; ++j) {
      const double v = row[j] - proj.mean[j];
      p1 += v * proj.component_1[j];
      p2 += v * proj.component_2[j];
    }
    out(i, 0) = p1;
    out(i, 1) = p2;
  }
  return out;
}

// Fig-3 style comparison: equalize set sizes (seeded subsample of the larger
// set), fit one basis on the concatenation, project both sets through it.
struct RealFakeProjection {
  Pca2Projection projection;
  Matrix real_points;  // n x 2
  Matrix fake_points;  // n x 2
  std::vector<std::uint16_t> real_labels;
  std::vector<std::uint16_t> fake_labels;
};

inline RealFakeProjection pca_real_fake(const dataio::SpectraTable& real,
                                        const dataio::SpectraTable& fake, std::uint64_t seed) {
  if (real.bands() != fake.bands()) {
    throw ShapeError("pca_real_fake: band mismatch " + std::to_string(real.bands()) + " vs " +
                     std::to_string(fake.bands()));
  }
  const std::size_t n = std::min(real.rows(), fake.rows());
  if (n < 3) throw ContractError("pca_real_fake: need at least 3 rows per set");

  const auto subsample = [&](const dataio::SpectraTable& t, std::uint64_t stage) {
    if (t.rows() == n) return t;
    std::vector<std::size_t> idx(t.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Rng rng(derive_seed(seed, stage));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.index(idx.size() - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    return dataio::take_rows(t, idx);
  };

  const dataio::SpectraTable r = subsample(real, 0);
  const dataio::SpectraTable f = subsample(fake, 1);

  Matrix stacked(2 * n, real.bands());
  std::copy(r.spectra.values.begin(), r.spectra.values.end(), stacked.values.begin());
  std::copy(f.spectra.values.begin(), f.spectra.values.end(),
            stacked.values.begin() + static_cast<std::ptrdiff_t>(n * real.bands()));

  RealFakeProjection out;
  out.projection = fit_pca2(stacked);
  out.real_points = project(out.projection, r.spectra);
  out.fake_points = project(out.projection, f.spectra);
  out.real_labels = r.labels;
  out.fake_labels = f.labels;
  return out;
}

}  // namespace hsgan::analysis
