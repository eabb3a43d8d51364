#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"

namespace hsgan {

// Dense row-major matrix of 64-bit reals. All arithmetic below uses a fixed
// summation order so results are bit-reproducible.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // rows * cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> data) {
    Matrix m;
    m.rows = data.size();
    m.cols = data.size() ? data.begin()->size() : 0;
    m.values.reserve(m.rows * m.cols);
    for (const auto& r : data) {
      if (r.size() != m.cols) throw ShapeError("from_rows: ragged initializer");
      m.values.insert(m.values.end(), r.begin(), r.end());
    }
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return values[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }

  double* row(std::size_t i) { return values.data() + i * cols; }
  const double* row(std::size_t i) const { return values.data() + i * cols; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  bool all_finite() const {
    for (double v : values) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }
};

inline std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows) + "x" + std::to_string(m.cols);
}

inline void require_finite(const Matrix& m, const char* where) {
  if (!m.all_finite()) {
    throw NumericError(std::string(where) + ": non-finite matrix value");
  }
}

// C = A * B. A is m x k, B is k x n.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw ShapeError("matmul: " + shape_str(a) + " incompatible with " + shape_str(b));
  }
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double* crow = c.row(i);
    const double* arow = a.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double av = arow[k];
      const double* brow = b.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) {
        crow[j] += av * brow[j];
      }
    }
  }
  return c;
}

// C = A^T * B. A is m x k, B is m x n, C is k x n.
inline Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) {
    throw ShapeError("matmul_at_b: " + shape_str(a) + " incompatible with " + shape_str(b));
  }
  Matrix c(a.cols, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    const double* brow = b.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double av = arow[k];
      double* crow = c.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) {
        crow[j] += av * brow[j];
      }
    }
  }
  return c;
}

// C = A * B^T. A is m x n, B is k x n, C is m x k.
inline Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) {
    throw ShapeError("matmul_a_bt: " + shape_str(a) + " incompatible with " + shape_str(b));
  }
  Matrix c(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    for (std::size_t k = 0; k < b.rows; ++k) {
      const double* brow = b.row(k);
      double acc = 0.0;
      for (std::size_t j = 0; j < a.cols; ++j) {
        acc += arow[j] * brow[j];
      }
      c(i, k) = acc;
    }
  }
  return c;
}

// M += row broadcast of v.
inline void add_row_vector(Matrix& m, const std::vector<double>& v) {
  if (m.cols != v.size()) {
    throw ShapeError("add_row_vector: " + shape_str(m) + " vs vector of length " +
                     std::to_string(v.size()));
  }
  for (std::size_t i = 0; i < m.rows; ++i) {
    double* row = m.row(i);
    for (std::size_t j = 0; j < m.cols; ++j) row[j] += v[j];
  }
}

inline std::vector<double> col_sums(const Matrix& m) {
  std::vector<double> s(m.cols, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double* row = m.row(i);
    for (std::size_t j = 0; j < m.cols; ++j) s[j] += row[j];
  }
  return s;
}

inline std::vector<double> row_l2_norms(const Matrix& m) {
  std::vector<double> n(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double* row = m.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += row[j] * row[j];
    n[i] = std::sqrt(acc);
  }
  return n;
}

}  // namespace hsgan
