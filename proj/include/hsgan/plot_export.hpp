#pragma once

#include <cstdio>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "hsgan/class_stats.hpp"
#include "hsgan/errors.hpp"
#include "hsgan/matrix.hpp"
#include "hsgan/svm.hpp"

// CSV and SVG exports behind the figures: class statistics (mean/std per
// band), 2-D projections, interpolation paths and the separation grid.
// Columns are documented in the README; floats are printed with 17
// significant digits so a parse reproduces them exactly.

namespace hsgan::analysis {

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

}  // namespace detail

// band,mean,std,class_id
inline void write_class_stats_csv(const std::vector<ClassStats>& stats, const std::string& path) {
  auto out = detail::open_out(path);
  out << "band,mean,std,class_id\n";
  for (const ClassStats& s : stats) {
    for (std::size_t b = 0; b < s.mean.size(); ++b) {
      out << b << ',' << detail::fmt(s.mean[b]) << ',' << detail::fmt(s.stdev[b]) << ','
          << s.class_id << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

// pc1,pc2,class_id,origin with origin in {real,fake}
inline void write_projection_csv(const Matrix& real_points,
                                 std::span<const std::uint16_t> real_labels,
                                 const Matrix& fake_points,
                                 std::span<const std::uint16_t> fake_labels,
                                 const std::string& path) {
  if (real_points.cols != 2 || fake_points.cols != 2) {
    throw ShapeError("write_projection_csv: points must be n x 2");
  }
  auto out = detail::open_out(path);
  out << "pc1,pc2,class_id,origin\n";
  for (std::size_t i = 0; i < real_points.rows; ++i) {
    out << detail::fmt(real_points(i, 0)) << ',' << detail::fmt(real_points(i, 1)) << ','
        << real_labels[i] << ",real\n";
  }
  for (std::size_t i = 0; i < fake_points.rows; ++i) {
    out << detail::fmt(fake_points(i, 0)) << ',' << detail::fmt(fake_points(i, 1)) << ','
        << fake_labels[i] << ",fake\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

// alpha,band,value
inline void write_interpolation_csv(const Matrix& spectra, std::span<const double> alphas,
                                    const std::string& path) {
  if (alphas.size() != spectra.rows) {
    throw ShapeError("write_interpolation_csv: " + std::to_string(alphas.size()) +
                     " alphas for " + std::to_string(spectra.rows) + " spectra");
  }
  auto out = detail::open_out(path);
  out << "alpha,band,value\n";
  for (std::size_t i = 0; i < spectra.rows; ++i) {
    for (std::size_t b = 0; b < spectra.cols; ++b) {
      out << detail::fmt(alphas[i]) << ',' << b << ',' << detail::fmt(spectra(i, b)) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

// train_on,test_on,accuracy
inline void write_separation_csv(const SeparationGrid& grid, const std::string& path) {
  auto out = detail::open_out(path);
  out << "train_on,test_on,accuracy\n";
  out << "real,real," << detail::fmt(grid.real_real) << '\n';
  out << "real,fake," << detail::fmt(grid.real_fake) << '\n';
  out << "fake,real," << detail::fmt(grid.fake_real) << '\n';
  out << "fake,fake," << detail::fmt(grid.fake_fake) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Minimal SVG rendering, a pure function of the exported data.
// ---------------------------------------------------------------------------

namespace detail {

struct SvgCanvas {
  static constexpr double width = 640.0;
  static constexpr double height = 480.0;
  static constexpr double pad = 42.0;
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;

  double x(double v) const {
    const double span = x_hi - x_lo;
    return pad + (span == 0.0 ? 0.5 : (v - x_lo) / span) * (width - 2 * pad);
  }
  double y(double v) const {
    const double span = y_hi - y_lo;
    return height - pad - (span == 0.0 ? 0.5 : (v - y_lo) / span) * (height - 2 * pad);
  }
};

inline const char* palette(std::uint16_t class_id) {
  static constexpr const char* colors[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                                           "#66ccee", "#aa3377", "#bbbbbb", "#222255"};
  return colors[class_id % 8];
}

inline void svg_open(std::ofstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n"
         "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
}

}  // namespace detail

// One circle per point, colored by class.
inline void render_scatter_svg(const Matrix& points, std::span<const std::uint16_t> labels,
                               const std::string& path) {
  if (points.cols != 2) throw ShapeError("render_scatter_svg: points must be n x 2");
  if (labels.size() != points.rows) {
    throw ShapeError("render_scatter_svg: label count mismatch");
  }
  detail::SvgCanvas canvas;
  if (points.rows > 0) {
    canvas.x_lo = canvas.x_hi = points(0, 0);
    canvas.y_lo = canvas.y_hi = points(0, 1);
    for (std::size_t i = 0; i < points.rows; ++i) {
      canvas.x_lo = std::min(canvas.x_lo, points(i, 0));
      canvas.x_hi = std::max(canvas.x_hi, points(i, 0));
      canvas.y_lo = std::min(canvas.y_lo, points(i, 1));
      canvas.y_hi = std::max(canvas.y_hi, points(i, 1));
    }
  }
  auto out = detail::open_out(path);
  detail::svg_open(out);
  char buf[160];
  for (std::size_t i = 0; i < points.rows; ++i) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"%s\" fill-opacity=\"0.7\"/>\n",
                  canvas.x(points(i, 0)), canvas.y(points(i, 1)), detail::palette(labels[i]));
    out << buf;
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

// One polyline per spectrum (x = band, y = value), colored by class.
inline void render_spectra_svg(const Matrix& spectra, std::span<const std::uint16_t> labels,
                               const std::string& path) {
  if (labels.size() != spectra.rows) {
    throw ShapeError("render_spectra_svg: label count mismatch");
  }
  detail::SvgCanvas canvas;
  canvas.x_lo = 0.0;
  canvas.x_hi = spectra.cols > 1 ? static_cast<double>(spectra.cols - 1) : 1.0;
  canvas.y_lo = 0.0;
  canvas.y_hi = 1.0;
  auto out = detail::open_out(path);
  detail::svg_open(out);
  char buf[64];
  for (std::size_t i = 0; i < spectra.rows; ++i) {
    out << "<polyline fill=\"none\" stroke=\"" << detail::palette(labels[i])
        << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t b = 0; b < spectra.cols; ++b) {
      std::snprintf(buf, sizeof buf, "%.3f,%.3f ", canvas.x(static_cast<double>(b)),
                    canvas.y(spectra(i, b)));
      out << buf;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hsgan::analysis
