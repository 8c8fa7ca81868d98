#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "swanson/errors.hpp"

namespace swanson {

using Complex = std::complex<double>;

/// Uniformly spaced 1-D grid carrying complex sample values.  This is the
/// common currency between the closed-form evaluators and the
/// finite-difference machinery.
class GridFunction {
 public:
  GridFunction(double x_min, double x_max, Eigen::ArrayXcd values)
      : x_min_(x_min), x_max_(x_max), values_(std::move(values)) {
    if (values_.size() < 3)
      throw GridTooCoarse("GridFunction needs at least 3 points");
    if (!(x_max_ > x_min_))
      throw Error("GridFunction requires x_max > x_min");
  }

  static GridFunction sample(double x_min, double x_max, int n_points,
                             const std::function<Complex(double)>& f) {
    if (n_points < 3) throw GridTooCoarse("sample: n_points < 3");
    Eigen::ArrayXcd v(n_points);
    const double h = (x_max - x_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) v[i] = f(x_min + i * h);
    return GridFunction(x_min, x_max, std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double spacing() const { return (x_max_ - x_min_) / (size() - 1); }
  double x(int i) const { return x_min_ + i * spacing(); }

  const Eigen::ArrayXcd& values() const { return values_; }
  Eigen::ArrayXcd& values() { return values_; }
  Complex operator[](int i) const { return values_[i]; }
  Complex& operator[](int i) { return values_[i]; }

  bool same_grid_as(const GridFunction& other) const {
    return size() == other.size() && x_min_ == other.x_min_ &&
           x_max_ == other.x_max_;
  }

  /// Trapezoid-weighted L2 norm.
  double norm() const {
    const double h = spacing();
    double s = 0.5 * (std::norm(values_[0]) + std::norm(values_[size() - 1]));
    for (int i = 1; i < size() - 1; ++i) s += std::norm(values_[i]);
    return std::sqrt(h * s);
  }

 private:
  double x_min_, x_max_;
  Eigen::ArrayXcd values_;
};

}  // namespace swanson
