#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "swanson/grid.hpp"

// Independent numerical ground truth.  Nothing here may touch the
// closed-form machinery in models/specfun.

namespace swanson::oracle {

struct FdProblem {
  std::function<double(double)> potential;
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;  // >= 100
};

struct FdEigenpair {
  double energy;
  GridFunction eigenvector;  // L2-normalized, Dirichlet walls included
};

/// Lowest `count` eigenpairs of -D^2 + V with second-order central
/// differences and Dirichlet walls.  Eigenvalues from the symmetric
/// tridiagonal matrix (QL), eigenvectors by inverse iteration.
std::vector<FdEigenpair> fd_eigen(const FdProblem& problem, int count);

/// R and T at wavenumber k by integrating the stationary equation with a
/// fourth-order scheme from the transmitted side (or from under the wall
/// when the potential diverges on the left) and matching plane waves at
/// the window edges.
std::pair<Complex, Complex> fd_scatter(const FdProblem& problem, double k);

/// -D^2 + V applied on a grid function, endpoints copied through.
GridFunction fd_apply(const std::function<double(double)>& potential,
                      const GridFunction& f);

/// max interior |op(f) - E f| / max |f|.
double residual(
    const std::function<GridFunction(const GridFunction&)>& operator_apply,
    const GridFunction& f, double E);

/// Least-squares slope of log|f| vs x over [x_lo, x_hi] after extracting
/// the oscillation envelope (local maxima of |f|).  Falls back to all
/// samples when the window holds fewer than three peaks (smooth envelope).
double slope_fit(const GridFunction& f, double x_lo, double x_hi);

}  // namespace swanson::oracle
