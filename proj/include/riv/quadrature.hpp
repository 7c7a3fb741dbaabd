#pragma once
// Quadrature helpers for integrals with a possible endpoint singularity at 0.
// Composite Simpson on a log-spaced grid with interval-count doubling; the
// hard floor and the halve-the-floor divergence probe follow the capacity
// module's integration contract.

#include <functional>
#include <vector>

namespace riv::quad {

struct Options {
  double floor = 1e-10;      // lower integration bound when lo == 0
  double rel_tol = 1e-10;    // doubling stops when the value settles to this
  int init_intervals = 64;   // must be even
  int max_doublings = 14;
};

// Integral of f over (lo, hi), 0 <= lo < hi. lo == 0 is replaced by
// opts.floor. Uses Simpson in u = log s.
double log_simpson(const std::function<double(double)>& f, double lo, double hi,
                   const Options& opts = {});

// Plain composite Simpson on a uniform grid (n intervals, even).
double simpson(const std::function<double(double)>& f, double a, double b, int n);

// True when ∫_{floor/2}^{hi} differs from ∫_{floor}^{hi} by more than
// rel_change of the latter: the integral is considered divergent at 0.
bool diverges_at_zero(const std::function<double(double)>& f, double hi,
                      double floor_value = 1e-10, double rel_change = 0.01);

// n log-spaced points in [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace riv::quad
