#include "riv/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "riv/errors.hpp"

namespace riv::quad {

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double log_simpson(const std::function<double(double)>& f, double lo, double hi,
                   const Options& opts) {
  if (!(hi > 0.0) || lo < 0.0 || lo >= hi)
    throw std::domain_error("log_simpson: bad interval");
  const double a = std::log(lo > 0.0 ? lo : opts.floor);
  const double b = std::log(hi);
  auto g = [&f](double u) {
    const double s = std::exp(u);
    const double v = f(s) * s;
    if (!std::isfinite(v)) throw SamplingError("log_simpson: non-finite integrand");
    return v;
  };
  int n = opts.init_intervals;
  double prev = simpson(g, a, b, n);
  for (int k = 0; k < opts.max_doublings; ++k) {
    n *= 2;
    const double cur = simpson(g, a, b, n);
    if (std::fabs(cur - prev) <= opts.rel_tol * std::max(std::fabs(cur), 1e-300)) return cur;
    prev = cur;
  }
  return prev;
}

bool diverges_at_zero(const std::function<double(double)>& f, double hi,
                      double floor_value, double rel_change) {
  Options o1, o2;
  o1.floor = floor_value;
  o2.floor = floor_value / 2.0;
  const double v1 = log_simpson(f, 0.0, hi, o1);
  const double v2 = log_simpson(f, 0.0, hi, o2);
  return std::fabs(v2 - v1) > rel_change * std::max(std::fabs(v1), 1e-300);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw std::domain_error("log_grid: bad arguments");
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace riv::quad
