#pragma once

namespace riv {

// Standard normal density, CDF and quantile. The quantile is Wichura's
// PPND16 rational approximation (algorithm AS 241), relative error below
// 1e-15 across (0,1); the profile code relies on that accuracy.
double norm_pdf(double x);
double norm_cdf(double x);
double norm_ppf(double p);  // throws std::domain_error outside (0,1)

}  // namespace riv
