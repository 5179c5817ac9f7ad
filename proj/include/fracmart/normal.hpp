#pragma once

namespace fracmart {

// Standard normal quantile, Wichura's algorithm AS 241 (PPND16).
// Plain rational approximations, ~1e-15 absolute accuracy, no libm
// dependence beyond sqrt/log, so results are identical across platforms.
double normal_quantile(double p);

// Standard normal CDF via erfc.
double normal_cdf(double x);

}  // namespace fracmart
