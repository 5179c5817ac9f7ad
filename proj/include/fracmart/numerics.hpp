#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fracmart/grid.hpp"
#include "fracmart/paths.hpp"

namespace fracmart::numerics {

// Product-integration weights for int_0^t (t-s)^p f(s) ds with f piecewise
// constant on cells: Omega_i = [(t-s_{i-1})^{p+1} - (t-s_i)^{p+1}]/(p+1),
// i = 1..n. The weights telescope: sum Omega_i = t^{p+1}/(p+1) exactly.
// Valid for any p > -1, which covers the Toeplitz kernel (p = alpha-1 in
// (-1,-1/2)) and the squared fractional kernel (p = 2 alpha in (-1,1)).
std::vector<double> singular_weights(double p, const TimeGrid& grid);

// sum Omega_i f(s_{i-1}) with f sampled at cell left endpoints
// (f_left.size() >= n; extra entries beyond the left endpoints are ignored,
// so a full n+1-point SamplePath value array can be passed directly).
double singular_integral(double p, std::span<const double> f_left, const TimeGrid& grid);

// Weighted-average ratio with the singular weight (t-s)^{alpha-1}, alpha > 0:
//
//     int_0^t (t-s)^{alpha-1} G(s) x(s) ds / int_0^t (t-s)^{alpha-1} G(s) ds,
//
// with G(s) = int_0^s gamma, accumulated on the same grid by left-Riemann.
// Converges to lim x whenever int gamma diverges. x and gamma are sampled at
// cell left endpoints.
double toeplitz_ratio(double alpha, std::span<const double> x_left,
                      std::span<const double> gamma_left, const TimeGrid& grid);

// int_R |Phi(z)|^beta dz for the built-in integrand shapes. Only the gauss
// tag has a finite integral: e^{-z^2} gives (pi/beta)^{1/2} in closed form.
// shifted-gauss is bounded below by 1, so the integral diverges and the call
// is rejected.
double phi_beta_integral(paths::PhiTag tag, double beta);

// Numeric fallback for |phi|^beta integrals of decaying functions: adaptive
// Simpson over a widening symmetric window, stopping when the tail slice is
// negligible. Returns {value, error_estimate}; throws if the tail refuses to
// decay (divergent integrand).
struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};
QuadratureResult phi_beta_integral_numeric(const std::function<double(double)>& phi, double beta);

// E[L^H(1,0)] = (2 pi)^{-1/2} / (1-H): the occupation density of fBm at the
// origin has mean int_0^1 (2 pi s^{2H})^{-1/2} ds. Used as the oracle for the
// local-time estimator.
double expected_local_time(double hurst);

}  // namespace fracmart::numerics
