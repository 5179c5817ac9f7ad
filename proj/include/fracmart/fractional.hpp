#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracmart/grid.hpp"

namespace fracmart::frac {

// Kernel order alpha in (-1/2, 1/2) and the variation order beta = 2/(1+2a)
// it induces: beta > 2 exactly when alpha < 0, and beta = 2 at alpha = 0.
class Alpha {
public:
    explicit Alpha(double a) : value_(a) {
        if (!(a > -0.5 && a < 0.5))
            throw std::invalid_argument("alpha must lie in (-1/2, 1/2)");
    }
    double value() const { return value_; }
    double beta() const { return 2.0 / (1.0 + 2.0 * value_); }

private:
    double value_;
};

// Cell-integrated weights for the singular kernel (t_j - s)^alpha on a
// uniform grid. The integral over cell i depends only on the lag j - i:
//
//   w_{j,i} = [ (t_j-t_{i-1})^{a+1} - (t_j-t_i)^{a+1} ] / ((a+1) step)
//           = step^a * ((k+1)^{a+1} - k^{a+1}) / (a+1),   k = j - i,
//
// finite for every a in (-1/2,1/2) including the singular cell k = 0, and
// identically 1 at a = 0.
std::vector<double> kernel_lag_weights(const Alpha& alpha, const TimeGrid& grid);

// Single-target view: weights w_{j,1..j} for one evaluation index j.
std::vector<double> kernel_weights(const Alpha& alpha, const TimeGrid& grid, std::size_t j);

// Discrete stochastic convolution: M_j = sum_{i<=j} w_{j,i} xi_{t_{i-1}} dW_i
// for every j, with M_0 = 0. One driving dW serves all j. Direct O(n^2); the
// inner loop is kernels::axpy.
SamplePath frac_convolve(const Alpha& alpha, const SamplePath& xi, std::span<const double> dw);

// Terminal value M_j only, O(j). Equals frac_convolve(...).values[j].
double frac_terminal(const Alpha& alpha, const TimeGrid& grid, std::span<const double> xi_left,
                     std::span<const double> dw, std::size_t j);

// Same with the lag-weight table precomputed (lag_weights.size() >= j).
double frac_terminal(std::span<const double> lag_weights, std::span<const double> xi_left,
                     std::span<const double> dw, std::size_t j);

// max over grid points of |value|; a lower bound of the continuous-time sup
// (grid discretization can only miss excursions, never invent them).
double running_sup(const SamplePath& path);
double running_sup(std::span<const double> values);

// S_{beta,m} = sum |X_{t_k} - X_{t_{k-1}}|^beta over the m-point subsampling
// of the stored grid. m must divide the stored cell count; no interpolation.
double beta_variation(const SamplePath& path, double beta, std::size_t m);

struct CAlphaEstimate {
    double value = 0.0;
    double se = 0.0;
    double beta = 0.0;
    std::size_t subdivisions = 0;
    std::size_t replicates = 0;
    bool low_replicates = false;  // flagged below 100 replicates
};

// Monte Carlo estimate of c_alpha in <M^(a)>_{beta,t} = c_alpha int |xi|^beta:
// with xi = 1 the beta-variation per unit time converges to c_alpha, so we
// average S_{beta,n}/t over replicate paths at the finest subdivision m = n.
// The estimate is the variation constant of the discretized convolution read
// at its own grid scale; it is stable under grid refinement and is the right
// normalizer for S_{beta,m} values computed with the same scheme.
CAlphaEstimate estimate_c_alpha(const Alpha& alpha, const TimeGrid& grid, std::size_t replicates,
                                std::uint64_t seed, int workers = 1);

}  // namespace fracmart::frac
