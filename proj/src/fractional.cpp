#include "fracmart/fractional.hpp"

#include <algorithm>
#include <cmath>

#include "fracmart/kernels.hpp"
#include "fracmart/parallel.hpp"
#include "fracmart/paths.hpp"
#include "fracmart/rng.hpp"
#include "fracmart/stats.hpp"

namespace fracmart::frac {

std::vector<double> kernel_lag_weights(const Alpha& alpha, const TimeGrid& grid) {
    const std::size_t n = grid.cells();
    const double p = alpha.value() + 1.0;
    const double scale = std::pow(grid.step(), alpha.value()) / p;
    std::vector<double> w(n);
    double prev = 0.0;  // k^p at k = 0
    for (std::size_t k = 0; k < n; ++k) {
        const double next = std::pow(static_cast<double>(k + 1), p);
        w[k] = scale * (next - prev);
        prev = next;
    }
    return w;
}

std::vector<double> kernel_weights(const Alpha& alpha, const TimeGrid& grid, std::size_t j) {
    if (j < 1 || j > grid.cells())
        throw std::invalid_argument("kernel_weights: target index must satisfy 1 <= j <= n");
    const std::vector<double> lag = kernel_lag_weights(alpha, grid);
    std::vector<double> w(j);
    for (std::size_t i = 1; i <= j; ++i) w[i - 1] = lag[j - i];
    return w;
}

SamplePath frac_convolve(const Alpha& alpha, const SamplePath& xi, std::span<const double> dw) {
    const std::size_t n = xi.grid.cells();
    if (dw.size() != n)
        throw std::invalid_argument("frac_convolve: xi and dW live on different grids");
    SamplePath out = SamplePath::zeros(xi.grid);

    if (alpha.value() == 0.0) {
        // All weights are exactly 1: the convolution collapses to the running
        // sum of xi * dW, accumulated in the same order as the general path.
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += xi.values[i] * dw[i];
            out.values[i + 1] = acc;
        }
        return out;
    }

    const std::vector<double> w = kernel_lag_weights(alpha, xi.grid);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = xi.values[i] * dw[i];
    // Scatter form: source cell i feeds every later evaluation time with a
    // weight depending only on the lag, so each source is one contiguous axpy.
    for (std::size_t i = 0; i < n; ++i)
        kernels::axpy(q[i], w.data(), out.values.data() + i + 1, n - i);
    return out;
}

double frac_terminal(const Alpha& alpha, const TimeGrid& grid, std::span<const double> xi_left,
                     std::span<const double> dw, std::size_t j) {
    if (j < 1 || j > grid.cells())
        throw std::invalid_argument("frac_terminal: 1 <= j <= n required");
    return frac_terminal(kernel_lag_weights(alpha, grid), xi_left, dw, j);
}

double frac_terminal(std::span<const double> lag_weights, std::span<const double> xi_left,
                     std::span<const double> dw, std::size_t j) {
    if (j < 1 || lag_weights.size() < j)
        throw std::invalid_argument("frac_terminal: weight table shorter than target index");
    if (xi_left.size() < j || dw.size() < j)
        throw std::invalid_argument("frac_terminal: inputs shorter than target index");
    std::vector<double> qr(j);
    for (std::size_t i = 0; i < j; ++i) qr[i] = xi_left[j - 1 - i] * dw[j - 1 - i];
    return kernels::dot(lag_weights.data(), qr.data(), j);
}

double running_sup(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("running_sup: empty path");
    return kernels::abs_max(values.data(), values.size());
}

double running_sup(const SamplePath& path) { return running_sup(std::span(path.values)); }

double beta_variation(const SamplePath& path, double beta, std::size_t m) {
    const std::size_t n = path.grid.cells();
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("beta_variation: m must divide the stored cell count");
    if (!(beta >= 1.0)) throw std::invalid_argument("beta_variation: beta must be >= 1");
    const std::size_t stride = n / m;
    stats::CompensatedSum s;
    if (beta == 2.0) {
        for (std::size_t k = 1; k <= m; ++k) {
            const double d = path.values[k * stride] - path.values[(k - 1) * stride];
            s.add(d * d);
        }
    } else {
        for (std::size_t k = 1; k <= m; ++k) {
            const double d = path.values[k * stride] - path.values[(k - 1) * stride];
            s.add(std::pow(std::fabs(d), beta));
        }
    }
    return s.value();
}

CAlphaEstimate estimate_c_alpha(const Alpha& alpha, const TimeGrid& grid, std::size_t replicates,
                                std::uint64_t seed, int workers) {
    if (replicates == 0) throw std::invalid_argument("estimate_c_alpha: need replicates >= 1");
    const double beta = alpha.beta();
    const paths::IntegrandSpec unit = paths::IntegrandSpec::constant_xi(1.0);
    std::vector<double> per_path(replicates);
    parallel_for(replicates, workers, [&](std::size_t r) {
        RandomStream stream(seed, r);
        const std::vector<double> dw =
            paths::bm_increments(grid, stream.substream(channel::driving_noise));
        const SamplePath xi = paths::integrand_path(unit, grid, stream);
        const SamplePath m_path = frac_convolve(alpha, xi, dw);
        per_path[r] = beta_variation(m_path, beta, grid.cells()) / grid.horizon();
    });
    const stats::MeanVar mv = stats::mean_var(per_path);
    CAlphaEstimate out;
    out.value = mv.mean;
    out.se = mv.se;
    out.beta = beta;
    out.subdivisions = grid.cells();
    out.replicates = replicates;
    out.low_replicates = replicates < 100;
    return out;
}

}  // namespace fracmart::frac
