#include "fracmart/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracmart/stats.hpp"

namespace fracmart::numerics {

std::vector<double> singular_weights(double p, const TimeGrid& grid) {
    if (!(p > -1.0)) throw std::invalid_argument("singular_weights: need p > -1");
    const std::size_t n = grid.cells();
    const double q = p + 1.0;
    // Omega_i depends only on t - s, i.e. on the lag n - i: compute the lag
    // table once and reverse it.
    const double scale = std::pow(grid.step(), q) / q;
    std::vector<double> w(n);
    double prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double next = std::pow(static_cast<double>(k + 1), q);
        w[n - 1 - k] = scale * (next - prev);
        prev = next;
    }
    return w;
}

double singular_integral(double p, std::span<const double> f_left, const TimeGrid& grid) {
    const std::size_t n = grid.cells();
    if (f_left.size() < n)
        throw std::invalid_argument("singular_integral: need f at the n cell left endpoints");
    const std::vector<double> w = singular_weights(p, grid);
    stats::CompensatedSum s;
    for (std::size_t i = 0; i < n; ++i) s.add(w[i] * f_left[i]);
    return s.value();
}

double toeplitz_ratio(double alpha, std::span<const double> x_left,
                      std::span<const double> gamma_left, const TimeGrid& grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("toeplitz_ratio: alpha > 0 required");
    const std::size_t n = grid.cells();
    if (x_left.size() < n || gamma_left.size() < n)
        throw std::invalid_argument("toeplitz_ratio: samples shorter than the grid");
    const double dt = grid.step();
    std::vector<double> g(n), gx(n);
    stats::CompensatedSum acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (gamma_left[i] < 0.0)
            throw std::invalid_argument("toeplitz_ratio: gamma must be nonnegative");
        // G at the left endpoint of cell i: integral of gamma over [0, s_i).
        g[i] = acc.value();
        gx[i] = g[i] * x_left[i];
        acc.add(gamma_left[i] * dt);
    }
    const double den = singular_integral(alpha - 1.0, g, grid);
    if (den == 0.0)
        throw std::invalid_argument("toeplitz_ratio: denominator vanishes (gamma == 0?)");
    const double num = singular_integral(alpha - 1.0, gx, grid);
    return num / den;
}

double phi_beta_integral(paths::PhiTag tag, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("phi_beta_integral: beta > 0 required");
    if (tag == paths::PhiTag::gauss) return std::sqrt(std::numbers::pi / beta);
    throw std::invalid_argument(
        "phi_beta_integral: |Phi|^beta is not integrable for shifted-gauss (Phi >= 1)");
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, int steps) {
    // steps must be even
    const double h = (b - a) / steps;
    double s = f(a) + f(b);
    for (int i = 1; i < steps; ++i) s += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

QuadratureResult phi_beta_integral_numeric(const std::function<double(double)>& phi, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("phi_beta_integral_numeric: beta > 0 required");
    auto integrand = [&](double z) { return std::pow(std::fabs(phi(z)), beta); };
    // Integrate [-w, w] with Richardson control, widening w until the added
    // shell contributes less than the interior tolerance.
    QuadratureResult out;
    double total = 0.0;
    double prev_shell = 0.0;
    double err = 0.0;
    for (int shell = 0; shell < 64; ++shell) {
        const double a = shell == 0 ? 0.0 : std::pow(2.0, shell - 1);
        const double b = std::pow(2.0, shell);
        const double coarse = simpson(integrand, a, b, 512);
        const double fine = simpson(integrand, a, b, 1024);
        const double piece = 2.0 * fine;  // symmetric integrand window
        total += piece;
        err += 2.0 * std::fabs(fine - coarse) / 15.0;
        if (shell > 2) {
            if (piece > prev_shell && prev_shell > 1e-300)
                throw std::runtime_error(
                    "phi_beta_integral_numeric: tail is not decaying; integral looks divergent");
            if (piece < 1e-14 * std::fabs(total)) break;
        }
        prev_shell = piece;
        if (shell == 63)
            throw std::runtime_error("phi_beta_integral_numeric: tail did not converge");
    }
    out.value = total;
    out.error = err;
    return out;
}

double expected_local_time(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::invalid_argument("expected_local_time: H must be in (0,1)");
    return 1.0 / (std::sqrt(2.0 * std::numbers::pi) * (1.0 - hurst));
}

}  // namespace fracmart::numerics
