#include "fracmart/paths.hpp"

#include <memory>

#include <cmath>
#include <complex>
#include <cstdio>

#include "fracmart/fft.hpp"
#include "fracmart/kernels.hpp"

namespace fracmart::paths {

std::vector<double> bm_increments(const TimeGrid& grid, RandomStream stream) {
    const std::size_t n = grid.cells();
    std::vector<double> dw(n);
    stream.fill_normals(dw);
    const double scale = std::sqrt(grid.step());
    for (double& v : dw) v *= scale;
    return dw;
}

double fbm_covariance(double s, double u, double hurst) {
    const double h2 = 2.0 * hurst;
    return 0.5 * (std::pow(s, h2) + std::pow(u, h2) - std::pow(std::fabs(s - u), h2));
}

namespace {

// fGn autocovariance at lag k for step dt: dt^{2H}/2 * (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H});
// note |k-1| = 1 at k = 0, giving gamma(0) = dt^{2H}.
double fgn_autocov(std::size_t k, double hurst, double dt) {
    const double h2 = 2.0 * hurst;
    const double kk = static_cast<double>(k);
    const double second_diff = std::pow(kk + 1.0, h2) - 2.0 * std::pow(kk, h2) +
                               std::pow(std::fabs(kk - 1.0), h2);
    return 0.5 * std::pow(dt, h2) * second_diff;
}

std::vector<double> cholesky_lower(std::vector<double> a, std::size_t n) {
    // In-place lower Cholesky of a row-packed symmetric matrix.
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0.0))
            throw std::runtime_error("fbm exact: covariance not positive definite on this grid");
        const double root = std::sqrt(d);
        a[j * n + j] = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j] - kernels::dot(&a[i * n], &a[j * n], j);
            a[i * n + j] = s / root;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) a[i * n + j] = 0.0;
    return a;
}

}  // namespace

FbmSampler::FbmSampler(TimeGrid grid, double hurst, FbmMethod method)
    : grid_(grid), hurst_(hurst), method_(method) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::invalid_argument("fbm: Hurst parameter must be in (0,1)");
    const std::size_t n = grid_.cells();
    if (method_ == FbmMethod::exact) {
        std::vector<double> cov(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cov[i * n + j] = fbm_covariance(grid_.point(i + 1), grid_.point(j + 1), hurst_);
        chol_ = cholesky_lower(std::move(cov), n);
    } else {
        if (!is_power_of_two(n))
            throw std::invalid_argument(
                "fbm circulant: cell count must be a power of two (use the exact method)");
        const std::size_t m = 2 * n;
        plan_ = std::make_shared<const FftPlan>(m);
        std::vector<std::complex<double>> c(m);
        for (std::size_t k = 0; k <= n; ++k) c[k] = fgn_autocov(k, hurst_, grid_.step());
        for (std::size_t k = 1; k < n; ++k) c[m - k] = c[k];
        plan_->forward(c);
        sqrt_eig_.resize(m);
        double min_eig = 0.0, max_eig = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            min_eig = std::min(min_eig, c[k].real());
            max_eig = std::max(max_eig, c[k].real());
        }
        if (min_eig < -1e-9 * max_eig) {
            char msg[160];
            std::snprintf(msg, sizeof(msg),
                          "fbm circulant: embedding has negative eigenvalue %.3e (H=%g); "
                          "fall back to the exact method",
                          min_eig, hurst_);
            throw CirculantEmbeddingError(msg);
        }
        for (std::size_t k = 0; k < m; ++k)
            sqrt_eig_[k] = std::sqrt(std::max(0.0, c[k].real()) / static_cast<double>(m));
    }
}

SamplePath FbmSampler::sample(RandomStream stream) const {
    const std::size_t n = grid_.cells();
    SamplePath path = SamplePath::zeros(grid_);
    if (method_ == FbmMethod::exact) {
        std::vector<double> z(n);
        stream.fill_normals(z);
        // path[i+1] = row i of the Cholesky factor times z; rows are lower
        // triangular so the dot product stops at i+1 terms.
        for (std::size_t i = 0; i < n; ++i)
            path.values[i + 1] = kernels::dot(&chol_[i * n], z.data(), i + 1);
        return path;
    }
    const std::size_t m = 2 * n;
    std::vector<double> z(m);
    stream.fill_normals(z);
    std::vector<std::complex<double>> w(m);
    w[0] = sqrt_eig_[0] * z[0];
    w[n] = sqrt_eig_[n] * z[1];
    const double half = std::sqrt(0.5);
    for (std::size_t k = 1; k < n; ++k) {
        const std::complex<double> g(z[2 * k] * half, z[2 * k + 1] * half);
        w[k] = sqrt_eig_[k] * g;
        w[m - k] = sqrt_eig_[m - k] * std::conj(g);
    }
    plan_->forward(w);
    // First n outputs are the fGn increments; the path is their running sum.
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += w[i].real();
        path.values[i + 1] = acc;
    }
    return path;
}

SamplePath fbm_path(const TimeGrid& grid, double hurst, RandomStream stream, FbmMethod method) {
    return FbmSampler(grid, hurst, method).sample(stream);
}

double phi_eval(PhiTag tag, double z) {
    const double g = std::exp(-z * z);
    return tag == PhiTag::gauss ? g : 1.0 + g;
}

double phi_sup(PhiTag tag) { return tag == PhiTag::gauss ? 1.0 : 2.0; }

std::string phi_name(PhiTag tag) { return tag == PhiTag::gauss ? "gauss" : "shifted-gauss"; }

IntegrandSpec IntegrandSpec::constant_xi(double c) {
    IntegrandSpec s;
    s.kind = Kind::constant;
    s.constant = c;
    s.sup_bound = std::fabs(c);
    return s;
}

IntegrandSpec IntegrandSpec::phi_of_fbm(PhiTag tag, double hurst) {
    IntegrandSpec s;
    s.kind = Kind::phi_of_fbm;
    s.phi = tag;
    s.hurst = hurst;
    s.sup_bound = phi_sup(tag);
    return s;
}

std::optional<double> IntegrandSpec::bound() const {
    if (sup_bound) return sup_bound;
    switch (kind) {
        case Kind::constant: return std::fabs(constant);
        case Kind::phi_of_fbm: return phi_sup(phi);
        case Kind::table: return std::nullopt;
    }
    return std::nullopt;
}

std::string IntegrandSpec::describe() const {
    char buf[64];
    switch (kind) {
        case Kind::constant:
            std::snprintf(buf, sizeof(buf), "const:%g", constant);
            return buf;
        case Kind::phi_of_fbm:
            std::snprintf(buf, sizeof(buf), "%s(H=%g)", phi_name(phi).c_str(), hurst);
            return buf;
        case Kind::table: return "table";
    }
    return "?";
}

IntegrandSampler::IntegrandSampler(IntegrandSpec spec, TimeGrid grid)
    : spec_(std::move(spec)), grid_(grid) {
    if (spec_.kind == IntegrandSpec::Kind::table && spec_.table.size() != grid_.cells() + 1)
        throw std::invalid_argument("integrand table: need one value per grid point");
    if (spec_.kind == IntegrandSpec::Kind::phi_of_fbm) {
        const FbmMethod method =
            is_power_of_two(grid_.cells()) ? FbmMethod::circulant : FbmMethod::exact;
        fbm_ = std::make_shared<const FbmSampler>(grid_, spec_.hurst, method);
    }
}

SamplePath IntegrandSampler::sample(RandomStream stream) const {
    const std::size_t n = grid_.cells();
    switch (spec_.kind) {
        case IntegrandSpec::Kind::constant:
            return SamplePath(grid_, std::vector<double>(n + 1, spec_.constant));
        case IntegrandSpec::Kind::phi_of_fbm: {
            SamplePath b = fbm_->sample(stream.substream(channel::integrand));
            for (double& v : b.values) v = phi_eval(spec_.phi, v);
            return b;
        }
        case IntegrandSpec::Kind::table: return SamplePath(grid_, spec_.table);
    }
    throw std::logic_error("integrand sampler: unknown kind");
}

SamplePath integrand_path(const IntegrandSpec& spec, const TimeGrid& grid, RandomStream stream) {
    return IntegrandSampler(spec, grid).sample(stream);
}

}  // namespace fracmart::paths
