#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracmart/fft.hpp"
#include "fracmart/grid.hpp"
#include "fracmart/rng.hpp"

namespace fracmart::paths {

// Brownian increments dW_i ~ N(0, step), i = 1..n.
std::vector<double> bm_increments(const TimeGrid& grid, RandomStream stream);

// fBm covariance R(s,u) = (s^{2H} + u^{2H} - |s-u|^{2H}) / 2.
double fbm_covariance(double s, double u, double hurst);

enum class FbmMethod { exact, circulant };

// Thrown when the circulant embedding has a negative eigenvalue beyond
// tolerance; callers should rebuild with FbmMethod::exact.
struct CirculantEmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Samples fractional Brownian motion on a fixed grid. Construction does the
// one-time work (covariance factorization, or eigenvalues of the circulant
// embedding); sample() is cheap and const, so one sampler can be shared by
// parallel replicates.
class FbmSampler {
public:
    FbmSampler(TimeGrid grid, double hurst, FbmMethod method);

    SamplePath sample(RandomStream stream) const;

    const TimeGrid& grid() const { return grid_; }
    double hurst() const { return hurst_; }
    FbmMethod method() const { return method_; }

private:
    TimeGrid grid_;
    double hurst_;
    FbmMethod method_;
    // exact: lower Cholesky factor of the n x n covariance, row-packed.
    std::vector<double> chol_;
    // circulant: sqrt(eigenvalue / m) of the 2n embedding plus the FFT plan
    // reused by every sample.
    std::vector<double> sqrt_eig_;
    std::shared_ptr<const FftPlan> plan_;
};

SamplePath fbm_path(const TimeGrid& grid, double hurst, RandomStream stream, FbmMethod method);

enum class PhiTag { gauss, shifted_gauss };

double phi_eval(PhiTag tag, double z);
double phi_sup(PhiTag tag);  // sup |Phi|
std::string phi_name(PhiTag tag);

// The integrand process xi driving M = int xi dW.
struct IntegrandSpec {
    enum class Kind { constant, phi_of_fbm, table };

    Kind kind = Kind::constant;
    double constant = 1.0;
    PhiTag phi = PhiTag::gauss;
    double hurst = 0.75;                  // Hurst of the fBm inside Phi
    std::vector<double> table;            // grid-point values for Kind::table
    std::optional<double> sup_bound;      // c_inf; defaulted for built-ins

    static IntegrandSpec constant_xi(double c);
    static IntegrandSpec phi_of_fbm(PhiTag tag, double hurst);

    // |xi| <= bound() everywhere, when a bound is known.
    std::optional<double> bound() const;
    bool bounded() const { return bound().has_value(); }
    std::string describe() const;
};

// Samples xi at the grid points. For phi_of_fbm the driving fBm comes from
// stream.substream(channel::integrand), so it is independent of the dW draws
// taken from the same replicate stream.
SamplePath integrand_path(const IntegrandSpec& spec, const TimeGrid& grid, RandomStream stream);

// Same sampling with the one-time setup (fBm embedding) hoisted out, shared
// across parallel replicates.
class IntegrandSampler {
public:
    IntegrandSampler(IntegrandSpec spec, TimeGrid grid);
    SamplePath sample(RandomStream replicate_stream) const;
    const IntegrandSpec& spec() const { return spec_; }

private:
    IntegrandSpec spec_;
    TimeGrid grid_;
    std::shared_ptr<const FbmSampler> fbm_;
};

}  // namespace fracmart::paths
