#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracmart/paths.hpp"
#include "fracmart/stats.hpp"

using namespace fracmart;
using paths::FbmMethod;

TEST_CASE("fbm covariance closed form") {
    // H = 1/2 reduces to Brownian covariance min(s,u)
    CHECK(paths::fbm_covariance(0.3, 0.7, 0.5) == doctest::Approx(0.3).epsilon(1e-12));
    // H = 0.75 at (0.5, 1.0): the |s-u| term cancels the s term, leaving 1/2
    CHECK(paths::fbm_covariance(0.5, 1.0, 0.75) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fbm exact sampler reproduces the covariance at (0.5, 1.0), H=0.75") {
    const TimeGrid grid(1.0, 64);
    const paths::FbmSampler sampler(grid, 0.75, FbmMethod::exact);
    const std::size_t reps = 100000;
    double acc = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const SamplePath p = sampler.sample(RandomStream(31, r));
        acc += p.values[32] * p.values[64];
    }
    const double estimate = acc / static_cast<double>(reps);
    // Var(X Y) = R(s,s) R(u,u) + R(s,u)^2 for centered Gaussians
    const double se = std::sqrt((std::pow(0.5, 1.5) + 0.25) / static_cast<double>(reps));
    CHECK(std::fabs(estimate - 0.5) < 3.0 * se);
}

TEST_CASE("fbm terminal variance is t^{2H} for both methods") {
    const std::size_t reps = 20000;
    for (double hurst : {0.3, 0.5, 0.75}) {
        for (auto method : {FbmMethod::exact, FbmMethod::circulant}) {
            const std::size_t n = method == FbmMethod::exact ? 64 : 128;
            const TimeGrid grid(2.0, n);
            const paths::FbmSampler sampler(grid, hurst, method);
            std::vector<double> terminal(reps);
            for (std::size_t r = 0; r < reps; ++r)
                terminal[r] = sampler.sample(RandomStream(57, r)).values[n];
            const double want = std::pow(2.0, 2.0 * hurst);
            const auto mv = stats::mean_var(terminal);
            const double se = want * std::sqrt(2.0 / static_cast<double>(reps));
            CHECK(std::fabs(mv.variance - want) < 3.0 * se);
        }
    }
}

TEST_CASE("fbm self-similarity: Var(B_{ct}) matches Var(c^H B_t)") {
    const double hurst = 0.7, c = 4.0;
    const std::size_t reps = 10000;
    const TimeGrid g1(1.0, 128), gc(c, 128);
    const paths::FbmSampler s1(g1, hurst, FbmMethod::circulant);
    const paths::FbmSampler sc(gc, hurst, FbmMethod::circulant);
    std::vector<double> a(reps), b(reps);
    const double scale = std::pow(c, hurst);
    for (std::size_t r = 0; r < reps; ++r) {
        a[r] = sc.sample(RandomStream(3, r)).values[128];
        b[r] = scale * s1.sample(RandomStream(4, r)).values[128];
    }
    const double va = stats::mean_var(a).variance;
    const double vb = stats::mean_var(b).variance;
    const double se = va * std::sqrt(2.0 / static_cast<double>(reps));
    CHECK(std::fabs(va - vb) < 3.0 * std::sqrt(2.0) * se);
}

TEST_CASE("exact and circulant fbm agree in distribution (terminal KS)") {
    const TimeGrid grid(1.0, 256);
    const std::size_t reps = 10000;
    for (double hurst : {0.3, 0.75}) {
        const paths::FbmSampler exact(grid, hurst, FbmMethod::exact);
        const paths::FbmSampler circ(grid, hurst, FbmMethod::circulant);
        std::vector<double> a(reps), b(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            a[r] = exact.sample(RandomStream(11, r)).values[256];
            b[r] = circ.sample(RandomStream(12, r)).values[256];
        }
        CHECK(stats::ks_statistic(a, b) < stats::ks_critical(reps, reps, 0.01));
    }
}

TEST_CASE("circulant needs a power-of-two cell count") {
    CHECK_THROWS_AS(paths::FbmSampler(TimeGrid(1.0, 100), 0.5, FbmMethod::circulant),
                    std::invalid_argument);
    CHECK_THROWS_AS(paths::FbmSampler(TimeGrid(1.0, 16), 1.2, FbmMethod::exact),
                    std::invalid_argument);
}

TEST_CASE("fbm path starts at zero and replays bit-identically") {
    const TimeGrid grid(1.0, 64);
    const paths::FbmSampler sampler(grid, 0.6, FbmMethod::exact);
    const SamplePath a = sampler.sample(RandomStream(8, 15));
    const SamplePath b = sampler.sample(RandomStream(8, 15));
    CHECK(a.values[0] == 0.0);
    CHECK(a.values == b.values);
}

TEST_CASE("integrand: constant") {
    const TimeGrid grid(1.0, 8);
    const auto spec = paths::IntegrandSpec::constant_xi(1.0);
    const SamplePath xi = paths::integrand_path(spec, grid, RandomStream(1, 0));
    for (double v : xi.values) CHECK(v == 1.0);
    CHECK(spec.bound() == 1.0);
}

TEST_CASE("integrand: gauss tag stays in (0,1], shifted-gauss in (1,2]") {
    const TimeGrid grid(1.0, 256);
    const auto gauss = paths::IntegrandSpec::phi_of_fbm(paths::PhiTag::gauss, 0.75);
    const auto shifted = paths::IntegrandSpec::phi_of_fbm(paths::PhiTag::shifted_gauss, 0.75);
    for (std::uint64_t r = 0; r < 16; ++r) {
        const SamplePath g = paths::integrand_path(gauss, grid, RandomStream(77, r));
        const SamplePath s = paths::integrand_path(shifted, grid, RandomStream(77, r));
        for (std::size_t i = 0; i <= 256; ++i) {
            CHECK(g.values[i] > 0.0);
            CHECK(g.values[i] <= 1.0);
            CHECK(s.values[i] > 1.0);
            CHECK(s.values[i] <= 2.0);
            CHECK(s.values[i] == doctest::Approx(1.0 + g.values[i]).epsilon(1e-15));
        }
    }
    CHECK(shifted.bound() == 2.0);
}

TEST_CASE("integrand: the fbm inside Phi ignores the driving-noise channel") {
    const TimeGrid grid(1.0, 64);
    const auto spec = paths::IntegrandSpec::phi_of_fbm(paths::PhiTag::gauss, 0.6);
    RandomStream fresh(99, 5);
    RandomStream consumed(99, 5);
    std::vector<double> scratch(1000);
    consumed.substream(channel::driving_noise).fill_normals(scratch);
    const SamplePath a = paths::integrand_path(spec, grid, fresh);
    const SamplePath b = paths::integrand_path(spec, grid, consumed);
    CHECK(a.values == b.values);
}

TEST_CASE("integrand: wrong-length table rejected") {
    const TimeGrid grid(1.0, 8);
    paths::IntegrandSpec spec;
    spec.kind = paths::IntegrandSpec::Kind::table;
    spec.table = {1.0, 2.0};
    CHECK_THROWS_AS(paths::integrand_path(spec, grid, RandomStream(0, 0)), std::invalid_argument);
}
