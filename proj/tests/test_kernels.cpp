#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fracmart/fft.hpp"
#include "fracmart/kernels.hpp"
#include "fracmart/rng.hpp"

using namespace fracmart;

namespace {
std::vector<double> random_vec(std::size_t n, std::uint64_t stream) {
    std::vector<double> v(n);
    RandomStream(777, stream).fill_normals(v);
    return v;
}
}  // namespace

// The dispatched kernels (scalar / AVX2 / NEON, chosen at runtime) must agree
// with the plain reference loops on awkward lengths, including the remainders
// around every unroll width.
TEST_CASE("dispatched kernels match the scalar references") {
    INFO("active variant: ", kernels::active_variant());
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 31u, 63u, 64u, 65u,
                          1000u, 4096u, 4097u}) {
        auto x = random_vec(n, 2 * n);
        auto y0 = random_vec(n, 2 * n + 1);
        auto y1 = y0;
        kernels::ref::axpy(0.73, x.data(), y0.data(), n);
        kernels::axpy(0.73, x.data(), y1.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(y1[i] == doctest::Approx(y0[i]).epsilon(1e-14));

        const double d0 = kernels::ref::dot(x.data(), y0.data(), n);
        const double d1 = kernels::dot(x.data(), y0.data(), n);
        const double scale = std::max(1.0, std::fabs(d0));
        CHECK(std::fabs(d1 - d0) <= 1e-12 * scale * std::max<std::size_t>(1, n));

        CHECK(kernels::abs_max(x.data(), n) == kernels::ref::abs_max(x.data(), n));
    }
}

TEST_CASE("abs_max handles signs and interior maxima") {
    std::vector<double> v = {0.0, -3.0, 2.0};
    CHECK(kernels::abs_max(v.data(), v.size()) == 3.0);
    std::vector<double> w = {-0.5};
    CHECK(kernels::abs_max(w.data(), 1) == 0.5);
}

TEST_CASE("fft matches a naive DFT; the plan matches the free function") {
    const std::size_t n = 64;
    std::vector<std::complex<double>> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = {std::sin(0.7 * static_cast<double>(i)), std::cos(1.3 * static_cast<double>(i))};
    std::vector<std::complex<double>> want(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            want[k] += x[j] * std::exp(std::complex<double>(
                                  0.0, -2.0 * std::numbers::pi *
                                           static_cast<double>(j * k) / static_cast<double>(n)));
    auto via_fn = x;
    fft(via_fn);
    auto via_plan = x;
    FftPlan(n).forward(via_plan);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(via_fn[k] - want[k]) < 1e-10);
        CHECK(std::abs(via_plan[k] - want[k]) < 1e-10);
    }
    auto back = via_fn;
    fft(back, true);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(back[k] - x[k]) < 1e-12);
    CHECK_THROWS_AS(fracmart::FftPlan(12), std::invalid_argument);
}
