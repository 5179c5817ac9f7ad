#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fracmart {

// In-place radix-2 complex FFT, size must be a power of two.
// forward: X_k = sum_j x_j exp(-2*pi*i*j*k/n); inverse includes the 1/n factor.
void fft(std::span<std::complex<double>> data, bool inverse = false);

// Fixed-size plan with precomputed twiddles and bit-reversal permutation;
// markedly faster than the free function when one size is transformed many
// times (the fBm sampler's case). Immutable after construction, shareable
// across threads.
class FftPlan {
public:
    explicit FftPlan(std::size_t size);
    std::size_t size() const { return n_; }
    void forward(std::span<std::complex<double>> data) const;

private:
    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddle_;  // e^{-2 pi i k / n}, k < n/2
};

bool is_power_of_two(std::size_t n);

}  // namespace fracmart
