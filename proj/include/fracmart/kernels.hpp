#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops shared by the simulation engine. Each kernel has
// a plain scalar reference implementation and, where the hardware supports
// it, a vectorized variant (AVX2+FMA on x86-64, NEON on aarch64) selected
// once at runtime. The reference implementations stay compiled in on every
// target; the equivalence test suite compares the dispatched kernels against
// them on random inputs.
namespace fracmart::kernels {

// y[i] += a * x[i] for i < n. This is the inner loop of the fractional
// convolution and dominates the whole engine's runtime.
void axpy(double a, const double* x, double* y, std::size_t n);

// Sum of x[i] * y[i].
double dot(const double* x, const double* y, std::size_t n);

// max_i |x[i]|.
double abs_max(const double* x, std::size_t n);

namespace ref {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double abs_max(const double* x, std::size_t n);
}  // namespace ref

// Name of the active variant: "avx2", "neon", or "scalar". Forced to
// "scalar" when the environment variable FRACMART_SIMD=scalar is set at
// process start.
std::string active_variant();

}  // namespace fracmart::kernels
