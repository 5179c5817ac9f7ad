#include "fracmart/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace fracmart::kernels {

namespace ref {

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double abs_max(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

}  // namespace ref

#if defined(FRACMART_HAVE_AVX2)
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double abs_max(const double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double abs_max(const double* x, std::size_t n);
}  // namespace neon
#endif

namespace {

struct Dispatch {
    void (*axpy)(double, const double*, double*, std::size_t) = ref::axpy;
    double (*dot)(const double*, const double*, std::size_t) = ref::dot;
    double (*abs_max)(const double*, std::size_t) = ref::abs_max;
    const char* name = "scalar";
};

Dispatch resolve() {
    Dispatch d;
    const char* force = std::getenv("FRACMART_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return d;
#if defined(FRACMART_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        d.axpy = avx2::axpy;
        d.dot = avx2::dot;
        d.abs_max = avx2::abs_max;
        d.name = "avx2";
        return d;
    }
#endif
#if defined(__aarch64__)
    d.axpy = neon::axpy;
    d.dot = neon::dot;
    d.abs_max = neon::abs_max;
    d.name = "neon";
#endif
    return d;
}

const Dispatch& table() {
    static const Dispatch d = resolve();
    return d;
}

}  // namespace

void axpy(double a, const double* x, double* y, std::size_t n) { table().axpy(a, x, y, n); }
double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }
double abs_max(const double* x, std::size_t n) { return table().abs_max(x, n); }
std::string active_variant() { return table().name; }

}  // namespace fracmart::kernels
