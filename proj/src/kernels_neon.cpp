// NEON kernel variants for aarch64, where 128-bit SIMD is baseline.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

namespace fracmart::kernels::neon {

void axpy(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        float64x2_t y0 = vld1q_f64(y + i);
        float64x2_t y1 = vld1q_f64(y + i + 2);
        float64x2_t y2 = vld1q_f64(y + i + 4);
        float64x2_t y3 = vld1q_f64(y + i + 6);
        y0 = vfmaq_f64(y0, va, vld1q_f64(x + i));
        y1 = vfmaq_f64(y1, va, vld1q_f64(x + i + 2));
        y2 = vfmaq_f64(y2, va, vld1q_f64(x + i + 4));
        y3 = vfmaq_f64(y3, va, vld1q_f64(x + i + 6));
        vst1q_f64(y + i, y0);
        vst1q_f64(y + i + 2, y1);
        vst1q_f64(y + i + 4, y2);
        vst1q_f64(y + i + 6, y3);
    }
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double abs_max(const double* x, std::size_t n) {
    float64x2_t m = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(x + i)));
    double r = vmaxvq_f64(m);
    for (; i < n; ++i) {
        double a = x[i] < 0.0 ? -x[i] : x[i];
        if (a > r) r = a;
    }
    return r;
}

}  // namespace fracmart::kernels::neon

#endif  // __aarch64__
