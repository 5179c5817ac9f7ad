#include "fracmart/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracmart/normal.hpp"

namespace fracmart::stats {

double sum(std::span<const double> xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

MeanVar mean_var(std::span<const double> xs) {
    MeanVar out;
    out.n = xs.size();
    if (out.n == 0) return out;
    out.mean = sum(xs) / static_cast<double>(out.n);
    if (out.n == 1) return out;
    CompensatedSum sq;
    for (double x : xs) {
        const double d = x - out.mean;
        sq.add(d * d);
    }
    out.variance = sq.value() / static_cast<double>(out.n - 1);
    out.se = std::sqrt(out.variance / static_cast<double>(out.n));
    return out;
}

Interval wilson_interval(std::size_t k, std::size_t n, double level) {
    if (n == 0 || k > n) throw std::invalid_argument("wilson_interval: need 0 <= k <= n, n >= 1");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("wilson_interval: level must be in (0,1)");
    const double z = normal_quantile(0.5 + level / 2.0);
    const double z2 = z * z;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    Interval out;
    out.lo = std::max(0.0, center - half);
    out.hi = std::min(1.0, center + half);
    if (k == 0) out.lo = 0.0;
    if (k == n) out.hi = 1.0;
    return out;
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical(std::size_t n, std::size_t m, double alpha) {
    if (n == 0 || m == 0) throw std::invalid_argument("ks_critical: empty sample");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_critical: bad level");
    const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return c * std::sqrt((nn + mm) / (nn * mm));
}

double quantile(std::span<const double> xs, double p) {
    if (xs.empty()) throw std::invalid_argument("quantile: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: p out of range");
    std::vector<double> s(xs.begin(), xs.end());
    std::sort(s.begin(), s.end());
    const double idx = p * static_cast<double>(s.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(idx);
    if (lo + 1 >= s.size()) return s.back();
    const double frac = idx - static_cast<double>(lo);
    return s[lo] * (1.0 - frac) + s[lo + 1] * frac;
}

double proportion_se(std::size_t k, std::size_t n) {
    if (n == 0) throw std::invalid_argument("proportion_se: n >= 1 required");
    const double a = static_cast<double>(k) + 1.0;
    const double b = static_cast<double>(n - k) + 1.0;
    return std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)));
}

double ks_stat_se(std::size_t n, std::size_t m) {
    const double n_eff = static_cast<double>(n) * static_cast<double>(m) /
                         static_cast<double>(n + m);
    return 0.2603 / std::sqrt(n_eff);
}

double quantile_se(std::span<const double> xs, double p) {
    const std::size_t n = xs.size();
    if (n < 8) throw std::invalid_argument("quantile_se: sample too small");
    std::vector<double> s(xs.begin(), xs.end());
    std::sort(s.begin(), s.end());
    const double band = 1.959964 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    const double plo = std::max(0.0, p - band), phi = std::min(1.0, p + band);
    auto at = [&](double q) {
        const double idx = q * static_cast<double>(n - 1);
        const std::size_t lo = static_cast<std::size_t>(idx);
        if (lo + 1 >= n) return s.back();
        const double f = idx - static_cast<double>(lo);
        return s[lo] * (1.0 - f) + s[lo + 1] * f;
    };
    return (at(phi) - at(plo)) / (2.0 * 1.959964);
}

TrendVerdict check_trend(std::span<const double> stat, std::span<const double> se) {
    if (stat.size() < 2 || se.size() != stat.size())
        throw std::invalid_argument("check_trend: need >= 2 points with matching errors");
    TrendVerdict v;
    v.halved = stat.back() <= 0.5 * stat.front();
    v.no_bad_increase = true;
    for (std::size_t i = 0; i + 1 < stat.size(); ++i) {
        const double step_se = std::sqrt(se[i] * se[i] + se[i + 1] * se[i + 1]);
        if (stat[i + 1] > stat[i] + 2.0 * step_se) v.no_bad_increase = false;
    }
    v.pass = v.halved && v.no_bad_increase;
    return v;
}

}  // namespace fracmart::stats
