#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace fracmart::stats {

// Neumaier-compensated accumulator. Reductions over replicate arrays run
// through this so that results are insensitive to summation order well below
// every tolerance used in the experiments.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double sum(std::span<const double> xs);

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double se = 0.0;        // standard error of the mean
    std::size_t n = 0;
};

MeanVar mean_var(std::span<const double> xs);

// Wilson score interval for a binomial proportion; closed form, z from the
// normal quantile.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

Interval wilson_interval(std::size_t k, std::size_t n, double level);

// Two-sample Kolmogorov-Smirnov distance (sup norm of the empirical CDF
// difference) and the asymptotic critical value at significance `alpha`:
// c(alpha) * sqrt((n+m)/(n*m)), c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_statistic(std::span<const double> a, std::span<const double> b);
double ks_critical(std::size_t n, std::size_t m, double alpha);

// Type-7 quantile of an unsorted sample (copies and sorts).
double quantile(std::span<const double> xs, double p);

// Standard error proxies for trend checks. proportion_se is the posterior
// SD of Beta(k+1, n-k+1), which stays positive at k = 0 and k = n;
// ks_stat_se is the asymptotic null SD of the two-sample KS statistic.
double proportion_se(std::size_t k, std::size_t n);
double ks_stat_se(std::size_t n, std::size_t m);

// SE of an empirical p-quantile from the binomial order-statistic band.
double quantile_se(std::span<const double> xs, double p);

// Decreasing-trend verdict over an ordered ladder: the last statistic must
// not exceed half the first, and no step may increase by more than two
// combined standard errors.
struct TrendVerdict {
    bool pass = false;
    bool halved = false;
    bool no_bad_increase = false;
};

TrendVerdict check_trend(std::span<const double> stat, std::span<const double> se);

}  // namespace fracmart::stats
