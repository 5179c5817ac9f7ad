#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracmart/bounds.hpp"
#include "fracmart/grid.hpp"
#include "fracmart/paths.hpp"
#include "fracmart/stats.hpp"

namespace fracmart::experiments {

// Knobs shared by every Monte Carlo experiment. A config plus these options
// reproduces every number in a report exactly.
struct McOptions {
    std::size_t replicates = 10000;
    std::size_t grid_cells = 4096;
    std::uint64_t seed = 0;
    int workers = 0;          // 0: resolve from FRACMART_WORKERS / hardware
    std::size_t pilot = 1000; // pilot replicates for the nu_t policy
};

// Empirical exceedance probability of the joint event {deviation, nu_t event}
// with its Wilson interval, tested against the evaluated bound.
struct TailEstimate {
    std::size_t exceed_count = 0;  // joint event
    std::size_t uncond_count = 0;  // deviation regardless of the conditioning event
    std::size_t replicates = 0;
    double p_hat = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    double event_freq = 0.0;  // fraction of replicates satisfying the nu_t event
    double nu_t = 0.0;
    std::size_t pilot_size = 0;  // 0 when nu_t was given explicitly
    bounds::BoundValue bound;
    bool pass = false;  // Wilson lower bound <= probability bound
};

struct TailConfig {
    bounds::TheoremCase kase = bounds::TheoremCase::iii;
    double alpha = 0.0;
    double beta_prime = 0.0;  // case i
    double eps = 0.0;         // cases ii, iii
    double L = 1.0;
    double t = 1.0;
    std::optional<double> nu_t;  // empty: median of the conditioning statistic over a pilot run
    paths::IntegrandSpec integrand;
};

// Simulate xi and W, form M^(a), take the running sup over the grid, and test
// threshold exceedance jointly with the conditioning event against the
// matching theorem bound.
TailEstimate verify_bound(const TailConfig& cfg, const McOptions& opt);

struct FixedTimeConfig {
    bounds::FixedTimeVariant variant = bounds::FixedTimeVariant::intro;
    double alpha = -0.25;
    double beta_prime = 6.0;  // remark variant
    double t = 1.0;
    std::optional<double> u;             // deviation level; or
    std::optional<double> bound_target;  // calibrate u so the bound equals this
    std::optional<double> nu_t;
    paths::IntegrandSpec integrand;
};

// Same pipeline as verify_bound but the statistic is |M_t| at the terminal
// time only (O(n) per replicate).
TailEstimate verify_fixed_time(const FixedTimeConfig& cfg, const McOptions& opt);

// Ordered-ladder statistic with a computed monotone-decrease verdict.
struct TrendReport {
    std::string statistic;      // what the per-t numbers are
    std::vector<double> t_values;
    std::vector<double> stat;
    std::vector<double> se;
    stats::TrendVerdict verdict;
};

struct WllnConfig {
    double alpha = 0.0;
    double eta = 0.5;
    std::vector<double> t_values = {10.0, 40.0, 160.0};
    paths::IntegrandSpec integrand;
};

struct WllnResult {
    TrendReport trend;  // statistic: P(sup |M| / S_{beta,m} > eta)
    std::vector<std::size_t> exceed;      // per t
    std::vector<std::size_t> degenerate;  // paths with S == 0, reported separately
    std::vector<double> lo, hi;           // Wilson interval per t
};

WllnResult verify_wlln(const WllnConfig& cfg, const McOptions& opt);

struct LocalTimeEstimate {
    double value = 0.0;
    bool bias_warning = false;  // delta below the typical grid increment
};

// (2 delta)^{-1} * (grid time with |path| <= delta): occupation-measure
// estimate of the local time at 0 over the path's horizon.
LocalTimeEstimate local_time_estimate(const SamplePath& path, double delta);

struct ApplyConfig {
    double hurst = 0.5;
    double alpha = 0.0;
    std::vector<double> t_values = {10.0, 100.0, 1000.0};
    // Local-time bandwidth and reference grid; 0 selects the H-adaptive
    // defaults below.
    double delta = 0.0;
    std::size_t ref_cells = 0;
};

// The window estimator's bandwidth bias scales like delta^{(1-H)/H}, so a
// bandwidth adequate for H = 1/2 is far too wide for persistent paths.
// auto_delta anchors the H = 1/2 case at 0.05 and keeps the relative bias
// comparable across H; auto_ref_cells picks the smallest power-of-two grid
// whose typical increment resolves that bandwidth (clamped to [2^12, 2^18]).
double auto_delta(double hurst);
std::size_t auto_ref_cells(double hurst, double delta);

// Mean of the local-time estimate over fBm replicates, with the count of
// bias warnings; the delta sensitivity reports rerun this at delta/2 and
// 2*delta.
struct LocalTimeMean {
    double mean = 0.0;
    double se = 0.0;
    std::size_t warnings = 0;
    double delta = 0.0;
    std::size_t cells = 0;
};
LocalTimeMean local_time_mean(double hurst, double delta, std::size_t cells,
                              const McOptions& opt);

struct ApplyResult {
    TrendReport trend;             // statistic: two-sample KS distance per t
    std::vector<double> critical;  // 1% KS critical value per t
    bool final_pass = false;       // last KS distance below its critical value
    double phi_integral = 0.0;     // int |Phi|^beta closed form
    double delta = 0.0;            // bandwidth actually used
    std::size_t ref_cells = 0;     // reference grid actually used
};

// Local-time limit check: compare t^{H-1} int_0^t |Phi(B^H)|^beta ds against
// (int |Phi|^beta dz) * LH(1,0) sampled independently via the local-time
// estimator; KS distances along the t ladder must fall and end below the 1%
// critical value.
ApplyResult verify_apply(const ApplyConfig& cfg, const McOptions& opt);

struct Conv00Config {
    double alpha = 0.25;
    std::vector<double> t_values = {10.0, 100.0, 1000.0};
    paths::IntegrandSpec integrand;
    std::size_t cells_per_unit = 4;  // grid density on [0, t_max]
};

struct Conv00Result {
    std::vector<double> t_values;
    std::vector<double> median_abs;
    std::vector<double> p90_abs;
    std::vector<double> p90_se;
    std::vector<double> theory_sd;  // sqrt(2a+1) t^{-(a+1/2)}, xi == 1 only (else empty)
    stats::TrendVerdict median_trend;
    stats::TrendVerdict p90_trend;
};

// Ratio-decay check: per path, M^(a)_t / int_0^t (t-s)^{2a} xi^2 ds at each t of
// the ladder (same xi realization throughout); medians and 90th percentiles
// of |ratio| must fall along the ladder.
Conv00Result verify_conv00(const Conv00Config& cfg, const McOptions& opt);

}  // namespace fracmart::experiments
