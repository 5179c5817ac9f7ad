#include "fracmart/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracmart/fractional.hpp"
#include "fracmart/numerics.hpp"
#include "fracmart/parallel.hpp"
#include "fracmart/rng.hpp"

namespace fracmart::experiments {

namespace {

// The nu_t-event statistic per theorem case:
//   (i)  (int_0^t |xi|^{beta'} ds)^{2/beta'}
//   (ii) int_0^t xi^2 ds
// both by product quadrature with p = 0 (left Riemann) so that the pilot and
// the replicates evaluate the exact same arithmetic.
double conditioning_statistic(bounds::TheoremCase kase, double beta_prime,
                              const SamplePath& xi) {
    const std::size_t n = xi.grid.cells();
    std::vector<double> f(n);
    if (kase == bounds::TheoremCase::i) {
        for (std::size_t i = 0; i < n; ++i) f[i] = std::pow(std::fabs(xi.values[i]), beta_prime);
        const double integral = numerics::singular_integral(0.0, f, xi.grid);
        return std::pow(integral, 2.0 / beta_prime);
    }
    for (std::size_t i = 0; i < n; ++i) f[i] = xi.values[i] * xi.values[i];
    return numerics::singular_integral(0.0, f, xi.grid);
}

// nu_t policy: explicit value if given, otherwise the median of the
// conditioning statistic over a pilot run on a disjoint stream range.
double resolve_nu(const std::optional<double>& given, bounds::TheoremCase kase, double beta_prime,
                  const paths::IntegrandSampler& sampler, const McOptions& opt,
                  std::size_t& pilot_used) {
    pilot_used = 0;
    if (given) return *given;
    if (kase == bounds::TheoremCase::iii) return 0.0;  // no conditioning event
    if (opt.pilot == 0)
        throw std::invalid_argument("nu_t not given and pilot disabled; set one of them");
    std::vector<double> statistic(opt.pilot);
    parallel_for(opt.pilot, resolve_workers(opt.workers), [&](std::size_t r) {
        RandomStream stream(opt.seed, pilot_stream_base + r);
        statistic[r] = conditioning_statistic(kase, beta_prime, sampler.sample(stream));
    });
    pilot_used = opt.pilot;
    return stats::quantile(statistic, 0.5);
}

TailEstimate aggregate_tail(const std::vector<unsigned char>& joint,
                            const std::vector<unsigned char>& uncond,
                            const std::vector<unsigned char>& event, double nu,
                            std::size_t pilot_used, const bounds::BoundValue& bv) {
    TailEstimate out;
    out.replicates = joint.size();
    for (unsigned char b : joint) out.exceed_count += b;
    for (unsigned char b : uncond) out.uncond_count += b;
    std::size_t evt = 0;
    for (unsigned char b : event) evt += b;
    out.event_freq = static_cast<double>(evt) / static_cast<double>(out.replicates);
    out.p_hat = static_cast<double>(out.exceed_count) / static_cast<double>(out.replicates);
    const stats::Interval ci = stats::wilson_interval(out.exceed_count, out.replicates, 0.95);
    out.lo = ci.lo;
    out.hi = ci.hi;
    out.nu_t = nu;
    out.pilot_size = pilot_used;
    out.bound = bv;
    out.pass = out.lo <= bv.probability_bound;
    return out;
}

}  // namespace

TailEstimate verify_bound(const TailConfig& cfg, const McOptions& opt) {
    if (opt.replicates == 0) throw std::invalid_argument("verify_bound: zero replicates");
    const TimeGrid grid(cfg.t, opt.grid_cells);
    const frac::Alpha alpha(cfg.alpha);
    const paths::IntegrandSampler sampler(cfg.integrand, grid);

    std::size_t pilot_used = 0;
    const double nu = resolve_nu(cfg.nu_t, cfg.kase, cfg.beta_prime, sampler, opt, pilot_used);

    bounds::BoundSpec spec;
    spec.alpha = cfg.alpha;
    spec.kase = cfg.kase;
    spec.beta_prime = cfg.beta_prime;
    spec.eps = cfg.eps;
    spec.L = cfg.L;
    spec.t = cfg.t;
    spec.nu_t = nu;
    if (cfg.kase == bounds::TheoremCase::iii) {
        spec.c_inf = cfg.integrand.bound();
        if (!spec.c_inf)
            throw std::invalid_argument("case iii needs a bounded integrand (c_inf unknown)");
    }
    const bounds::BoundValue bv = bounds::theorem_bound(spec);

    const std::size_t N = opt.replicates;
    std::vector<unsigned char> joint(N), uncond(N), event(N);
    parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
        RandomStream stream(opt.seed, r);
        const SamplePath xi = sampler.sample(stream);
        const std::vector<double> dw =
            paths::bm_increments(grid, stream.substream(channel::driving_noise));
        const SamplePath m_path = frac::frac_convolve(alpha, xi, dw);
        const double sup = frac::running_sup(m_path);
        const bool deviates = sup >= bv.threshold;
        const bool evt = cfg.kase == bounds::TheoremCase::iii
                             ? true
                             : conditioning_statistic(cfg.kase, cfg.beta_prime, xi) <= nu;
        uncond[r] = deviates;
        event[r] = evt;
        joint[r] = deviates && evt;
    });
    return aggregate_tail(joint, uncond, event, nu, pilot_used, bv);
}

TailEstimate verify_fixed_time(const FixedTimeConfig& cfg, const McOptions& opt) {
    if (opt.replicates == 0) throw std::invalid_argument("verify_fixed_time: zero replicates");
    const TimeGrid grid(cfg.t, opt.grid_cells);
    const frac::Alpha alpha(cfg.alpha);
    const paths::IntegrandSampler sampler(cfg.integrand, grid);

    // Both variants condition on a nu_t event; map them onto the matching
    // theorem-case statistic.
    const bounds::TheoremCase stat_case = cfg.variant == bounds::FixedTimeVariant::intro
                                              ? bounds::TheoremCase::ii
                                              : bounds::TheoremCase::i;
    std::size_t pilot_used = 0;
    const double nu =
        resolve_nu(cfg.nu_t, stat_case, cfg.beta_prime, sampler, opt, pilot_used);

    double u;
    if (cfg.u)
        u = *cfg.u;
    else if (cfg.bound_target)
        u = bounds::fixed_time_u_for_bound(cfg.alpha, cfg.t, nu, cfg.variant, *cfg.bound_target,
                                           cfg.beta_prime);
    else
        throw std::invalid_argument("fixed-time: give either u or a target bound");

    const double p_bound = bounds::bound_fixed_time(cfg.alpha, u, cfg.t, nu, cfg.variant,
                                                    cfg.beta_prime);
    bounds::BoundValue bv;
    bv.threshold = u;
    bv.probability_bound = p_bound;
    bv.c_t = 2.0;
    bv.conditioning = cfg.variant == bounds::FixedTimeVariant::intro
                          ? "int_0^t xi^2 ds <= nu_t"
                          : "(int_0^t |xi|^beta' ds)^(2/beta') <= nu_t";

    const std::size_t N = opt.replicates;
    const std::vector<double> lag = frac::kernel_lag_weights(alpha, grid);
    std::vector<unsigned char> joint(N), uncond(N), event(N);
    parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
        RandomStream stream(opt.seed, r);
        const SamplePath xi = sampler.sample(stream);
        const std::vector<double> dw =
            paths::bm_increments(grid, stream.substream(channel::driving_noise));
        const double terminal = frac::frac_terminal(lag, xi.values, dw, grid.cells());
        const bool deviates = std::fabs(terminal) >= u;
        const bool evt = conditioning_statistic(stat_case, cfg.beta_prime, xi) <= nu;
        uncond[r] = deviates;
        event[r] = evt;
        joint[r] = deviates && evt;
    });
    return aggregate_tail(joint, uncond, event, nu, pilot_used, bv);
}

WllnResult verify_wlln(const WllnConfig& cfg, const McOptions& opt) {
    if (cfg.t_values.size() < 2)
        throw std::invalid_argument("verify_wlln: need an increasing ladder of t values");
    if (!std::is_sorted(cfg.t_values.begin(), cfg.t_values.end()) ||
        std::adjacent_find(cfg.t_values.begin(), cfg.t_values.end()) != cfg.t_values.end())
        throw std::invalid_argument("verify_wlln: t values must be strictly increasing");
    if (!cfg.integrand.bounded())
        throw std::invalid_argument("verify_wlln: the integrand must be bounded");
    const frac::Alpha alpha(cfg.alpha);
    const double beta = alpha.beta();
    const std::size_t N = opt.replicates;

    WllnResult out;
    out.trend.statistic = "P(sup|M|/S_beta > eta)";
    out.trend.t_values = cfg.t_values;
    for (std::size_t ti = 0; ti < cfg.t_values.size(); ++ti) {
        const TimeGrid grid(cfg.t_values[ti], opt.grid_cells);
        const paths::IntegrandSampler sampler(cfg.integrand, grid);
        std::vector<unsigned char> exceed(N), degen(N);
        parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
            RandomStream stream(opt.seed, ti * N + r);
            const SamplePath xi = sampler.sample(stream);
            const std::vector<double> dw =
                paths::bm_increments(grid, stream.substream(channel::driving_noise));
            const SamplePath m_path = frac::frac_convolve(alpha, xi, dw);
            const double sup = frac::running_sup(m_path);
            const double variation = frac::beta_variation(m_path, beta, grid.cells());
            if (variation == 0.0) {
                degen[r] = 1;
                return;
            }
            exceed[r] = sup / variation > cfg.eta;
        });
        std::size_t k = 0, d = 0;
        for (std::size_t r = 0; r < N; ++r) {
            k += exceed[r];
            d += degen[r];
        }
        const stats::Interval ci = stats::wilson_interval(k, N, 0.95);
        out.exceed.push_back(k);
        out.degenerate.push_back(d);
        out.lo.push_back(ci.lo);
        out.hi.push_back(ci.hi);
        out.trend.stat.push_back(static_cast<double>(k) / static_cast<double>(N));
        out.trend.se.push_back(stats::proportion_se(k, N));
    }
    out.trend.verdict = stats::check_trend(out.trend.stat, out.trend.se);
    return out;
}

LocalTimeEstimate local_time_estimate(const SamplePath& path, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("local_time_estimate: delta > 0 required");
    const std::size_t n = path.grid.cells();
    std::size_t hits = 0;
    double increment_abs_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(path.values[i]) <= delta) ++hits;
        increment_abs_sum += std::fabs(path.values[i + 1] - path.values[i]);
    }
    LocalTimeEstimate out;
    out.value = static_cast<double>(hits) * path.grid.step() / (2.0 * delta);
    out.bias_warning = delta < increment_abs_sum / static_cast<double>(n);
    return out;
}

double auto_delta(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::invalid_argument("auto_delta: H in (0,1)");
    return std::max(std::pow(0.05, hurst / (1.0 - hurst)), 2e-4);
}

std::size_t auto_ref_cells(double hurst, double delta) {
    std::size_t n = 1 << 12;
    // typical grid increment 0.8 n^{-H} must stay under half the bandwidth
    while (n < (1u << 18) && 0.8 * std::pow(static_cast<double>(n), -hurst) > 0.5 * delta)
        n <<= 1;
    return n;
}

LocalTimeMean local_time_mean(double hurst, double delta, std::size_t cells,
                              const McOptions& opt) {
    const TimeGrid grid(1.0, cells);
    const paths::FbmSampler sampler(grid, hurst, paths::FbmMethod::circulant);
    const std::size_t N = opt.replicates;
    std::vector<double> values(N);
    std::vector<unsigned char> warn(N);
    parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
        RandomStream stream(opt.seed, r);
        const auto est =
            local_time_estimate(sampler.sample(stream.substream(channel::side_sample)), delta);
        values[r] = est.value;
        warn[r] = est.bias_warning;
    });
    const stats::MeanVar mv = stats::mean_var(values);
    LocalTimeMean out;
    out.mean = mv.mean;
    out.se = mv.se;
    out.delta = delta;
    out.cells = cells;
    for (unsigned char w : warn) out.warnings += w;
    return out;
}

ApplyResult verify_apply(const ApplyConfig& cfg, const McOptions& opt) {
    if (cfg.t_values.size() < 2 || !std::is_sorted(cfg.t_values.begin(), cfg.t_values.end()))
        throw std::invalid_argument("verify_apply: need an increasing ladder of t values");
    const frac::Alpha alpha(cfg.alpha);
    const double beta = alpha.beta();
    const double phi_int = numerics::phi_beta_integral(paths::PhiTag::gauss, beta);
    const std::size_t N = opt.replicates;
    const double delta = cfg.delta > 0.0 ? cfg.delta : auto_delta(cfg.hurst);
    const std::size_t ref_cells =
        cfg.ref_cells > 0 ? cfg.ref_cells : auto_ref_cells(cfg.hurst, delta);

    // Reference side: (int |Phi|^beta dz) * LH(1,0), the local time estimated
    // on an independent unit-horizon fBm.
    const TimeGrid unit_grid(1.0, ref_cells);
    const paths::FbmSampler ref_sampler(unit_grid, cfg.hurst, paths::FbmMethod::circulant);
    std::vector<double> reference(N);
    parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
        RandomStream stream(opt.seed, r);
        const SamplePath b = ref_sampler.sample(stream.substream(channel::side_sample));
        reference[r] = phi_int * local_time_estimate(b, delta).value;
    });

    ApplyResult out;
    out.phi_integral = phi_int;
    out.delta = delta;
    out.ref_cells = ref_cells;
    out.trend.statistic = "KS(A_t, reference)";
    out.trend.t_values = cfg.t_values;
    for (std::size_t ti = 0; ti < cfg.t_values.size(); ++ti) {
        const double t = cfg.t_values[ti];
        const TimeGrid grid(t, opt.grid_cells);
        const paths::FbmSampler sampler(grid, cfg.hurst, paths::FbmMethod::circulant);
        const double scale = std::pow(t, cfg.hurst - 1.0);
        std::vector<double> a_sample(N);
        parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
            RandomStream stream(opt.seed, (ti + 1) * N + r);
            const SamplePath b = sampler.sample(stream.substream(channel::driving_noise));
            std::vector<double> f(grid.cells());
            for (std::size_t i = 0; i < grid.cells(); ++i)
                f[i] = std::pow(std::fabs(paths::phi_eval(paths::PhiTag::gauss, b.values[i])), beta);
            a_sample[r] = scale * numerics::singular_integral(0.0, f, grid);
        });
        const double d = stats::ks_statistic(a_sample, reference);
        out.trend.stat.push_back(d);
        out.trend.se.push_back(stats::ks_stat_se(N, N));
        out.critical.push_back(stats::ks_critical(N, N, 0.01));
    }
    out.trend.verdict = stats::check_trend(out.trend.stat, out.trend.se);
    out.final_pass = out.trend.stat.back() <= out.critical.back();
    return out;
}

Conv00Result verify_conv00(const Conv00Config& cfg, const McOptions& opt) {
    if (!(cfg.alpha > 0.0)) throw std::invalid_argument("conv00: alpha > 0 required");
    if (cfg.t_values.empty() || !std::is_sorted(cfg.t_values.begin(), cfg.t_values.end()))
        throw std::invalid_argument("conv00: need an increasing ladder of t values");
    const frac::Alpha alpha(cfg.alpha);
    const double t_max = cfg.t_values.back();
    const std::size_t n_max =
        static_cast<std::size_t>(std::llround(cfg.cells_per_unit * t_max));
    const TimeGrid grid(t_max, n_max);

    // Every ladder point must land on the shared grid: all t share one xi
    // realization, evaluated on prefixes.
    std::vector<std::size_t> t_index;
    for (double t : cfg.t_values) {
        const auto idx = static_cast<std::size_t>(std::llround(t / grid.step()));
        if (idx < 1 || idx > n_max || std::fabs(grid.point(idx) - t) > 1e-9 * t)
            throw std::invalid_argument("conv00: every t must be a grid point of [0, t_max]");
        t_index.push_back(idx);
    }

    const std::vector<double> lag = frac::kernel_lag_weights(alpha, grid);
    std::vector<std::vector<double>> quad_weights;
    for (std::size_t idx : t_index)
        quad_weights.push_back(numerics::singular_weights(2.0 * cfg.alpha, grid.prefix(idx)));

    const paths::IntegrandSampler sampler(cfg.integrand, grid);
    const std::size_t N = opt.replicates;
    const std::size_t T = cfg.t_values.size();
    std::vector<double> abs_ratio(N * T);
    parallel_for(N, resolve_workers(opt.workers), [&](std::size_t r) {
        RandomStream stream(opt.seed, r);
        const SamplePath xi = sampler.sample(stream);
        const std::vector<double> dw =
            paths::bm_increments(grid, stream.substream(channel::driving_noise));
        std::vector<double> xi_sq(n_max);
        for (std::size_t i = 0; i < n_max; ++i) xi_sq[i] = xi.values[i] * xi.values[i];
        for (std::size_t ti = 0; ti < T; ++ti) {
            const std::size_t j = t_index[ti];
            const double numer = frac::frac_terminal(lag, xi.values, dw, j);
            stats::CompensatedSum den;
            for (std::size_t i = 0; i < j; ++i) den.add(quad_weights[ti][i] * xi_sq[i]);
            const double denom = den.value();
            if (!(denom > 0.0))
                throw std::logic_error("conv00: denominator vanished for an allowed integrand");
            abs_ratio[r * T + ti] = std::fabs(numer / denom);
        }
    });

    Conv00Result out;
    out.t_values = cfg.t_values;
    const bool constant_xi = cfg.integrand.kind == paths::IntegrandSpec::Kind::constant;
    for (std::size_t ti = 0; ti < T; ++ti) {
        std::vector<double> col(N);
        for (std::size_t r = 0; r < N; ++r) col[r] = abs_ratio[r * T + ti];
        out.median_abs.push_back(stats::quantile(col, 0.5));
        out.p90_abs.push_back(stats::quantile(col, 0.9));
        out.p90_se.push_back(stats::quantile_se(col, 0.9));
        if (constant_xi)
            out.theory_sd.push_back(std::sqrt(2.0 * cfg.alpha + 1.0) *
                                    std::pow(cfg.t_values[ti], -(cfg.alpha + 0.5)) /
                                    std::fabs(cfg.integrand.constant));
    }
    std::vector<double> med_se(T);
    for (std::size_t ti = 0; ti < T; ++ti) {
        std::vector<double> col(N);
        for (std::size_t r = 0; r < N; ++r) col[r] = abs_ratio[r * T + ti];
        med_se[ti] = stats::quantile_se(col, 0.5);
    }
    out.median_trend = stats::check_trend(out.median_abs, med_se);
    out.p90_trend = stats::check_trend(out.p90_abs, out.p90_se);
    return out;
}

}  // namespace fracmart::experiments
