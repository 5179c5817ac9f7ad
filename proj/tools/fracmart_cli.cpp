// fracmart: simulation and verification toolkit for fractional martingales
// M^(a)_t = int_0^t (t-s)^a xi_s dW_s. Subcommands evaluate the closed-form
// deviation bounds and run the Monte Carlo experiments that check them.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracmart/bounds.hpp"
#include "fracmart/experiments.hpp"
#include "fracmart/fractional.hpp"
#include "fracmart/numerics.hpp"
#include "fracmart/parallel.hpp"
#include "fracmart/paths.hpp"
#include "fracmart/report.hpp"
#include "fracmart/stats.hpp"

using nlohmann::json;
using namespace fracmart;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Binds options so that command-line flags override values from a flat JSON
// config file, which in turn override built-in defaults. The effective
// configuration is echoed into every JSON summary; a summary's "config"
// object therefore replays the run exactly.
class OptionMerge {
public:
    explicit OptionMerge(CLI::App& cmd) : cmd_(cmd) {
        cmd.add_option("--config", config_path_,
                       "JSON config file; explicit flags override its values");
    }

    // Execution/routing knobs (output dir, worker count) are merged like any
    // flag but kept out of the config echo: they never change the numbers, so
    // replayed reports must not depend on them.
    template <class T>
    CLI::Option* bind(const std::string& flag, T& var, const std::string& desc,
                      bool echo = true) {
        CLI::Option* opt = cmd_.add_option(flag, var, desc);
        const std::string key = flag.substr(2);
        merges_.push_back([this, opt, key, &var, echo] {
            if (opt->count() == 0 && file_.contains(key)) var = file_.at(key).get<T>();
            if (echo) echo_[key] = var;
        });
        return opt;
    }

    // Applies the config file and records the effective values. Call first
    // inside the subcommand callback.
    void resolve() {
        if (!config_path_.empty()) {
            std::ifstream in(config_path_);
            if (!in) throw std::runtime_error("cannot read config file " + config_path_);
            json root = json::parse(in);
            file_ = root.is_object() && root.contains("config") ? root.at("config") : root;
        }
        for (auto& m : merges_) m();
    }

    bool has(const std::string& key) const { return file_.contains(key); }
    const json& echo() const { return echo_; }
    json& echo() { return echo_; }

private:
    CLI::App& cmd_;
    std::string config_path_;
    json file_ = json::object();
    json echo_ = json::object();
    std::vector<std::function<void()>> merges_;
};

// Options shared by the Monte Carlo experiment subcommands.
struct RunOpts {
    std::uint64_t seed = 0;
    std::size_t paths = 10000;
    std::size_t cells = 4096;
    int workers = 0;
    std::size_t pilot = 1000;
    std::string out = "out";
    std::string integrand = "const:1";

    CLI::Option* seed_opt = nullptr;

    void bind(OptionMerge& m, bool with_integrand = true) {
        seed_opt = m.bind("--seed", seed, "master seed (required; no silent entropy)");
        m.bind("--paths", paths, "Monte Carlo replicates");
        m.bind("--cells", cells, "grid cells");
        m.bind("--workers", workers, "worker threads (0: FRACMART_WORKERS or hardware)", false);
        m.bind("--pilot", pilot, "pilot replicates for the nu_t policy");
        m.bind("--out", out, "output directory", false);
        if (with_integrand)
            m.bind("--integrand", integrand, "integrand: const:<c>, gauss:<H>, shifted-gauss:<H>");
    }

    void require_seed(const OptionMerge& m) const {
        if (seed_opt->count() == 0 && !m.has("seed"))
            throw CLI::ValidationError("--seed", "a seed is required (flag or config file)");
    }

    experiments::McOptions mc() const {
        experiments::McOptions o;
        o.replicates = paths;
        o.grid_cells = cells;
        o.seed = seed;
        o.workers = workers;
        o.pilot = pilot;
        return o;
    }
};

paths::IntegrandSpec parse_integrand(const std::string& s) {
    const auto colon = s.find(':');
    const std::string kind = s.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "const")
        return paths::IntegrandSpec::constant_xi(arg.empty() ? 1.0 : std::stod(arg));
    if (kind == "gauss")
        return paths::IntegrandSpec::phi_of_fbm(paths::PhiTag::gauss,
                                                arg.empty() ? 0.75 : std::stod(arg));
    if (kind == "shifted-gauss")
        return paths::IntegrandSpec::phi_of_fbm(paths::PhiTag::shifted_gauss,
                                                arg.empty() ? 0.75 : std::stod(arg));
    throw std::invalid_argument("unknown integrand '" + s +
                                "' (expected const:<c>, gauss:<H> or shifted-gauss:<H>)");
}

std::string fmt(double v) { return report::fmt(v); }

void write_reports(const std::string& out_dir, const std::string& name, const report::Csv& csv,
                   const json& summary) {
    const std::filesystem::path base = std::filesystem::path(out_dir);
    report::write_file(base / (name + ".csv"), csv.str());
    report::write_file(base / (name + ".json"), summary.dump(2) + "\n");
}

json tail_row_json(const experiments::TailEstimate& e) {
    return json{{"threshold", e.bound.threshold},
                {"bound", e.bound.probability_bound},
                {"bound_capped", std::min(1.0, e.bound.probability_bound)},
                {"k", e.exceed_count},
                {"k_unconditioned", e.uncond_count},
                {"N", e.replicates},
                {"p_hat", e.p_hat},
                {"lo", e.lo},
                {"hi", e.hi},
                {"event_freq", e.event_freq},
                {"nu_t", e.nu_t},
                {"pilot", e.pilot_size},
                {"conditioning", e.bound.conditioning},
                {"pass", e.pass}};
}

int run_constants(double alpha, double beta_prime, double eps, double t) {
    const frac::Alpha a(alpha);
    std::printf("alpha = %s  beta = %s\n", fmt(alpha).c_str(), fmt(a.beta()).c_str());
    std::printf("C_t(t=%s) = %s\n", fmt(t).c_str(), fmt(bounds::c_t_constant(t)).c_str());
    if (eps > 0.0)
        std::printf("kappa(eps=%s) = %s\n", fmt(eps).c_str(), fmt(bounds::kappa_eps(eps)).c_str());
    if (beta_prime > 0.0) {
        const double b = a.beta();
        std::printf("kappa_i(beta=%s, beta'=%s) = %s\n", fmt(b).c_str(), fmt(beta_prime).c_str(),
                    fmt(bounds::kappa_case_i(b, beta_prime)).c_str());
        std::printf("C_{beta,beta'} = %s\n", fmt(bounds::C_beta_betaprime(b, beta_prime)).c_str());
        if (alpha < 0.0)
            std::printf("c1 = %s\n", fmt(bounds::c1_constant(b, beta_prime)).c_str());
    }
    return kExitPass;
}

int run_bound(const std::string& kase, double alpha, double beta_prime, double eps, double L,
              double t, double nu, double c_inf) {
    bounds::BoundSpec spec;
    spec.kase = bounds::parse_case(kase);
    spec.alpha = alpha;
    spec.beta_prime = beta_prime;
    spec.eps = eps;
    spec.L = L;
    spec.t = t;
    spec.nu_t = nu;
    if (c_inf > 0.0) spec.c_inf = c_inf;
    const auto bv = bounds::theorem_bound(spec);
    std::printf("case %s: threshold = %s\n", kase.c_str(), fmt(bv.threshold).c_str());
    std::printf("probability bound = %s (capped: %s)\n", fmt(bv.probability_bound).c_str(),
                fmt(std::min(1.0, bv.probability_bound)).c_str());
    std::printf("C_t = %s  kappa = %s\n", fmt(bv.c_t).c_str(), fmt(bv.kappa).c_str());
    if (bv.c1)
        std::printf("c1 = %s  C_{beta,beta'} = %s\n", fmt(*bv.c1).c_str(), fmt(*bv.c_bb).c_str());
    if (!bv.conditioning.empty()) std::printf("conditioning: %s\n", bv.conditioning.c_str());
    return kExitPass;
}

int run_mayo(double alpha, double eps, int grid_points) {
    const double closed = bounds::mayo_constant(alpha, eps);
    const double numeric = bounds::mayo_constant_numeric(alpha, eps);
    const double rel =
        closed == 0.0 ? std::fabs(numeric) : std::fabs(closed - numeric) / std::fabs(closed);
    std::printf("C(alpha=%s, eps=%s) = %s\n", fmt(alpha).c_str(), fmt(eps).c_str(),
                fmt(closed).c_str());
    std::printf("golden-section value = %s  (relative gap %s)\n", fmt(numeric).c_str(),
                fmt(rel).c_str());
    bool ok = rel <= 1e-8;
    std::size_t violations = 0;
    for (int iu = 0; iu < grid_points; ++iu) {
        for (int ih = 0; ih < grid_points; ++ih) {
            const double u = std::pow(10.0, -3.0 + 6.0 * iu / (grid_points - 1.0));
            const double h = std::pow(10.0, -3.0 + 6.0 * ih / (grid_points - 1.0));
            if (!bounds::mayo_check(alpha, eps, closed, u, h)) ++violations;
        }
    }
    ok = ok && violations == 0;
    std::printf("sweep %dx%d on (u,h) in [1e-3,1e3]^2: %zu violations -> %s\n", grid_points,
                grid_points, violations, ok ? "PASS" : "FAIL");
    return ok ? kExitPass : kExitFail;
}

int run_calpha(double alpha, double t, const RunOpts& run, const json& echo) {
    const frac::Alpha a(alpha);
    const auto est = frac::estimate_c_alpha(a, TimeGrid(t, run.cells), run.paths, run.seed,
                                            resolve_workers(run.workers));
    std::printf("c_alpha(alpha=%s): %s +- %s  (beta=%s, m=%zu, replicates=%zu)%s\n",
                fmt(alpha).c_str(), fmt(est.value).c_str(), fmt(est.se).c_str(),
                fmt(est.beta).c_str(), est.subdivisions, est.replicates,
                est.low_replicates ? "  WARNING: fewer than 100 replicates" : "");
    report::Csv csv({"alpha", "beta", "t", "m", "replicates", "estimate", "se", "low_replicates"});
    csv.add_row({fmt(alpha), fmt(est.beta), fmt(t), std::to_string(est.subdivisions),
                 std::to_string(est.replicates), fmt(est.value), fmt(est.se),
                 est.low_replicates ? "1" : "0"});
    const json summary{{"experiment", "calpha"}, {"config", echo},
                       {"meta", report::run_meta(run.seed)}, {"estimate", est.value},
                       {"se", est.se},           {"beta", est.beta},
                       {"m", est.subdivisions},  {"low_replicates", est.low_replicates}};
    write_reports(run.out, "calpha", csv, summary);
    return kExitPass;
}

int run_tail(const std::string& kase, double alpha, double beta_prime, double eps, double L,
             double t, double nu, const RunOpts& run, const json& echo) {
    experiments::TailConfig cfg;
    cfg.kase = bounds::parse_case(kase);
    cfg.alpha = alpha;
    cfg.beta_prime = beta_prime;
    cfg.eps = eps;
    cfg.L = L;
    cfg.t = t;
    if (nu >= 0.0) cfg.nu_t = nu;
    cfg.integrand = parse_integrand(run.integrand);
    const auto est = experiments::verify_bound(cfg, run.mc());

    report::Csv csv({"case", "alpha", "beta_prime", "eps", "L", "t", "nu_t", "threshold", "bound",
                     "k", "N", "p_hat", "lo", "hi", "event_freq", "pass"});
    csv.add_row({kase, fmt(alpha), fmt(beta_prime), fmt(eps), fmt(L), fmt(t), fmt(est.nu_t),
                 fmt(est.bound.threshold), fmt(est.bound.probability_bound),
                 std::to_string(est.exceed_count), std::to_string(est.replicates), fmt(est.p_hat),
                 fmt(est.lo), fmt(est.hi), fmt(est.event_freq), est.pass ? "1" : "0"});
    const json summary{{"experiment", "tail"},
                       {"config", echo},
                       {"meta", report::run_meta(run.seed)},
                       {"row", tail_row_json(est)},
                       {"pass", est.pass}};
    write_reports(run.out, "tail", csv, summary);
    std::printf("tail case %s: p_hat=%s in [%s,%s], bound=%s -> %s\n", kase.c_str(),
                fmt(est.p_hat).c_str(), fmt(est.lo).c_str(), fmt(est.hi).c_str(),
                fmt(est.bound.probability_bound).c_str(), est.pass ? "PASS" : "FAIL");
    return est.pass ? kExitPass : kExitFail;
}

int run_fixed_time(const std::string& variant, double alpha, double beta_prime, double u,
                   double bound_target, double t, double nu, const RunOpts& run,
                   const json& echo) {
    if (variant != "intro" && variant != "remark")
        throw std::invalid_argument("unknown variant '" + variant +
                                    "' (expected intro or remark)");
    experiments::FixedTimeConfig cfg;
    cfg.variant = variant == "intro" ? bounds::FixedTimeVariant::intro
                                     : bounds::FixedTimeVariant::remark;
    cfg.alpha = alpha;
    cfg.beta_prime = beta_prime;
    cfg.t = t;
    if (u > 0.0) cfg.u = u;
    if (bound_target > 0.0) cfg.bound_target = bound_target;
    if (nu >= 0.0) cfg.nu_t = nu;
    cfg.integrand = parse_integrand(run.integrand);
    const auto est = experiments::verify_fixed_time(cfg, run.mc());

    report::Csv csv({"variant", "alpha", "beta_prime", "u", "t", "nu_t", "bound", "k", "N",
                     "p_hat", "lo", "hi", "event_freq", "pass"});
    csv.add_row({variant, fmt(alpha), fmt(beta_prime), fmt(est.bound.threshold), fmt(t),
                 fmt(est.nu_t), fmt(est.bound.probability_bound), std::to_string(est.exceed_count),
                 std::to_string(est.replicates), fmt(est.p_hat), fmt(est.lo), fmt(est.hi),
                 fmt(est.event_freq), est.pass ? "1" : "0"});
    const json summary{{"experiment", "fixed-time"},
                       {"config", echo},
                       {"meta", report::run_meta(run.seed)},
                       {"row", tail_row_json(est)},
                       {"pass", est.pass}};
    write_reports(run.out, "fixed_time", csv, summary);
    std::printf("fixed-time %s: u=%s p_hat=%s hi=%s bound=%s -> %s\n", variant.c_str(),
                fmt(est.bound.threshold).c_str(), fmt(est.p_hat).c_str(), fmt(est.hi).c_str(),
                fmt(est.bound.probability_bound).c_str(), est.pass ? "PASS" : "FAIL");
    return est.pass ? kExitPass : kExitFail;
}

int run_wlln(double alpha, double eta, std::vector<double> t_values, const RunOpts& run,
             const json& echo) {
    experiments::WllnConfig cfg;
    cfg.alpha = alpha;
    cfg.eta = eta;
    cfg.t_values = std::move(t_values);
    cfg.integrand = parse_integrand(run.integrand);
    const auto res = experiments::verify_wlln(cfg, run.mc());

    report::Csv csv({"alpha", "integrand", "eta", "t", "k", "N", "degenerate", "p_hat", "lo",
                     "hi", "se"});
    json rows = json::array();
    for (std::size_t i = 0; i < cfg.t_values.size(); ++i) {
        csv.add_row({fmt(alpha), cfg.integrand.describe(), fmt(eta), fmt(cfg.t_values[i]),
                     std::to_string(res.exceed[i]), std::to_string(run.paths),
                     std::to_string(res.degenerate[i]), fmt(res.trend.stat[i]), fmt(res.lo[i]),
                     fmt(res.hi[i]), fmt(res.trend.se[i])});
        rows.push_back(json{{"t", cfg.t_values[i]},
                            {"k", res.exceed[i]},
                            {"degenerate", res.degenerate[i]},
                            {"p_hat", res.trend.stat[i]},
                            {"lo", res.lo[i]},
                            {"hi", res.hi[i]},
                            {"se", res.trend.se[i]}});
    }
    const bool pass = res.trend.verdict.pass;
    const json summary{{"experiment", "wlln"},
                       {"config", echo},
                       {"meta", report::run_meta(run.seed)},
                       {"rows", rows},
                       {"verdict", json{{"pass", pass},
                                        {"halved", res.trend.verdict.halved},
                                        {"no_bad_increase", res.trend.verdict.no_bad_increase}}},
                       {"pass", pass}};
    write_reports(run.out, "wlln", csv, summary);
    std::printf("wlln alpha=%s eta=%s: p_hat =", fmt(alpha).c_str(), fmt(eta).c_str());
    for (double p : res.trend.stat) std::printf(" %s", fmt(p).c_str());
    std::printf(" -> %s\n", pass ? "PASS" : "FAIL");
    return pass ? kExitPass : kExitFail;
}

int run_apply(double hurst, double alpha, std::vector<double> t_values, double delta,
              std::size_t ref_cells, const RunOpts& run, const json& echo) {
    experiments::ApplyConfig cfg;
    cfg.hurst = hurst;
    cfg.alpha = alpha;
    cfg.t_values = std::move(t_values);
    cfg.delta = delta;
    cfg.ref_cells = ref_cells;
    const auto res = experiments::verify_apply(cfg, run.mc());

    report::Csv csv({"hurst", "alpha", "beta", "t", "ks", "crit", "below_crit"});
    json rows = json::array();
    const double beta = frac::Alpha(alpha).beta();
    for (std::size_t i = 0; i < cfg.t_values.size(); ++i) {
        csv.add_row({fmt(hurst), fmt(alpha), fmt(beta), fmt(cfg.t_values[i]),
                     fmt(res.trend.stat[i]), fmt(res.critical[i]),
                     res.trend.stat[i] <= res.critical[i] ? "1" : "0"});
        rows.push_back(
            json{{"t", cfg.t_values[i]}, {"ks", res.trend.stat[i]}, {"crit", res.critical[i]}});
    }

    // bandwidth sensitivity of the reference estimator (delta/2, delta, 2*delta)
    json sensitivity = json::array();
    for (double d : {res.delta / 2.0, res.delta, 2.0 * res.delta}) {
        experiments::McOptions sens = run.mc();
        sens.replicates = std::min<std::size_t>(run.paths, 1000);
        const auto lt = experiments::local_time_mean(hurst, d, res.ref_cells, sens);
        sensitivity.push_back(
            json{{"delta", d}, {"mean", lt.mean}, {"se", lt.se}, {"warnings", lt.warnings}});
    }

    const bool pass = res.final_pass && res.trend.verdict.pass;
    const json summary{{"experiment", "apply-fbm"},
                       {"config", echo},
                       {"meta", report::run_meta(run.seed)},
                       {"rows", rows},
                       {"phi_integral", res.phi_integral},
                       {"delta", res.delta},
                       {"ref_cells", res.ref_cells},
                       {"local_time_sensitivity", sensitivity},
                       {"verdict", json{{"final_below_crit", res.final_pass},
                                        {"trend_pass", res.trend.verdict.pass}}},
                       {"pass", pass}};
    write_reports(run.out, "apply_fbm", csv, summary);
    std::printf("apply-fbm H=%s alpha=%s: ks =", fmt(hurst).c_str(), fmt(alpha).c_str());
    for (double d : res.trend.stat) std::printf(" %s", fmt(d).c_str());
    std::printf(" (crit %s) -> %s\n", fmt(res.critical.back()).c_str(), pass ? "PASS" : "FAIL");
    return pass ? kExitPass : kExitFail;
}

int run_conv00(double alpha, std::vector<double> t_values, std::size_t density,
               const RunOpts& run, const json& echo) {
    experiments::Conv00Config cfg;
    cfg.alpha = alpha;
    cfg.t_values = std::move(t_values);
    cfg.integrand = parse_integrand(run.integrand);
    cfg.cells_per_unit = density;
    const auto res = experiments::verify_conv00(cfg, run.mc());

    report::Csv csv({"alpha", "integrand", "t", "N", "median_abs", "p90_abs", "p90_se",
                     "theory_sd"});
    json rows = json::array();
    for (std::size_t i = 0; i < res.t_values.size(); ++i) {
        const std::string sd = res.theory_sd.empty() ? "" : fmt(res.theory_sd[i]);
        csv.add_row({fmt(alpha), cfg.integrand.describe(), fmt(res.t_values[i]),
                     std::to_string(run.paths), fmt(res.median_abs[i]), fmt(res.p90_abs[i]),
                     fmt(res.p90_se[i]), sd});
        json row{{"t", res.t_values[i]},
                 {"median_abs", res.median_abs[i]},
                 {"p90_abs", res.p90_abs[i]},
                 {"p90_se", res.p90_se[i]}};
        if (!res.theory_sd.empty()) row["theory_sd"] = res.theory_sd[i];
        rows.push_back(row);
    }
    const bool pass = res.median_trend.pass && res.p90_trend.pass;
    const json summary{{"experiment", "conv00"},
                       {"config", echo},
                       {"meta", report::run_meta(run.seed)},
                       {"rows", rows},
                       {"verdict", json{{"median_pass", res.median_trend.pass},
                                        {"p90_pass", res.p90_trend.pass}}},
                       {"pass", pass}};
    write_reports(run.out, "conv00", csv, summary);
    std::printf("conv00 alpha=%s: p90 =", fmt(alpha).c_str());
    for (double p : res.p90_abs) std::printf(" %s", fmt(p).c_str());
    std::printf(" -> %s\n", pass ? "PASS" : "FAIL");
    return pass ? kExitPass : kExitFail;
}

int run_toeplitz(double alpha, const std::string& function, const std::vector<double>& t_values,
                 std::size_t density, const std::string& out, const json& echo) {
    std::function<double(double)> x;
    if (function == "rational")
        x = [](double s) { return s / (1.0 + s); };
    else if (function == "exp-decay")
        x = [](double s) { return 1.0 + std::exp(-s); };
    else
        throw std::invalid_argument("unknown function '" + function +
                                    "' (expected rational or exp-decay)");
    report::Csv csv({"alpha", "function", "t", "ratio", "abs_err"});
    json rows = json::array();
    bool monotone = true;
    double prev_err = -1.0;
    for (double t : t_values) {
        const TimeGrid grid(t, static_cast<std::size_t>(std::llround(t * double(density))));
        std::vector<double> xs(grid.cells());
        const std::vector<double> gamma(grid.cells(), 1.0);
        for (std::size_t i = 0; i < grid.cells(); ++i) xs[i] = x(grid.point(i));
        const double ratio = numerics::toeplitz_ratio(alpha, xs, gamma, grid);
        const double err = std::fabs(ratio - 1.0);
        if (prev_err >= 0.0 && err > prev_err) monotone = false;
        prev_err = err;
        csv.add_row({fmt(alpha), function, fmt(t), fmt(ratio), fmt(err)});
        rows.push_back(json{{"t", t}, {"ratio", ratio}, {"abs_err", err}});
    }
    const json summary{{"experiment", "toeplitz"},
                       {"config", echo},
                       {"meta", report::run_meta(0)},
                       {"rows", rows},
                       {"pass", monotone}};
    write_reports(out, "toeplitz", csv, summary);
    std::printf("toeplitz alpha=%s %s: |ratio-1| monotone nonincreasing -> %s\n",
                fmt(alpha).c_str(), function.c_str(), monotone ? "PASS" : "FAIL");
    return monotone ? kExitPass : kExitFail;
}

int run_simulate(const std::string& what, double alpha, double hurst, const std::string& method,
                 double t, std::size_t n_paths, const RunOpts& run, const json& echo) {
    const TimeGrid grid(t, run.cells);
    report::Csv csv({"path", "i", "s", "value"});
    auto dump = [&](std::size_t p, const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i)
            csv.add_row(
                {std::to_string(p), std::to_string(i), fmt(grid.point(i)), fmt(values[i])});
    };
    for (std::size_t p = 0; p < n_paths; ++p) {
        RandomStream stream(run.seed, p);
        if (what == "bm") {
            const auto dw = paths::bm_increments(grid, stream.substream(channel::driving_noise));
            std::vector<double> path(grid.cells() + 1, 0.0);
            for (std::size_t i = 0; i < dw.size(); ++i) path[i + 1] = path[i] + dw[i];
            dump(p, path);
        } else if (what == "fbm") {
            const paths::FbmMethod m =
                method == "exact" ? paths::FbmMethod::exact : paths::FbmMethod::circulant;
            dump(p,
                 paths::fbm_path(grid, hurst, stream.substream(channel::driving_noise), m).values);
        } else if (what == "integrand") {
            dump(p, paths::integrand_path(parse_integrand(run.integrand), grid, stream).values);
        } else if (what == "frac") {
            const auto xi = paths::integrand_path(parse_integrand(run.integrand), grid, stream);
            const auto dw = paths::bm_increments(grid, stream.substream(channel::driving_noise));
            dump(p, frac::frac_convolve(frac::Alpha(alpha), xi, dw).values);
        } else {
            throw std::invalid_argument("unknown --what '" + what +
                                        "' (expected bm, fbm, integrand or frac)");
        }
    }
    const json summary{{"experiment", "simulate"},
                       {"config", echo},
                       {"meta", report::run_meta(run.seed)},
                       {"paths", n_paths},
                       {"points", run.cells + 1}};
    write_reports(run.out, "simulate", csv, summary);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracmart: fractional-martingale deviation bounds and their Monte Carlo checks"};
    app.require_subcommand(1);
    int exit_code = kExitPass;
    auto guard = [&exit_code](std::function<int()> body) {
        return [&exit_code, body = std::move(body)] { exit_code = body(); };
    };

    // constants
    auto* c_cmd = app.add_subcommand("constants", "print C_t, kappa, c1, C_{beta,beta'}");
    auto c_merge = std::make_shared<OptionMerge>(*c_cmd);
    auto c_alpha = std::make_shared<double>(0.0);
    auto c_bp = std::make_shared<double>(0.0);
    auto c_eps = std::make_shared<double>(0.0);
    auto c_t = std::make_shared<double>(1.0);
    c_merge->bind("--alpha", *c_alpha, "kernel order alpha in (-1/2,1/2)");
    c_merge->bind("--beta-prime", *c_bp, "beta' > beta (case i constants)");
    c_merge->bind("--eps", *c_eps, "eps for kappa(eps)");
    c_merge->bind("--t", *c_t, "horizon t");
    c_cmd->callback(guard([=] {
        c_merge->resolve();
        return run_constants(*c_alpha, *c_bp, *c_eps, *c_t);
    }));

    // bound
    auto* b_cmd = app.add_subcommand("bound", "evaluate one deviation bound");
    auto b_merge = std::make_shared<OptionMerge>(*b_cmd);
    auto b_case = std::make_shared<std::string>("iii");
    auto b_alpha = std::make_shared<double>(0.0);
    auto b_bp = std::make_shared<double>(0.0);
    auto b_eps = std::make_shared<double>(0.0);
    auto b_L = std::make_shared<double>(1.0);
    auto b_t = std::make_shared<double>(1.0);
    auto b_nu = std::make_shared<double>(1.0);
    auto b_ci = std::make_shared<double>(0.0);
    b_merge->bind("--case", *b_case, "case: i, ii or iii");
    b_merge->bind("--alpha", *b_alpha, "kernel order");
    b_merge->bind("--beta-prime", *b_bp, "beta' (case i)");
    b_merge->bind("--eps", *b_eps, "eps (cases ii, iii)");
    b_merge->bind("--L", *b_L, "deviation multiplier L >= 1");
    b_merge->bind("--t", *b_t, "horizon");
    b_merge->bind("--nu", *b_nu, "conditioning level nu_t");
    b_merge->bind("--c-inf", *b_ci, "sup bound of xi (case iii)");
    b_cmd->callback(guard([=] {
        b_merge->resolve();
        return run_bound(*b_case, *b_alpha, *b_bp, *b_eps, *b_L, *b_t, *b_nu, *b_ci);
    }));

    // mayo
    auto* m_cmd = app.add_subcommand("mayo", "increment-inequality constant and sweep");
    auto m_merge = std::make_shared<OptionMerge>(*m_cmd);
    auto m_alpha = std::make_shared<double>(0.25);
    auto m_eps = std::make_shared<double>(0.5);
    auto m_grid = std::make_shared<int>(50);
    m_merge->bind("--alpha", *m_alpha, "exponent alpha");
    m_merge->bind("--eps", *m_eps, "Hoelder order eps in (alpha, 1)");
    m_merge->bind("--grid", *m_grid, "sweep grid points per axis");
    m_cmd->callback(guard([=] {
        m_merge->resolve();
        return run_mayo(*m_alpha, *m_eps, *m_grid);
    }));

    // calpha
    auto* ca_cmd = app.add_subcommand("calpha", "estimate c_alpha by Monte Carlo");
    auto ca_merge = std::make_shared<OptionMerge>(*ca_cmd);
    auto ca_run = std::make_shared<RunOpts>();
    auto ca_alpha = std::make_shared<double>(0.25);
    auto ca_t = std::make_shared<double>(1.0);
    ca_run->paths = 400;
    ca_merge->bind("--alpha", *ca_alpha, "kernel order");
    ca_merge->bind("--t", *ca_t, "horizon");
    ca_run->bind(*ca_merge, false);
    ca_cmd->callback(guard([=] {
        ca_merge->resolve();
        ca_run->require_seed(*ca_merge);
        return run_calpha(*ca_alpha, *ca_t, *ca_run, ca_merge->echo());
    }));

    // tail
    auto* t_cmd = app.add_subcommand("tail", "uniform deviation bound vs Monte Carlo tail");
    auto t_merge = std::make_shared<OptionMerge>(*t_cmd);
    auto t_run = std::make_shared<RunOpts>();
    auto t_case = std::make_shared<std::string>("iii");
    auto t_alpha = std::make_shared<double>(0.0);
    auto t_bp = std::make_shared<double>(-1.0);
    auto t_eps = std::make_shared<double>(-1.0);
    auto t_L = std::make_shared<double>(1.0);
    auto t_t = std::make_shared<double>(1.0);
    auto t_nu = std::make_shared<double>(-1.0);
    t_merge->bind("--case", *t_case, "theorem case: i, ii or iii");
    t_merge->bind("--alpha", *t_alpha, "kernel order");
    t_merge->bind("--beta-prime", *t_bp, "beta' (case i; default beta + 2)");
    t_merge->bind("--eps", *t_eps, "eps (default: alpha/2 for ii, (1/2+alpha)/2 for iii)");
    t_merge->bind("--L", *t_L, "deviation multiplier");
    t_merge->bind("--t", *t_t, "horizon");
    t_merge->bind("--nu", *t_nu, "conditioning level (default: pilot median)");
    t_run->bind(*t_merge);
    t_cmd->callback(guard([=] {
        t_merge->resolve();
        t_run->require_seed(*t_merge);
        const double beta = 2.0 / (1.0 + 2.0 * *t_alpha);
        const double bp = *t_bp > 0.0 ? *t_bp : beta + 2.0;
        double eps = *t_eps;
        if (eps < 0.0) eps = *t_case == "ii" ? *t_alpha / 2.0 : (0.5 + *t_alpha) / 2.0;
        t_merge->echo()["beta-prime"] = bp;
        t_merge->echo()["eps"] = eps;
        return run_tail(*t_case, *t_alpha, bp, eps, *t_L, *t_t, *t_nu, *t_run, t_merge->echo());
    }));

    // fixed-time
    auto* f_cmd = app.add_subcommand("fixed-time", "terminal-time bound vs Monte Carlo tail");
    auto f_merge = std::make_shared<OptionMerge>(*f_cmd);
    auto f_run = std::make_shared<RunOpts>();
    auto f_variant = std::make_shared<std::string>("intro");
    auto f_alpha = std::make_shared<double>(-0.25);
    auto f_bp = std::make_shared<double>(6.0);
    auto f_u = std::make_shared<double>(-1.0);
    auto f_target = std::make_shared<double>(-1.0);
    auto f_t = std::make_shared<double>(1.0);
    auto f_nu = std::make_shared<double>(-1.0);
    f_merge->bind("--variant", *f_variant, "intro or remark");
    f_merge->bind("--alpha", *f_alpha, "kernel order (must be negative)");
    f_merge->bind("--beta-prime", *f_bp, "beta' (remark variant)");
    f_merge->bind("--u", *f_u, "deviation level");
    f_merge->bind("--bound-target", *f_target, "calibrate u so the bound equals this");
    f_merge->bind("--t", *f_t, "horizon");
    f_merge->bind("--nu", *f_nu, "conditioning level (default: pilot median)");
    f_run->bind(*f_merge);
    f_cmd->callback(guard([=] {
        f_merge->resolve();
        f_run->require_seed(*f_merge);
        return run_fixed_time(*f_variant, *f_alpha, *f_bp, *f_u, *f_target, *f_t, *f_nu, *f_run,
                              f_merge->echo());
    }));

    // wlln
    auto* w_cmd = app.add_subcommand("wlln", "weak law of large numbers trend");
    auto w_merge = std::make_shared<OptionMerge>(*w_cmd);
    auto w_run = std::make_shared<RunOpts>();
    auto w_alpha = std::make_shared<double>(0.0);
    auto w_eta = std::make_shared<double>(0.5);
    auto w_ts = std::make_shared<std::vector<double>>(std::vector<double>{10.0, 40.0, 160.0});
    w_merge->bind("--alpha", *w_alpha, "kernel order");
    w_merge->bind("--eta", *w_eta, "deviation level eta");
    w_merge->bind("--t-values", *w_ts, "increasing t ladder")->delimiter(',');
    w_run->bind(*w_merge);
    w_cmd->callback(guard([=] {
        w_merge->resolve();
        w_run->require_seed(*w_merge);
        return run_wlln(*w_alpha, *w_eta, *w_ts, *w_run, w_merge->echo());
    }));

    // apply-fbm
    auto* a_cmd = app.add_subcommand("apply-fbm", "local-time limit check for Phi(B^H)");
    auto a_merge = std::make_shared<OptionMerge>(*a_cmd);
    auto a_run = std::make_shared<RunOpts>();
    auto a_h = std::make_shared<double>(0.5);
    auto a_alpha = std::make_shared<double>(0.0);
    auto a_ts = std::make_shared<std::vector<double>>(std::vector<double>{10.0, 100.0, 1000.0});
    auto a_delta = std::make_shared<double>(0.0);
    auto a_ref = std::make_shared<std::size_t>(0);
    a_run->paths = 2000;
    a_merge->bind("--hurst", *a_h, "Hurst parameter of B^H");
    a_merge->bind("--alpha", *a_alpha, "kernel order (fixes beta)");
    a_merge->bind("--t-values", *a_ts, "increasing t ladder")->delimiter(',');
    a_merge->bind("--delta", *a_delta, "local-time bandwidth (0: H-adaptive)");
    a_merge->bind("--ref-cells", *a_ref, "reference grid cells (0: auto)");
    a_run->bind(*a_merge, false);
    a_cmd->callback(guard([=] {
        a_merge->resolve();
        a_run->require_seed(*a_merge);
        return run_apply(*a_h, *a_alpha, *a_ts, *a_delta, *a_ref, *a_run, a_merge->echo());
    }));

    // conv00
    auto* v_cmd = app.add_subcommand("conv00", "a.s. ratio convergence for alpha > 0");
    auto v_merge = std::make_shared<OptionMerge>(*v_cmd);
    auto v_run = std::make_shared<RunOpts>();
    auto v_alpha = std::make_shared<double>(0.25);
    auto v_ts = std::make_shared<std::vector<double>>(std::vector<double>{10.0, 100.0, 1000.0});
    auto v_density = std::make_shared<std::size_t>(4);
    v_merge->bind("--alpha", *v_alpha, "kernel order (> 0)");
    v_merge->bind("--t-values", *v_ts, "increasing t ladder on one shared grid")->delimiter(',');
    v_merge->bind("--density", *v_density, "grid cells per unit time");
    v_run->bind(*v_merge);
    v_cmd->callback(guard([=] {
        v_merge->resolve();
        v_run->require_seed(*v_merge);
        return run_conv00(*v_alpha, *v_ts, *v_density, *v_run, v_merge->echo());
    }));

    // toeplitz
    auto* tz_cmd = app.add_subcommand("toeplitz", "fractional Toeplitz ratio convergence");
    auto tz_merge = std::make_shared<OptionMerge>(*tz_cmd);
    auto tz_alpha = std::make_shared<double>(0.3);
    auto tz_fn = std::make_shared<std::string>("rational");
    auto tz_ts = std::make_shared<std::vector<double>>(std::vector<double>{10.0, 100.0, 1000.0});
    auto tz_density = std::make_shared<std::size_t>(32);
    auto tz_out = std::make_shared<std::string>("out");
    tz_merge->bind("--alpha", *tz_alpha, "kernel order (> 0)");
    tz_merge->bind("--function", *tz_fn, "test function: rational or exp-decay");
    tz_merge->bind("--t-values", *tz_ts, "increasing t ladder")->delimiter(',');
    tz_merge->bind("--density", *tz_density, "grid cells per unit time");
    tz_merge->bind("--out", *tz_out, "output directory", false);
    tz_cmd->callback(guard([=] {
        tz_merge->resolve();
        return run_toeplitz(*tz_alpha, *tz_fn, *tz_ts, *tz_density, *tz_out, tz_merge->echo());
    }));

    // simulate
    auto* s_cmd = app.add_subcommand("simulate", "dump raw paths as CSV for external plotting");
    auto s_merge = std::make_shared<OptionMerge>(*s_cmd);
    auto s_run = std::make_shared<RunOpts>();
    auto s_what = std::make_shared<std::string>("bm");
    auto s_alpha = std::make_shared<double>(0.25);
    auto s_h = std::make_shared<double>(0.75);
    auto s_method = std::make_shared<std::string>("circulant");
    auto s_t = std::make_shared<double>(1.0);
    auto s_n = std::make_shared<std::size_t>(1);
    s_run->paths = 1;
    s_run->cells = 1024;
    s_merge->bind("--what", *s_what, "bm, fbm, integrand or frac");
    s_merge->bind("--alpha", *s_alpha, "kernel order (frac)");
    s_merge->bind("--hurst", *s_h, "Hurst parameter (fbm)");
    s_merge->bind("--method", *s_method, "fbm method: exact or circulant");
    s_merge->bind("--t", *s_t, "horizon");
    s_merge->bind("--n-paths", *s_n, "number of paths to dump");
    s_run->bind(*s_merge);
    s_cmd->callback(guard([=] {
        s_merge->resolve();
        s_run->require_seed(*s_merge);
        return run_simulate(*s_what, *s_alpha, *s_h, *s_method, *s_t, *s_n, *s_run,
                            s_merge->echo());
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
