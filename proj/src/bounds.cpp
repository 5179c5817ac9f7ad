#include "fracmart/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracmart::bounds {

namespace {
constexpr double kPi = std::numbers::pi;

[[noreturn]] void reject(const std::string& constraint) {
    throw std::invalid_argument("constraint violated: " + constraint);
}
}  // namespace

double c_t_constant(double t) {
    if (!(t > 0.0)) reject("t > 0");
    return 2.0 + std::sqrt(2.0) * t * t;
}

double kappa_case_i(double beta, double beta_prime) {
    if (!(beta_prime > beta)) reject("beta' > beta (case i)");
    const double ratio = beta * beta_prime / (beta_prime - beta);
    return std::sqrt(4.0 * kPi) * std::pow(ratio, 1.5);
}

double kappa_eps(double eps) {
    if (!(eps > 0.0)) reject("eps > 0");
    return std::sqrt(kPi / 2.0) * std::pow(eps, -1.5);
}

double c1_constant(double beta, double beta_prime) {
    if (!(beta > 2.0)) reject("beta > 2 (case i has alpha < 0)");
    if (!(beta_prime > beta)) reject("beta' > beta (case i)");
    const double gap = beta_prime - beta;
    const double first = std::pow(2.0, 5.5) * std::sqrt(kPi) * std::pow(beta * beta_prime / gap, 1.5);
    const double bracket = beta * (beta_prime - 2.0) / gap;
    return first * std::pow(bracket, (beta_prime - 2.0) / (2.0 * beta));
}

double C_beta_betaprime(double beta, double beta_prime) {
    if (!(beta_prime > beta)) reject("beta' > beta");
    if (!(beta_prime > 2.0)) reject("beta' > 2");
    const double bracket = beta * (beta_prime - 2.0) / (beta_prime - beta);
    return std::pow(bracket, (beta_prime - 2.0) / beta);
}

std::string case_name(TheoremCase c) {
    switch (c) {
        case TheoremCase::i: return "i";
        case TheoremCase::ii: return "ii";
        case TheoremCase::iii: return "iii";
    }
    return "?";
}

TheoremCase parse_case(const std::string& s) {
    if (s == "i") return TheoremCase::i;
    if (s == "ii") return TheoremCase::ii;
    if (s == "iii") return TheoremCase::iii;
    throw std::invalid_argument("unknown theorem case '" + s + "' (expected i, ii or iii)");
}

void BoundSpec::validate() const {
    if (!(alpha > -0.5 && alpha < 0.5)) reject("alpha in (-1/2, 1/2)");
    if (!(L >= 1.0)) reject("L >= 1");
    if (!(t > 0.0)) reject("t > 0");
    switch (kase) {
        case TheoremCase::i:
            if (!(alpha < 0.0)) reject("alpha < 0 (case i)");
            if (!(beta_prime > beta())) reject("beta' > beta (case i)");
            if (!(nu_t >= 0.0)) reject("nu_t >= 0");
            break;
        case TheoremCase::ii:
            if (!(alpha > 0.0)) reject("alpha > 0 (case ii)");
            if (!(eps > 0.0 && eps < alpha)) reject("0 < eps < alpha (case ii)");
            if (!(nu_t >= 0.0)) reject("nu_t >= 0");
            break;
        case TheoremCase::iii:
            if (!(eps > 0.0 && eps < 0.5 + alpha)) reject("0 < eps < 1/2 + alpha (case iii)");
            if (!c_inf) reject("c_inf required (case iii)");
            if (!(*c_inf > 0.0)) reject("c_inf > 0");
            break;
    }
}

BoundValue theorem_bound(const BoundSpec& spec) {
    spec.validate();
    BoundValue out;
    out.c_t = c_t_constant(spec.t);
    switch (spec.kase) {
        case TheoremCase::i: {
            const double b = spec.beta();
            const double bp = spec.beta_prime;
            out.kappa = kappa_case_i(b, bp);
            out.c1 = c1_constant(b, bp);
            out.c_bb = C_beta_betaprime(b, bp);
            const double pow_thresh = (bp - b) / (2.0 * b * bp);
            const double pow_exp = (bp - b) / (b * bp);
            out.threshold = spec.L * *out.c1 * std::pow(spec.t, pow_thresh) * std::sqrt(spec.nu_t);
            out.probability_bound =
                out.c_t * std::exp(-out.kappa * out.kappa * spec.L * spec.L /
                                   std::pow(spec.t, pow_exp));
            out.conditioning = "(int_0^t |xi|^beta' ds)^(2/beta') <= nu_t";
            break;
        }
        case TheoremCase::ii: {
            out.kappa = kappa_eps(spec.eps);
            const double pw = spec.alpha - spec.eps;
            out.threshold = spec.L * 64.0 * out.kappa * std::pow(spec.t, pw) * std::sqrt(spec.nu_t);
            out.probability_bound = out.c_t * std::exp(-out.kappa * out.kappa * spec.L * spec.L /
                                                       std::pow(spec.t, 2.0 * pw));
            out.conditioning = "int_0^t xi^2 ds <= nu_t";
            break;
        }
        case TheoremCase::iii: {
            out.kappa = kappa_eps(spec.eps);
            const double pw = 0.5 + spec.alpha - spec.eps;
            out.threshold = spec.L * 64.0 * out.kappa * *spec.c_inf * std::pow(spec.t, pw);
            out.probability_bound = out.c_t * std::exp(-out.kappa * out.kappa * spec.L * spec.L /
                                                       std::pow(spec.t, 2.0 * pw));
            out.conditioning = "";
            break;
        }
    }
    return out;
}

double bound_fixed_time(double alpha, double u, double t, double nu_t, FixedTimeVariant variant,
                        double beta_prime) {
    if (!(alpha > -0.5 && alpha < 0.0)) reject("alpha < 0 (fixed-time bounds)");
    if (!(u > 0.0)) reject("u > 0");
    if (!(t > 0.0)) reject("t > 0");
    if (!(nu_t > 0.0)) reject("nu_t > 0");
    if (variant == FixedTimeVariant::intro)
        return 2.0 * std::exp(-u * u / (4.0 * std::pow(t, 2.0 * alpha) * nu_t));
    const double beta = 2.0 / (1.0 + 2.0 * alpha);
    const double cbb = C_beta_betaprime(beta, beta_prime);
    const double tpow = std::pow(t, 2.0 * (beta_prime - beta) / (beta * beta_prime));
    return 2.0 * std::exp(-u * u / (4.0 * cbb * tpow * nu_t));
}

double fixed_time_u_for_bound(double alpha, double t, double nu_t, FixedTimeVariant variant,
                              double target, double beta_prime) {
    if (!(target > 0.0 && target < 2.0)) reject("target bound in (0, 2)");
    const double log_ratio = -std::log(target / 2.0);
    if (variant == FixedTimeVariant::intro)
        return std::sqrt(4.0 * std::pow(t, 2.0 * alpha) * nu_t * log_ratio);
    const double beta = 2.0 / (1.0 + 2.0 * alpha);
    const double cbb = C_beta_betaprime(beta, beta_prime);
    const double tpow = std::pow(t, 2.0 * (beta_prime - beta) / (beta * beta_prime));
    return std::sqrt(4.0 * cbb * tpow * nu_t * log_ratio);
}

double bound_classical(double a, double t, double c) {
    if (!(a > 0.0 && t > 0.0 && c > 0.0)) reject("a, t, c > 0");
    return 2.0 * std::exp(-a * a * t / (2.0 * c));
}

namespace {
double mayo_objective(double x, double alpha, double eps) {
    if (x <= 0.0) return 0.0;
    return std::pow(x, 1.0 - eps) / std::pow(1.0 + x, 1.0 - alpha);
}
}  // namespace

double mayo_constant(double alpha, double eps) {
    if (!(alpha > -0.5 && alpha < 0.5)) reject("alpha in (-1/2, 1/2)");
    if (!(eps > alpha)) reject("eps > alpha");
    if (!(eps > 0.0 && eps < 1.0)) reject("0 < eps < 1");
    if (alpha == 0.0) return 0.0;  // left side of the inequality is identically zero
    const double x_star = (1.0 - eps) / (eps - alpha);
    return std::fabs(alpha) / eps * mayo_objective(x_star, alpha, eps);
}

double mayo_constant_numeric(double alpha, double eps) {
    if (!(alpha > -0.5 && alpha < 0.5)) reject("alpha in (-1/2, 1/2)");
    if (!(eps > alpha)) reject("eps > alpha");
    if (!(eps > 0.0 && eps < 1.0)) reject("0 < eps < 1");
    if (alpha == 0.0) return 0.0;
    // The objective is unimodal on (0, inf); expand the bracket until the
    // right end is past the maximum, then golden-section.
    double lo = 0.0, hi = 1.0;
    while (mayo_objective(hi * 2.0, alpha, eps) > mayo_objective(hi, alpha, eps)) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    hi *= 2.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = mayo_objective(x1, alpha, eps), f2 = mayo_objective(x2, alpha, eps);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + b); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = mayo_objective(x2, alpha, eps);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = mayo_objective(x1, alpha, eps);
        }
    }
    return std::fabs(alpha) / eps * mayo_objective(0.5 * (a + b), alpha, eps);
}

bool mayo_check(double alpha, double eps, double C, double u, double h) {
    if (!(u > 0.0 && h > 0.0)) throw std::invalid_argument("mayo_check: u > 0 and h > 0 required");
    const double lhs = std::fabs(std::pow(u + h, alpha) - std::pow(u, alpha));
    const double rhs = C * std::pow(h, eps) * std::pow(u, alpha - eps);
    return lhs <= rhs;
}

}  // namespace fracmart::bounds
