#pragma once

#include <optional>
#include <string>

namespace fracmart::bounds {

// C_t = 2 + sqrt(2) t^2, the constant in front of every uniform-deviation
// probability bound.
double c_t_constant(double t);

// Case (i) kappa: kappa^2 = 4 pi (beta beta' / (beta' - beta))^3, beta' > beta.
double kappa_case_i(double beta, double beta_prime);

// Cases (ii)/(iii) kappa: (pi/2)^{1/2} eps^{-3/2}, eps > 0.
double kappa_eps(double eps);

// c1 = 2^{11/2} pi^{1/2} (bb'/(b'-b))^{3/2} [b(b'-2)/(b'-b)]^{(b'-2)/(2b)},
// defined for beta' > beta > 2.
double c1_constant(double beta, double beta_prime);

// C_{b,b'} = [b(b'-2)/(b'-b)]^{(b'-2)/b}, for beta' > beta and beta' > 2.
double C_beta_betaprime(double beta, double beta_prime);

enum class TheoremCase { i, ii, iii };

std::string case_name(TheoremCase c);
TheoremCase parse_case(const std::string& s);

// Parameters of one uniform deviation inequality. Constraints per case:
//   (i)   alpha < 0 and beta' > beta;
//   (ii)  alpha > 0 and 0 < eps < alpha;
//   (iii) -1/2 < alpha < 1/2, 0 < eps < 1/2 + alpha, and c_inf set.
// L >= 1 always; nu_t >= 0 (cases i and ii condition on it).
struct BoundSpec {
    double alpha = 0.0;
    TheoremCase kase = TheoremCase::iii;
    double beta_prime = 0.0;  // case i
    double eps = 0.0;         // cases ii and iii
    double L = 1.0;
    double t = 1.0;
    double nu_t = 0.0;
    std::optional<double> c_inf;  // case iii

    double beta() const { return 2.0 / (1.0 + 2.0 * alpha); }
    void validate() const;  // throws std::invalid_argument naming the violated constraint
};

struct BoundValue {
    double threshold = 0.0;          // deviation level on the left of the inequality
    double probability_bound = 0.0;  // raw C_t exp(...); may exceed 1
    double c_t = 0.0;
    double kappa = 0.0;
    std::optional<double> c1;    // case i
    std::optional<double> c_bb;  // case i
    std::string conditioning;    // human-readable description of the nu_t event ("" for iii)
};

BoundValue theorem_bound(const BoundSpec& spec);

enum class FixedTimeVariant { intro, remark };

// Fixed-time bounds for alpha < 0 on P(|M_t| >= u, conditioning event):
//   intro:  2 exp(-u^2 / (4 t^{2a} nu_t)),        event int xi^2 <= nu_t;
//   remark: 2 exp(-u^2 / (4 C_{b,b'} t^{2(b'-b)/(bb')} nu_t)),
//           event (int |xi|^{b'})^{2/b'} <= nu_t.
double bound_fixed_time(double alpha, double u, double t, double nu_t, FixedTimeVariant variant,
                        double beta_prime = 0.0);

// Inverts bound_fixed_time in u: the deviation level at which the bound
// equals `target` (target in (0,2)).
double fixed_time_u_for_bound(double alpha, double t, double nu_t, FixedTimeVariant variant,
                              double target, double beta_prime = 0.0);

// Classical bound  P(sup_{s<=t} |M_s| >= a t) <= 2 exp(-a^2 t / (2c))  for a
// local martingale with <M>_t <= c t.
double bound_classical(double a, double t, double c);

// Optimal constant in |(u+h)^a - u^a| <= C h^e u^{a-e} for a < e < 1:
// C = (|a|/e) * max_{x>=0} x^{1-e}/(1+x)^{1-a}, the maximum sitting at
// x* = (1-e)/(e-a). Zero at a = 0 where the left side vanishes.
double mayo_constant(double alpha, double eps);

// Same constant by golden-section search over x (bracket [0, x*-scale]);
// the closed form and this must agree to 1e-8 relative.
double mayo_constant_numeric(double alpha, double eps);

// Does |(u+h)^a - u^a| <= C h^e u^{a-e} hold at (u, h)?
bool mayo_check(double alpha, double eps, double C, double u, double h);

}  // namespace fracmart::bounds
