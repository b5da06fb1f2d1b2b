#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qgk/enclosure.hpp"

namespace qgk::bounds {

enum class RatioBoundMethod {
    alzer_uv,        // q-power bounds with the optimal shifts u(q,s), v(q,s)
    im_midpoint,     // q-power bounds with shifts s/2 and s
    psi_average,     // trapezoid / midpoint bounds through psi_q
    merkle,          // the same pair, classical and strict
    kershaw,         // psi(x + sqrt(s)) lower bound
    logmean_refined, // psi at the logarithmic and identric means
    geomean_refined, // psi at the geometric mean
};

std::string_view to_string(RatioBoundMethod m);
// Throws UsageError for unknown names.
RatioBoundMethod parse_method(std::string_view name);

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    std::optional<RatioBoundMethod> method;
};

// lower <= value <= upper claims, all three sides in one record.
struct Bracket {
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
};

// ln((1 - q^y)/(1 - q)); for q = 1 this is ln y. Requires y > 0.
double ln_q_bracket(double y, double q);

// Optimal shifts for the q-power bounds. Valid for 0 < q <= 1 and
// 0 < s < 1; at q = 1 the limits s/2 and Gamma(s)^{1/(s-1)} are returned.
double alzer_u(double q, double s);
double alzer_v(double q, double s);

// ln(Gamma_q(x+1)/Gamma_q(x+s)).
Enclosure ln_gamma_ratio(double x, double s, double q);

// Bounds for Gamma_q(x+1)/Gamma_q(x+s). The log form is what the
// verification corpus compares; the plain form exponentiates it.
// Throws UsageError when the method does not accept q.
BoundPair ratio_log_bounds(double x, double s, double q, RatioBoundMethod method);
BoundPair ratio_bounds(double x, double s, double q, RatioBoundMethod method);
bool method_accepts(RatioBoundMethod method, double q);

// ((1-q^{x+c})/(1-q))^{a-b} Gamma_q(x+b)/Gamma_q(x+a), q = 1 reading
// (x+c)^{a-b} Gamma(x+b)/Gamma(x+a). Requires x > max(-a, -c).
double ln_g_q_function(double x, double a, double b, double c, double q);
double g_q_function(double x, double a, double b, double c, double q);

// Bounds on Gamma(b)/Gamma(a) for b > a > 0.
BoundPair keckic_vasic_log_bounds(double a, double b);
BoundPair keckic_vasic_bounds(double a, double b);

// Omega_n^2/(Omega_{n-1} Omega_{n+1}) bracket, n >= 1.
Bracket ball_thm51_log(int n);
// (Omega_{n-1}/Omega_n)^2 bracket, n >= 2.
Bracket ball_eq13_log(int n);

struct BallRatioBounds {
    BoundPair thm51;
    double thm51_exact = 0.0;
    std::optional<BoundPair> eq13; // absent for n = 1
    std::optional<double> eq13_exact;
};
BallRatioBounds ball_ratio_bounds(int n);

enum class AuxFunction { f_alpha, G_c, f_ILM, f_qpow, g_AG, beta_scaled };

std::string_view to_string(AuxFunction f);
AuxFunction parse_aux(std::string_view name);

using ParamMap = std::map<std::string, double>;

// Parameters: f_alpha {alpha}, G_c {c}, f_ILM {alpha}, f_qpow {q},
// g_AG {a, q}, beta_scaled {beta, q}. Missing ones are a UsageError.
double auxiliary_function(AuxFunction f, double x, const ParamMap& params);

double f_alpha(double x, double alpha);
double G_c(double x, double c);
double ln_f_ilm(double x, double alpha);
double ln_f_qpow(double x, double q);
double ln_g_ag(double x, double a, double q);
double ln_beta_scaled(double x, double beta, double q);

struct PolyProductSpec {
    int p = 0;
    int m = 0;
    int n = 0;
    int q_idx = 0;
    double c = 0.0;

    // p > m >= n > q_idx >= 0 and m + n = p + q_idx, else UsageError.
    void validate() const;
};

struct PolyConstants {
    double c = 0.0;
    double d = 0.0;
};

PolyConstants poly_constants(int p, int m, int n, int q_idx);
double poly_product(const PolyProductSpec& spec, double x);

double w_qn(double s, double q, int n);
// lower = right-hand side, upper = left-hand side of the power inequality.
BoundPair lemma10_lhs_rhs(double s, double q, int n);

// t^{m-n} + t^n - c (1 + t^m)
double a_poly(double t, int m, int n, double c);
double a_poly_root(int m, int n, double c);
// Sign changes of a_poly on `points` equally spaced nodes over [lo, hi].
int a_poly_sign_changes(int m, int n, double c, double lo, double hi, int points);

enum class PsiPairVariant { classical, q_analogue };

struct PsiPairValues {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
};

PsiPairValues psi_pair_inequality(double x, double c, PsiPairVariant variant,
                                  std::optional<double> q = std::nullopt);

double cor51_expr(double x, double q);

struct LogSides {
    double lhs = 0.0;
    double rhs = 0.0;
};
// Logarithms of both sides; alpha == 1 is a UsageError.
LogSides cor5_log_sides(double x, double y, double z, double alpha, double q);
LogSides cor5_inequality(double x, double y, double z, double alpha, double q);

} // namespace qgk::bounds
