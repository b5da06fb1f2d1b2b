#pragma once

#include <vector>

#include "qgk/enclosure.hpp"

namespace qgk::cm {

// Truncated Taylor expansion f(x + t) = sum c_k t^k with a per-coefficient
// absolute error bound. Arithmetic propagates the bounds to first order
// and adds a rounding allowance; the bounds are as good as the leaves'.
class Jet {
public:
    Jet() = default;
    explicit Jet(int order);

    static Jet constant(double c, int order, double err = 0.0);
    // Coefficients (x, 1, 0, ...): the independent variable.
    static Jet variable(double x, int order);
    // From derivatives f^(k)(x), k = 0..size-1.
    static Jet from_derivatives(const std::vector<Enclosure>& d);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(int k) const { return c_.at(k); }
    double coeff_error(int k) const { return e_.at(k); }
    void set(int k, double c, double err);

    // f^(k)(x) with its error bound.
    Enclosure derivative_at(int k) const;

    // f' as a jet one order shorter.
    Jet derivative() const;
    // The jet of t -> f(beta t) when this is the jet of f at beta*x.
    Jet scaled(double beta) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);
    Jet& operator+=(double s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, double s) { return a += s; }
    friend Jet operator-(Jet a) { return a *= -1.0; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet exp(const Jet& a);
    // Requires a positive constant term.
    friend Jet log(const Jet& a);
    // Integer powers by repeated products; other exponents via exp(p log a).
    friend Jet pow(const Jet& a, double p);

private:
    std::vector<double> c_;
    std::vector<double> e_;
};

// Leaf expansions around x. `q == 1` selects the classical functions.
// ln Gamma_q(x + t).
Jet ln_gamma_jet(double x, double q, int order);
// psi_q^(n)(x + t).
Jet psi_jet(int n, double x, double q, int order);
// ln(x + t) and (x + t)^p.
Jet log_jet(double x, int order);
Jet power_jet(double x, double p, int order);
// exp(lambda (x + t)).
Jet exp_linear_jet(double lambda, double x, int order);
// ln((1 - q^{x+t})/(1 - q)), with the q = 1 reading ln(x + t).
Jet log_q_bracket_jet(double x, double q, int order);

} // namespace qgk::cm
