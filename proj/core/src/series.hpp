#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qgk/enclosure.hpp"
#include "qgk/errors.hpp"

namespace qgk::detail {

inline constexpr double mach_eps = std::numeric_limits<double>::epsilon();

// Compensated (Neumaier) running sum that also tracks sum |t_i| and the
// number of terms.
class SeriesSum {
public:
    void add(double t)
    {
        const double s = sum_ + t;
        if (std::abs(sum_) >= std::abs(t)) {
            comp_ += (sum_ - s) + t;
        } else {
            comp_ += (t - s) + sum_;
        }
        sum_ = s;
        abs_ += std::abs(t);
        ++count_;
    }
    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_; }
    std::int64_t count() const { return count_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
    std::int64_t count_ = 0;
};

// Heuristic rounding allowance: terms * eps * |value| plus one ulp-scale
// error per summed magnitude. Not rigorous.
inline double rounding_slop(std::int64_t terms, double value, double abs_sum)
{
    return mach_eps * (static_cast<double>(terms) * std::abs(value) + abs_sum);
}

inline Enclosure make_enclosure(double value, double tail, std::int64_t terms, double abs_sum)
{
    Enclosure e;
    e.value = value;
    e.abs_error = tail + rounding_slop(terms, value, abs_sum);
    e.terms_used = terms;
    e.slow_convergence = terms > slow_convergence_terms;
    return e;
}

[[noreturn]] inline void throw_convergence(const std::string& what, std::int64_t cap)
{
    throw ConvergenceError(what + ": no convergence within " + std::to_string(cap) + " terms");
}

inline void require_positive_finite(double x, const char* fn)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be positive and finite");
    }
}

// B_{2k}, k = 1..30.
inline constexpr double bernoulli_2k[30] = {
    1.6666666666666666667e-1,  -3.3333333333333333333e-2, 2.3809523809523809524e-2,
    -3.3333333333333333333e-2, 7.5757575757575757576e-2,  -2.5311355311355311355e-1,
    1.1666666666666666667,     -7.0921568627450980392,    5.4971177944862155388e+1,
    -5.2912424242424242424e+2, 6.1921231884057971014e+3,  -8.6580253113553113553e+4,
    1.4255171666666666667e+6,  -2.7298231067816091954e+7, 6.0158087390064236838e+8,
    -1.5116315767092156863e+10, 4.2961464306116666667e+11, -1.3711655205088332772e+13,
    4.8833231897359316667e+14, -1.9296579341940068149e+16, 8.41693047573682615e+17,
    -4.0338071854059455413e+19, 2.1150748638081991606e+21, -1.2086626522296525935e+23,
    7.5008667460769643669e+24, -5.0387781014810689141e+26, 3.6528776484818123335e+28,
    -2.8498769302450882226e+30, 2.3865427499683627645e+32, -2.1399949257225333666e+34,
};

} // namespace qgk::detail
