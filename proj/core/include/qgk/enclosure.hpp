#pragma once

#include <cstdint>

namespace qgk {

inline constexpr std::int64_t slow_convergence_terms = 100000;

// A computed value with an absolute error bound. The bound is the
// certified truncation tail plus a heuristic rounding allowance.
struct Enclosure {
    double value = 0.0;
    double abs_error = 0.0;
    std::int64_t terms_used = 0;
    bool slow_convergence = false;

    double lower() const { return value - abs_error; }
    double upper() const { return value + abs_error; }
    bool contains(double x, double slack = 0.0) const
    {
        return x >= lower() - slack && x <= upper() + slack;
    }
};

enum class TailStrategy { geometric_ratio, integral_comparison };

struct TruncationPolicy {
    double eps = 1e-16;
    std::int64_t max_terms = 1000000;
    TailStrategy tail_strategy = TailStrategy::geometric_ratio;

    // Throws UsageError unless eps is in (0,1) and max_terms >= 1.
    void validate() const;
};

enum class QBranch { sub_one, super_one };

// Deformation parameter q > 0, q != 1. The classical case q = 1 goes
// through the ordinary gamma functions instead.
class QParam {
public:
    explicit QParam(double q);

    double value() const { return q_; }
    QBranch branch() const { return q_ < 1.0 ? QBranch::sub_one : QBranch::super_one; }
    // The sub-one base the series run on: q itself, or 1/q.
    double base() const { return q_ < 1.0 ? q_ : 1.0 / q_; }
    // ln(base()), negative; computed from q directly to avoid 1/q rounding.
    double log_base() const;

private:
    double q_;
};

} // namespace qgk
