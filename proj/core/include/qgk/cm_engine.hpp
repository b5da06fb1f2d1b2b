#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgk/enclosure.hpp"
#include "qgk/jet.hpp"

namespace qgk::cm {

using ParamMap = std::map<std::string, double>;

enum class SourceKind { analytic_series, finite_difference };

inline constexpr int analytic_order_cap = 12;
inline constexpr int finite_difference_order_cap = 8;

struct DerivativeSource {
    SourceKind kind = SourceKind::analytic_series;
    int max_order = analytic_order_cap;

    static DerivativeSource analytic(int cap = analytic_order_cap) { return {SourceKind::analytic_series, cap}; }
    static DerivativeSource finite_difference(int cap = finite_difference_order_cap)
    {
        return {SourceKind::finite_difference, cap};
    }
};

enum class Spacing { linear, log };

struct GridSpec {
    double lo = 1e-2;
    double hi = 100.0;
    int points = 64;
    Spacing spacing = Spacing::log;
    // Linear grids only: leave out lo itself and space `points` nodes over (lo, hi].
    bool lo_open = false;

    // lo < hi, points >= 2, log spacing needs lo > 0. UsageError otherwise.
    void validate() const;
    std::vector<double> nodes() const;

    static GridSpec linear(double lo, double hi, int points, bool lo_open = false)
    {
        return {lo, hi, points, Spacing::linear, lo_open};
    }
    static GridSpec logarithmic(double lo, double hi, int points) { return {lo, hi, points, Spacing::log, false}; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class ClaimKind {
    completely_monotonic,
    log_completely_monotonic,
    increasing,
    decreasing,
    nonneg,
    chain_lt,
    chain_le,
};

std::string_view to_string(ClaimKind k);
ClaimKind parse_claim(std::string_view s);

// A function of one variable registered for checking. `form` says whether
// the callables return f or ln f; LCM claims on a log-form target skip
// the log step. At least one of `jet` and `scalar` must be set.
struct Target {
    enum class Form { value, log };

    std::string name;
    Form form = Form::value;
    std::function<Jet(double x, int order)> jet;
    std::function<double(double x)> scalar;
    // Open lower end of the domain; finite-difference stencils stay inside it.
    double domain_lo = 0.0;
    double domain_hi = std::numeric_limits<double>::infinity();
    int analytic_cap = analytic_order_cap;

    bool has_jet() const { return static_cast<bool>(jet); }
    double value(double x) const;
};

// d^k/dx^k of the target as given (f or ln f, per its form).
// k above the source cap is a UsageError; x outside the domain is a
// DomainError; asking for analytic derivatives of a jet-less target is a
// UsageError.
Enclosure nth_derivative(const Target& target, int k, double x, DerivativeSource source = {});

// Derivatives 0..K of the target at x in one go.
std::vector<Enclosure> derivatives(const Target& target, int K, double x, DerivativeSource source);

// Richardson-extrapolated central differences of f, stencil kept in (lo, hi).
Enclosure finite_difference(const std::function<double(double)>& f, int k, double x, double lo,
                            double hi = std::numeric_limits<double>::infinity());

enum class Status { pass, fail, inconclusive };
std::string_view to_string(Status s);
Status parse_status(std::string_view s);

// Every check compares lhs <= rhs (or lhs < rhs) and records margin = rhs - lhs.
// The meaning of `order` depends on the claim:
//   sign patterns: derivative order k (lhs = 0, rhs = (-1)^k f^(k), or the
//     same for -(ln f)' in the LCM case);
//   chains: index i of the adjacent pair (expr_i, expr_{i+1});
//   monotonicity: 0 first difference, 1 derivative sign, 2 range lower end, 3 range upper end.
struct Violation {
    double point = 0.0;
    ParamMap params;
    int order = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    std::string claim_id;
    Status status = Status::pass;
    double worst_margin = 0.0;
    std::vector<Violation> violations;
    GridSpec grid;
    int orders_checked = 0;
    std::int64_t points_checked = 0;
    std::int64_t inconclusive_points = 0;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline constexpr double default_tolerance = 1e-12;

struct CheckOptions {
    std::string claim_id;
    ParamMap params;
    double tol = default_tolerance;
    int jobs = 1;
    // Strict claims need margin > 10 tau at the spot points. When
    // `spot_points` is empty three interior grid nodes are used.
    bool strict = false;
    std::vector<double> spot_points;
    std::optional<DerivativeSource> source;
};

// tol * max(1, |lhs|, |rhs|).
double tolerance_scale(double tol, double lhs, double rhs);

VerificationReport check_sign_pattern(const Target& target, int K, const GridSpec& grid, ClaimKind claim,
                                      const CheckOptions& options = {});

struct ParamPoint {
    double point = 0.0;
    ParamMap params;
};

using ChainExpr = std::function<Enclosure(const ParamPoint&)>;

// Adjacent ordering expr_0 <= expr_1 <= ... (chain_le) or with "<" (chain_lt,
// handled by the strictness protocol). For chain_lt the spot checks run at
// the points whose `point` values are listed in options.spot_points, or at
// three interior sample indices.
VerificationReport check_chain(const std::vector<ChainExpr>& exprs, ClaimKind claim,
                               const std::vector<ParamPoint>& points, const CheckOptions& options = {});

// True iff both sequences are nondecreasing, nonnegative, and every prefix
// sum of a is at most that of b. Unequal lengths: UsageError;
// unsorted input: PreconditionError.
bool check_majorization(const std::vector<double>& a, const std::vector<double>& b);

struct RangeClaim {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_strict = true;
    bool hi_strict = false;
};

// First differences over consecutive grid nodes, plus the sign of f' where
// the target has a jet, plus an optional range containment.
VerificationReport monotonicity_probe(const Target& target, const GridSpec& grid, ClaimKind claim,
                                      const CheckOptions& options = {},
                                      std::optional<RangeClaim> range = std::nullopt);

// Combines reports of one claim: violations merged and re-sorted, counters
// summed, status recomputed. The grid of the first report is kept.
VerificationReport merge_reports(std::string claim_id, const std::vector<VerificationReport>& parts);

// Runs job(i) for i in [0, n) on `workers` threads. Results must be written
// by index; the call returns after all jobs finish and rethrows the first
// exception in index order.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& job);

} // namespace qgk::cm
