#include "qgk/cm_engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <tuple>

#include "qgk/errors.hpp"
#include "series.hpp"

namespace qgk::cm {

namespace {

constexpr std::array<std::pair<ClaimKind, std::string_view>, 7> claim_names{{
    {ClaimKind::completely_monotonic, "completely_monotonic"},
    {ClaimKind::log_completely_monotonic, "log_completely_monotonic"},
    {ClaimKind::increasing, "increasing"},
    {ClaimKind::decreasing, "decreasing"},
    {ClaimKind::nonneg, "nonneg"},
    {ClaimKind::chain_lt, "chain_lt"},
    {ClaimKind::chain_le, "chain_le"},
}};

struct Comparison {
    double lhs = 0.0;
    double rhs = 0.0;
    double err = 0.0;
    int order = 0;
    bool strict = false;
};

struct ProbeResult {
    double point = 0.0;
    const ParamMap* params = nullptr;
    bool spot = false;
    bool failed = false;
    std::vector<Comparison> comparisons;
};

bool violation_less(const Violation& a, const Violation& b)
{
    return std::tie(a.point, a.order, a.params, a.lhs, a.rhs) <
           std::tie(b.point, b.order, b.params, b.lhs, b.rhs);
}

void finalize(VerificationReport& r)
{
    std::sort(r.violations.begin(), r.violations.end(), violation_less);
    if (!r.violations.empty()) {
        r.status = Status::fail;
    } else if (r.inconclusive_points > 0) {
        r.status = Status::inconclusive;
    } else {
        r.status = Status::pass;
    }
}

// Classifies every comparison of every probe. A probe counts once towards
// inconclusive_points however many of its comparisons were undecided.
VerificationReport classify(const std::vector<ProbeResult>& probes, const CheckOptions& opt,
                            const GridSpec& grid, int orders)
{
    VerificationReport r;
    r.claim_id = opt.claim_id;
    r.grid = grid;
    r.orders_checked = orders;
    bool have_margin = false;
    double worst = 0.0;
    for (const auto& p : probes) {
        ++r.points_checked;
        bool undecided = p.failed;
        for (const auto& c : p.comparisons) {
            const double margin = c.rhs - c.lhs;
            const double tau = tolerance_scale(opt.tol, c.lhs, c.rhs);
            if (!std::isfinite(margin) || !std::isfinite(c.err) || c.err > std::abs(margin) + tau) {
                undecided = true;
                continue;
            }
            if (!have_margin || margin < worst) {
                worst = margin;
                have_margin = true;
            }
            if (margin < -tau) {
                r.violations.push_back({p.point, p.params ? *p.params : ParamMap{}, c.order, c.lhs, c.rhs, margin});
            } else if (c.strict && p.spot && !(margin > 10.0 * tau)) {
                undecided = true;
            }
        }
        if (undecided) {
            ++r.inconclusive_points;
        }
    }
    r.worst_margin = have_margin ? worst : 0.0;
    finalize(r);
    return r;
}

template <class Fn>
void guarded(ProbeResult& out, Fn&& fn)
{
    try {
        fn();
    } catch (const UsageError&) {
        throw;
    } catch (const PreconditionError&) {
        throw;
    } catch (const std::exception&) {
        out.failed = true;
        out.comparisons.clear();
    }
}

std::vector<std::size_t> default_spot_indices(std::size_t n)
{
    if (n < 3) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) {
            all[i] = i;
        }
        return all;
    }
    return {n / 4, n / 2, (3 * n) / 4};
}

std::function<double(double)> value_form(const Target& t)
{
    if (t.form == Target::Form::value) {
        return [&t](double x) { return t.value(x); };
    }
    return [&t](double x) { return std::exp(t.value(x)); };
}

std::function<double(double)> log_form(const Target& t)
{
    if (t.form == Target::Form::log) {
        return [&t](double x) { return t.value(x); };
    }
    return [&t](double x) {
        const double v = t.value(x);
        if (!(v > 0.0)) {
            throw DomainError("target value not positive, logarithm undefined");
        }
        return std::log(v);
    };
}

DerivativeSource pick_source(const Target& t, const CheckOptions& opt)
{
    if (opt.source) {
        return *opt.source;
    }
    return t.has_jet() ? DerivativeSource::analytic(t.analytic_cap) : DerivativeSource::finite_difference();
}

void require_order(const Target& t, int k, DerivativeSource src)
{
    if (k < 0) {
        throw UsageError("derivative order must be nonnegative");
    }
    const int cap = src.kind == SourceKind::analytic_series ? std::min(src.max_order, t.analytic_cap)
                                                            : std::min(src.max_order, finite_difference_order_cap);
    if (k > cap) {
        throw UsageError("derivative order " + std::to_string(k) + " exceeds the cap " + std::to_string(cap) +
                         " for target " + t.name);
    }
    if (src.kind == SourceKind::analytic_series && !t.has_jet()) {
        throw UsageError("target " + t.name + " has no analytic derivatives");
    }
    if (src.kind == SourceKind::finite_difference && !t.scalar && !t.has_jet()) {
        throw UsageError("target " + t.name + " has nothing to evaluate");
    }
}

void require_domain(const Target& t, double x)
{
    if (!(x > t.domain_lo && x < t.domain_hi)) {
        throw DomainError("point " + std::to_string(x) + " outside the domain of " + t.name);
    }
}

// (-1)^k f^(k), k = 0..K, for CM; (-1)^(k+1) (ln f)^(k+1), k = 0..K-1, for LCM.
std::vector<Enclosure> pattern_values(const Target& t, bool lcm, int K, double x, DerivativeSource src)
{
    std::vector<Enclosure> out;
    const int first = lcm ? 1 : 0;
    const int last = K;
    if (src.kind == SourceKind::analytic_series) {
        Jet j = t.jet(x, last);
        if (lcm && t.form == Target::Form::value) {
            j = log(j);
        } else if (!lcm && t.form == Target::Form::log) {
            j = exp(j);
        }
        for (int k = first; k <= last; ++k) {
            // in both cases the sign is (-1)^k on the k-th derivative
            Enclosure e = j.derivative_at(k);
            if (k % 2 == 1) {
                e.value = -e.value;
            }
            out.push_back(e);
        }
        return out;
    }
    const auto g = lcm ? log_form(t) : value_form(t);
    for (int k = first; k <= last; ++k) {
        Enclosure e = finite_difference(g, k, x, t.domain_lo, t.domain_hi);
        if (k % 2 == 1) {
            e.value = -e.value;
        }
        out.push_back(e);
    }
    return out;
}

} // namespace

void GridSpec::validate() const
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw UsageError("grid: need finite lo < hi");
    }
    if (points < 2) {
        throw UsageError("grid: need at least 2 points");
    }
    if (spacing == Spacing::log && !(lo > 0.0)) {
        throw UsageError("grid: log spacing needs lo > 0");
    }
}

std::vector<double> GridSpec::nodes() const
{
    validate();
    std::vector<double> x(points);
    if (spacing == Spacing::log) {
        const double a = std::log(lo);
        const double b = std::log(hi);
        for (int i = 0; i < points; ++i) {
            x[i] = std::exp(a + (b - a) * i / (points - 1));
        }
        x.front() = lo;
    } else if (lo_open) {
        for (int i = 0; i < points; ++i) {
            x[i] = lo + (hi - lo) * (i + 1) / points;
        }
    } else {
        for (int i = 0; i < points; ++i) {
            x[i] = lo + (hi - lo) * i / (points - 1);
        }
        x.front() = lo;
    }
    x.back() = hi;
    return x;
}

std::string_view to_string(ClaimKind k)
{
    for (const auto& [c, s] : claim_names) {
        if (c == k) {
            return s;
        }
    }
    return "unknown";
}

ClaimKind parse_claim(std::string_view s)
{
    for (const auto& [c, n] : claim_names) {
        if (n == s) {
            return c;
        }
    }
    throw UsageError("unknown claim kind '" + std::string(s) + "'");
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

Status parse_status(std::string_view s)
{
    if (s == "pass") {
        return Status::pass;
    }
    if (s == "fail") {
        return Status::fail;
    }
    if (s == "inconclusive") {
        return Status::inconclusive;
    }
    throw UsageError("unknown status '" + std::string(s) + "'");
}

double Target::value(double x) const
{
    if (scalar) {
        return scalar(x);
    }
    if (jet) {
        return jet(x, 0).coeff(0);
    }
    throw UsageError("target " + name + " has nothing to evaluate");
}

double tolerance_scale(double tol, double lhs, double rhs)
{
    return tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Enclosure nth_derivative(const Target& target, int k, double x, DerivativeSource source)
{
    require_order(target, k, source);
    require_domain(target, x);
    if (source.kind == SourceKind::analytic_series) {
        return target.jet(x, k).derivative_at(k);
    }
    auto f = [&target](double y) { return target.value(y); };
    return finite_difference(f, k, x, target.domain_lo, target.domain_hi);
}

std::vector<Enclosure> derivatives(const Target& target, int K, double x, DerivativeSource source)
{
    require_order(target, K, source);
    require_domain(target, x);
    std::vector<Enclosure> out;
    if (source.kind == SourceKind::analytic_series) {
        const Jet j = target.jet(x, K);
        for (int k = 0; k <= K; ++k) {
            out.push_back(j.derivative_at(k));
        }
        return out;
    }
    auto f = [&target](double y) { return target.value(y); };
    for (int k = 0; k <= K; ++k) {
        out.push_back(finite_difference(f, k, x, target.domain_lo, target.domain_hi));
    }
    return out;
}

VerificationReport check_sign_pattern(const Target& target, int K, const GridSpec& grid, ClaimKind claim,
                                      const CheckOptions& options)
{
    if (claim == ClaimKind::nonneg) {
        K = 0;
    } else if (claim != ClaimKind::completely_monotonic && claim != ClaimKind::log_completely_monotonic) {
        throw UsageError("check_sign_pattern: claim must be CM, LCM or nonneg");
    }
    const bool lcm = claim == ClaimKind::log_completely_monotonic;
    if (lcm && K < 1) {
        throw UsageError("check_sign_pattern: LCM needs K >= 1");
    }
    if (K < 0) {
        throw UsageError("check_sign_pattern: negative K");
    }
    const DerivativeSource src = pick_source(target, options);
    require_order(target, K, src);

    std::vector<double> xs = grid.nodes();
    std::vector<bool> spot(xs.size(), false);
    if (options.spot_points.empty()) {
        for (auto i : default_spot_indices(xs.size())) {
            spot[i] = true;
        }
    } else {
        for (double s : options.spot_points) {
            xs.push_back(s);
            spot.push_back(true);
        }
    }

    std::vector<ProbeResult> probes(xs.size());
    parallel_for(xs.size(), options.jobs, [&](std::size_t i) {
        ProbeResult& p = probes[i];
        p.point = xs[i];
        p.params = &options.params;
        p.spot = spot[i];
        guarded(p, [&] {
            require_domain(target, xs[i]);
            const auto vals = pattern_values(target, lcm, K, xs[i], src);
            for (std::size_t k = 0; k < vals.size(); ++k) {
                p.comparisons.push_back({0.0, vals[k].value, vals[k].abs_error, static_cast<int>(k), options.strict});
            }
        });
    });
    return classify(probes, options, grid, lcm ? K : K + 1);
}

namespace {

// Chain points arrive as a flat list crossed with parameters; recover the x grid
// they came from so the report describes it faithfully.
GridSpec infer_grid(const std::vector<ParamPoint>& points)
{
    std::vector<double> xs;
    xs.reserve(points.size());
    for (const auto& p : points) {
        xs.push_back(p.point);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    GridSpec g{xs.front(), xs.back(), static_cast<int>(xs.size()), Spacing::linear, false};
    if (xs.size() < 3 || xs.front() <= 0.0) {
        return g;
    }
    auto uniform = [&](auto step) {
        const double h = step(xs[0], xs[1]);
        for (std::size_t i = 2; i < xs.size(); ++i) {
            if (std::abs(step(xs[i - 1], xs[i]) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
                return false;
            }
        }
        return true;
    };
    if (!uniform([](double a, double b) { return b - a; }) &&
        uniform([](double a, double b) { return std::log(b / a); })) {
        g.spacing = Spacing::log;
    }
    return g;
}

} // namespace

VerificationReport check_chain(const std::vector<ChainExpr>& exprs, ClaimKind claim,
                               const std::vector<ParamPoint>& points, const CheckOptions& options)
{
    if (exprs.size() < 2) {
        throw UsageError("check_chain: need at least two expressions");
    }
    if (claim != ClaimKind::chain_lt && claim != ClaimKind::chain_le) {
        throw UsageError("check_chain: claim must be chain_lt or chain_le");
    }
    const bool strict = claim == ClaimKind::chain_lt || options.strict;
    std::vector<bool> spot(points.size(), false);
    if (options.spot_points.empty()) {
        for (auto i : default_spot_indices(points.size())) {
            spot[i] = true;
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
            spot[i] = std::find(options.spot_points.begin(), options.spot_points.end(), points[i].point) !=
                      options.spot_points.end();
        }
    }

    std::vector<ProbeResult> probes(points.size());
    parallel_for(points.size(), options.jobs, [&](std::size_t i) {
        ProbeResult& p = probes[i];
        p.point = points[i].point;
        p.params = &points[i].params;
        p.spot = spot[i];
        guarded(p, [&] {
            std::vector<Enclosure> v;
            v.reserve(exprs.size());
            for (const auto& e : exprs) {
                v.push_back(e(points[i]));
            }
            for (std::size_t k = 0; k + 1 < v.size(); ++k) {
                p.comparisons.push_back(
                    {v[k].value, v[k + 1].value, v[k].abs_error + v[k + 1].abs_error, static_cast<int>(k), strict});
            }
        });
    });
    GridSpec g;
    if (!points.empty()) {
        g = infer_grid(points);
    }
    return classify(probes, options, g, static_cast<int>(exprs.size()) - 1);
}

bool check_majorization(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) {
        throw UsageError("check_majorization: sequences differ in length");
    }
    auto sorted = [](const std::vector<double>& v) { return std::is_sorted(v.begin(), v.end()); };
    if (!sorted(a) || !sorted(b)) {
        throw PreconditionError("check_majorization: sequences must be nondecreasing");
    }
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0.0 || b[i] < 0.0) {
            return false;
        }
        sa += a[i];
        sb += b[i];
        if (sa > sb) {
            return false;
        }
    }
    return true;
}

VerificationReport monotonicity_probe(const Target& target, const GridSpec& grid, ClaimKind claim,
                                      const CheckOptions& options, std::optional<RangeClaim> range)
{
    if (claim != ClaimKind::increasing && claim != ClaimKind::decreasing) {
        throw UsageError("monotonicity_probe: claim must be increasing or decreasing");
    }
    const bool inc = claim == ClaimKind::increasing;
    const std::vector<double> xs = grid.nodes();
    const std::size_t n = xs.size();
    const bool use_jet = target.has_jet() &&
                         (!options.source || options.source->kind == SourceKind::analytic_series);

    struct NodeValue {
        Enclosure f;
        std::optional<Enclosure> df;
        bool failed = false;
    };
    std::vector<NodeValue> nodes(n);
    parallel_for(n, options.jobs, [&](std::size_t i) {
        try {
            require_domain(target, xs[i]);
            if (use_jet) {
                Jet j = target.jet(xs[i], 1);
                if (target.form == Target::Form::log) {
                    j = exp(j);
                }
                nodes[i].f = j.derivative_at(0);
                nodes[i].df = j.derivative_at(1);
            } else {
                const double v = value_form(target)(xs[i]);
                nodes[i].f = {v, 4 * detail::mach_eps * std::abs(v), 1, false};
            }
        } catch (const UsageError&) {
            throw;
        } catch (const PreconditionError&) {
            throw;
        } catch (const std::exception&) {
            nodes[i].failed = true;
        }
    });

    const auto spots = default_spot_indices(n);
    std::vector<ProbeResult> probes(n);
    for (std::size_t i = 0; i < n; ++i) {
        ProbeResult& p = probes[i];
        p.point = xs[i];
        p.params = &options.params;
        p.spot = std::find(spots.begin(), spots.end(), i) != spots.end();
        if (nodes[i].failed || (i + 1 < n && nodes[i + 1].failed)) {
            p.failed = true;
            continue;
        }
        const Enclosure& f = nodes[i].f;
        if (i + 1 < n) {
            const Enclosure& g = nodes[i + 1].f;
            const double err = f.abs_error + g.abs_error;
            if (inc) {
                p.comparisons.push_back({f.value, g.value, err, 0, options.strict});
            } else {
                p.comparisons.push_back({g.value, f.value, err, 0, options.strict});
            }
        }
        if (nodes[i].df) {
            const Enclosure& d = *nodes[i].df;
            if (inc) {
                p.comparisons.push_back({0.0, d.value, d.abs_error, 1, false});
            } else {
                p.comparisons.push_back({d.value, 0.0, d.abs_error, 1, false});
            }
        }
        if (range) {
            p.comparisons.push_back({range->lo, f.value, f.abs_error, 2, range->lo_strict});
            p.comparisons.push_back({f.value, range->hi, f.abs_error, 3, range->hi_strict});
        }
    }
    return classify(probes, options, grid, nodes.empty() || !nodes.front().df ? 1 : 2);
}

VerificationReport merge_reports(std::string claim_id, const std::vector<VerificationReport>& parts)
{
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    bool first = true;
    for (const auto& p : parts) {
        if (first) {
            r.grid = p.grid;
            r.worst_margin = p.worst_margin;
            first = false;
        } else {
            r.worst_margin = std::min(r.worst_margin, p.worst_margin);
        }
        r.orders_checked = std::max(r.orders_checked, p.orders_checked);
        r.points_checked += p.points_checked;
        r.inconclusive_points += p.inconclusive_points;
        r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
    }
    finalize(r);
    return r;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& job)
{
    std::vector<std::exception_ptr> errors(n);
    auto run = [&](std::size_t i) {
        try {
            job(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const std::size_t w = workers < 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            run(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(w);
        for (std::size_t t = 0; t < w; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    run(i);
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace qgk::cm
