#pragma once

// Shared helpers for the registry translation units.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qgk/corpus.hpp"
#include "qgk/errors.hpp"
#include "qgk/jet.hpp"
#include "series.hpp"

namespace qgk::corpus::detail {

using cm::ChainExpr;
using cm::Jet;
using cm::ParamPoint;
using cm::ln_gamma_jet;
using cm::psi_jet;
using cm::log_jet;
using cm::power_jet;
using cm::log_q_bracket_jet;
using cm::exp_linear_jet;

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline ParamDomain open_interval(double lo, double hi) { return {lo, hi, false, false, false}; }
inline ParamDomain closed_interval(double lo, double hi) { return {lo, hi, true, true, false}; }
inline ParamDomain half_open(double lo, double hi) { return {lo, hi, false, true, false}; } // (lo, hi]
inline ParamDomain positive() { return open_interval(0.0, inf); }
inline ParamDomain nonnegative() { return {0.0, inf, true, false, false}; }
inline ParamDomain integers(double lo, double hi) { return {lo, hi, true, true, true}; }

inline GridSpec with_points(GridSpec g, const BuildOptions& o)
{
    if (o.grid_points) {
        g.points = *o.grid_points;
    }
    return g;
}

inline int order_or(int def, const BuildOptions& o) { return o.max_order ? *o.max_order : def; }

inline const std::vector<double>& values(const ParamValues& v, const std::string& name)
{
    auto it = v.find(name);
    if (it == v.end() || it->second.empty()) {
        throw UsageError("missing parameter '" + name + "'");
    }
    return it->second;
}

inline std::vector<int> int_values(const ParamValues& v, const std::string& name)
{
    std::vector<int> out;
    for (double d : values(v, name)) {
        out.push_back(static_cast<int>(std::lround(d)));
    }
    return out;
}

// lo, lo + step, ..., hi (inclusive, rounded to the step).
inline std::vector<double> steps(double lo, double hi, double step)
{
    std::vector<double> out;
    const int n = static_cast<int>(std::lround((hi - lo) / step));
    for (int i = 0; i <= n; ++i) {
        out.push_back(std::round((lo + i * step) * 1e12) / 1e12);
    }
    return out;
}

inline std::vector<double> int_range(int lo, int hi)
{
    std::vector<double> out;
    for (int i = lo; i <= hi; ++i) {
        out.push_back(i);
    }
    return out;
}

// Closed-form values carry a small rounding allowance.
inline Enclosure exact(double v) { return {v, 16 * qgk::detail::mach_eps * std::abs(v), 1, false}; }

inline ChainExpr constant(double v)
{
    return [v](const ParamPoint&) { return exact(v); };
}

inline double param(const ParamPoint& p, const char* name) { return p.params.at(name); }

// Every x node of grid g paired with each parameter map.
inline std::vector<ParamPoint> cross(const GridSpec& g, const std::vector<ParamMap>& params)
{
    std::vector<ParamPoint> out;
    const auto xs = g.nodes();
    for (const auto& pm : params) {
        for (double x : xs) {
            out.push_back({x, pm});
        }
    }
    return out;
}

// All combinations of the named value lists.
inline std::vector<ParamMap> combos(const std::vector<std::pair<std::string, std::vector<double>>>& lists)
{
    std::vector<ParamMap> out{ParamMap{}};
    for (const auto& [name, vals] : lists) {
        std::vector<ParamMap> next;
        for (const auto& pm : out) {
            for (double v : vals) {
                ParamMap m = pm;
                m[name] = v;
                next.push_back(std::move(m));
            }
        }
        out = std::move(next);
    }
    return out;
}

inline Target make_target(std::string name, std::function<Jet(double, int)> jet, double domain_lo,
                          Target::Form form = Target::Form::value)
{
    Target t;
    t.name = std::move(name);
    t.form = form;
    t.jet = std::move(jet);
    t.domain_lo = domain_lo;
    return t;
}

inline GridSpec default_log_grid() { return GridSpec::logarithmic(1e-2, 100.0, 64); }

// Log grid over (lo + 1e-2, lo + 100] for domains (lo, inf).
inline GridSpec shifted_log_grid(double lo, int points = 64)
{
    return GridSpec::logarithmic(lo + 1e-2, lo + 100.0, points);
}

inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline PropertyDescriptor descriptor(std::string id, std::string group, ClaimKind claim, std::string reference,
                                     std::string notes = {})
{
    PropertyDescriptor d;
    d.id = std::move(id);
    d.group = std::move(group);
    d.claim = claim;
    d.reference = std::move(reference);
    d.notes = std::move(notes);
    d.default_grid = default_log_grid();
    return d;
}

inline std::string label(const std::string& base, const ParamMap& params)
{
    std::string out = base;
    for (const auto& [k, v] : params) {
        out += " " + k + "=" + fmt(v);
    }
    return out;
}

inline SignPatternCase sign_case(Target t, int order, GridSpec grid, ClaimKind claim, ParamMap params,
                                 bool strict = false, std::vector<double> spots = {})
{
    return {std::move(t), order, std::move(grid), claim, std::move(params), strict, std::move(spots)};
}

// sum_i w_i ln Gamma_q(x + s_i) as a jet.
inline Jet ln_gamma_sum(double x, double q, int order, const std::vector<std::pair<double, double>>& terms)
{
    Jet out = Jet::constant(0.0, order);
    for (const auto& [w, shift] : terms) {
        out += ln_gamma_jet(x + shift, q, order) * w;
    }
    return out;
}

inline std::vector<ParamMap> all_combos(const ParamValues& v)
{
    std::vector<std::pair<std::string, std::vector<double>>> lists(v.begin(), v.end());
    return combos(lists);
}

using TargetMaker = std::function<Target(const ParamMap&)>;
using GridMaker = std::function<GridSpec(const ParamMap&)>;

struct FamilySpec {
    ClaimKind claim = ClaimKind::completely_monotonic;
    int order = 8;
    bool strict = false;
    std::vector<double> spots;
    GridMaker grid; // default: log grid over [1e-2, 100]
};

inline FamilySpec family_spec(ClaimKind claim, int order = 8, bool strict = false, std::vector<double> spots = {},
                              GridMaker grid = {})
{
    return {claim, order, strict, std::move(spots), std::move(grid)};
}

// One sign-pattern case per combination of the parameter lists.
inline std::function<Instance(const ParamValues&, const BuildOptions&)> family_builder(TargetMaker mk, FamilySpec spec)
{
    return [mk = std::move(mk), spec = std::move(spec)](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (const auto& pm : all_combos(v)) {
            const GridSpec g = spec.grid ? spec.grid(pm) : default_log_grid();
            inst.cases.push_back(sign_case(mk(pm), order_or(spec.order, o), with_points(g, o), spec.claim, pm,
                                           spec.strict, spec.spots));
        }
        return inst;
    };
}

} // namespace qgk::corpus::detail
