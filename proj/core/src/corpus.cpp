#include "qgk/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "corpus_util.hpp"
#include "qgk/errors.hpp"

namespace qgk::corpus {

std::string_view to_string(Expectation e) { return e == Expectation::pass ? "pass" : "violation"; }

bool ParamDomain::contains(double v) const
{
    if (!std::isfinite(v)) {
        return false;
    }
    if (lo_closed ? v < lo : v <= lo) {
        return false;
    }
    if (hi_closed ? v > hi : v >= hi) {
        return false;
    }
    return !integer || v == std::round(v);
}

std::string ParamDomain::describe() const
{
    std::ostringstream os;
    os << (lo_closed ? '[' : '(') << detail::fmt(lo) << ", " << detail::fmt(hi) << (hi_closed ? ']' : ')');
    if (integer) {
        os << " integer";
    }
    return os.str();
}

std::string describe(const GridSpec& g)
{
    std::ostringstream os;
    os << (g.spacing == cm::Spacing::log ? "log" : "linear") << ' ';
    os << (g.lo_open ? '(' : '[') << detail::fmt(g.lo) << ", " << detail::fmt(g.hi) << "] x" << g.points;
    return os.str();
}

namespace {

std::vector<PropertyDescriptor> build_registry()
{
    std::vector<PropertyDescriptor> out;
    register_ratio_entries(out);
    register_application_entries(out);
    register_polygamma_entries(out);
    std::stable_sort(out.begin(), out.end(),
                     [](const PropertyDescriptor& a, const PropertyDescriptor& b) { return a.group < b.group; });
    std::set<std::string> seen;
    for (const auto& d : out) {
        if (!seen.insert(d.id).second) {
            throw PreconditionError("duplicate descriptor id " + d.id);
        }
    }
    return out;
}

cm::CheckOptions check_options(const Instance& inst, const RunOptions& o, const cm::ParamMap& params)
{
    cm::CheckOptions c;
    c.claim_id = inst.id;
    c.params = params;
    c.tol = o.tol;
    c.jobs = o.jobs;
    return c;
}

VerificationReport run_case(const Instance& inst, const Case& cs, const RunOptions& o)
{
    if (const auto* sp = std::get_if<SignPatternCase>(&cs)) {
        auto c = check_options(inst, o, sp->params);
        c.strict = sp->strict;
        c.spot_points = sp->spot_points;
        return cm::check_sign_pattern(sp->target, sp->order, sp->grid, sp->claim, c);
    }
    if (const auto* ch = std::get_if<ChainCase>(&cs)) {
        auto c = check_options(inst, o, {});
        c.spot_points = ch->spot_points;
        return cm::check_chain(ch->exprs, ch->claim, ch->points, c);
    }
    if (const auto* mo = std::get_if<MonotoneCase>(&cs)) {
        auto c = check_options(inst, o, mo->params);
        c.strict = mo->strict;
        return cm::monotonicity_probe(mo->target, mo->grid, mo->claim, c, mo->range);
    }
    const auto& mj = std::get<MajorizationCase>(cs);
    VerificationReport r;
    r.claim_id = inst.id;
    r.grid = GridSpec::linear(0.0, 1.0, 2);
    r.orders_checked = 0;
    r.points_checked = static_cast<std::int64_t>(mj.a.size());
    if (!cm::check_majorization(mj.a, mj.b)) {
        double sa = 0.0;
        double sb = 0.0;
        for (std::size_t i = 0; i < mj.a.size(); ++i) {
            sa += mj.a[i];
            sb += mj.b[i];
        }
        r.violations.push_back({0.0, {}, 0, sa, sb, sb - sa});
        r.status = Status::fail;
        r.worst_margin = sb - sa;
    }
    return r;
}

} // namespace

const std::vector<PropertyDescriptor>& list_properties()
{
    static const std::vector<PropertyDescriptor> registry = build_registry();
    return registry;
}

const PropertyDescriptor& find_property(std::string_view id)
{
    for (const auto& d : list_properties()) {
        if (d.id == id) {
            return d;
        }
    }
    throw UsageError("unknown property id '" + std::string(id) + "'");
}

Instance instantiate(std::string_view id, const ParamValues& overrides, const BuildOptions& options)
{
    const auto& d = find_property(id);
    ParamValues values = d.defaults;
    for (const auto& [name, vals] : overrides) {
        if (!d.defaults.count(name)) {
            throw UsageError("property '" + d.id + "' has no parameter '" + name + "'");
        }
        if (vals.empty()) {
            throw UsageError("empty value list for parameter '" + name + "'");
        }
        if (auto it = d.domains.find(name); it != d.domains.end()) {
            for (double v : vals) {
                if (!it->second.contains(v)) {
                    throw DomainError("parameter '" + name + "' = " + detail::fmt(v) + " outside " +
                                      it->second.describe() + " for '" + d.id + "'");
                }
            }
        }
        values[name] = vals;
    }
    if (options.grid_points && *options.grid_points < 2) {
        throw UsageError("grid points must be at least 2");
    }
    if (options.max_order && *options.max_order < 0) {
        throw UsageError("max order must be nonnegative");
    }
    Instance inst = d.build(values, options);
    inst.id = d.id;
    inst.claim = d.claim;
    inst.expected = d.expected;
    if (inst.cases.empty()) {
        throw UsageError("parameters leave '" + d.id + "' with nothing to check");
    }
    return inst;
}

VerificationReport run(const Instance& instance, const RunOptions& options)
{
    std::vector<VerificationReport> parts;
    parts.reserve(instance.cases.size());
    for (const auto& c : instance.cases) {
        parts.push_back(run_case(instance, c, options));
    }
    return cm::merge_reports(instance.id, parts);
}

bool as_expected(Status status, Expectation expected)
{
    return expected == Expectation::pass ? status == Status::pass : status == Status::fail;
}

std::string manifest_line(const PropertyDescriptor& d)
{
    std::ostringstream os;
    os << d.id << " | " << d.group << " | " << cm::to_string(d.claim) << " | " << to_string(d.expected) << " | "
       << d.reference << " | ";
    bool first = true;
    for (const auto& [name, dom] : d.domains) {
        os << (first ? "" : "; ") << name << " in " << dom.describe();
        first = false;
    }
    os << " | " << d.grid_variable << ": " << describe(d.default_grid);
    return os.str();
}

} // namespace qgk::corpus
