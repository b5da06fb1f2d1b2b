#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgk/cm_engine.hpp"

namespace qgk::corpus {

using cm::ClaimKind;
using cm::GridSpec;
using cm::ParamMap;
using cm::Status;
using cm::Target;
using cm::VerificationReport;

// Descriptors expecting `violation` are the deliberate counterexample
// checks; they succeed when the engine records at least one violation.
enum class Expectation { pass, violation };
std::string_view to_string(Expectation e);

struct ParamDomain {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;
    bool integer = false;

    bool contains(double v) const;
    std::string describe() const;
};

using ParamValues = std::map<std::string, std::vector<double>>;

struct SignPatternCase {
    Target target;
    int order = 8;
    GridSpec grid;
    ClaimKind claim = ClaimKind::completely_monotonic;
    ParamMap params;
    bool strict = false;
    std::vector<double> spot_points;
};

struct ChainCase {
    std::vector<cm::ChainExpr> exprs;
    ClaimKind claim = ClaimKind::chain_le;
    std::vector<cm::ParamPoint> points;
    std::vector<double> spot_points;
};

struct MonotoneCase {
    Target target;
    GridSpec grid;
    ClaimKind claim = ClaimKind::increasing;
    ParamMap params;
    std::optional<cm::RangeClaim> range;
    bool strict = false;
};

struct MajorizationCase {
    std::vector<double> a;
    std::vector<double> b;
};

using Case = std::variant<SignPatternCase, ChainCase, MonotoneCase, MajorizationCase>;

struct Instance {
    std::string id;
    ClaimKind claim = ClaimKind::completely_monotonic;
    Expectation expected = Expectation::pass;
    std::vector<Case> cases;
};

// Suite-wide knobs applied while building cases.
struct BuildOptions {
    std::optional<int> grid_points;
    std::optional<int> max_order;
};

struct PropertyDescriptor {
    std::string id;
    std::string group; // "g01".."g27"
    ClaimKind claim = ClaimKind::completely_monotonic;
    Expectation expected = Expectation::pass;
    std::string reference;
    std::string notes;
    std::map<std::string, ParamDomain> domains;
    ParamValues defaults;
    GridSpec default_grid;
    // Domain entry the default grid samples: "x" for the argument itself,
    // "x_offset" where the grid is laid out above a parameter-dependent
    // lower end, or a parameter name for tables indexed by it.
    std::string grid_variable = "x";
    int default_order = 0; // 0 where no derivative order applies
    bool strict = false;
    std::function<Instance(const ParamValues&, const BuildOptions&)> build;
};

// The registry, in group order. Built once; immutable afterwards.
const std::vector<PropertyDescriptor>& list_properties();
// UsageError for unknown ids.
const PropertyDescriptor& find_property(std::string_view id);

// Overrides replace a parameter's default value list. Unknown ids and
// unknown parameter names are UsageErrors; values outside the parameter
// domain are DomainErrors.
Instance instantiate(std::string_view id, const ParamValues& overrides = {}, const BuildOptions& options = {});

struct RunOptions {
    double tol = cm::default_tolerance;
    int jobs = 1;
};

VerificationReport run(const Instance& instance, const RunOptions& options = {});

bool as_expected(Status status, Expectation expected);

// "id | group | claim | expected | reference | domain ... | grid ..."
std::string manifest_line(const PropertyDescriptor& d);
std::string describe(const GridSpec& g);

// Registry construction, split by theme.
void register_ratio_entries(std::vector<PropertyDescriptor>& out);
void register_application_entries(std::vector<PropertyDescriptor>& out);
void register_polygamma_entries(std::vector<PropertyDescriptor>& out);

} // namespace qgk::corpus
