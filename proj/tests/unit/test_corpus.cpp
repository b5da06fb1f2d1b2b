#include <cmath>
#include <set>
#include <variant>

#include "doctest.h"
#include "qgk/corpus.hpp"
#include "qgk/errors.hpp"

using namespace qgk;
using namespace qgk::corpus;

namespace {

// Applies the descriptor's default value lists to every parameter it declares.
bool defaults_inside(const PropertyDescriptor& d)
{
    for (const auto& [name, vals] : d.defaults) {
        const auto it = d.domains.find(name);
        if (it == d.domains.end()) {
            return false;
        }
        for (double v : vals) {
            if (!it->second.contains(v)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_SUITE("corpus")
{
    TEST_CASE("registry size and coverage")
    {
        const auto& all = list_properties();
        CHECK(all.size() >= 30);
        std::set<std::string> ids;
        std::set<std::string> groups;
        for (const auto& d : all) {
            CHECK(ids.insert(d.id).second);
            groups.insert(d.group);
            CHECK_FALSE(d.reference.empty());
            CHECK(static_cast<bool>(d.build));
        }
        CHECK(groups.size() == 27);
        CHECK(ids.count("thm8-lcm") == 1);
        CHECK(ids.count("eq42-nonneg") == 1);
        CHECK(ids.count("ball-thm51") == 1);
        CHECK(ids.count("cor4-lcm") == 1);
        CHECK(ids.count("cor4-orig-cm") == 1);
    }

    TEST_CASE("registry is in group order")
    {
        const auto& all = list_properties();
        for (std::size_t i = 1; i < all.size(); ++i) {
            CHECK(all[i - 1].group <= all[i].group);
        }
    }

    TEST_CASE("default grids and values lie inside their domains")
    {
        for (const auto& d : list_properties()) {
            CAPTURE(d.id);
            CHECK(defaults_inside(d));
            const auto dom = d.domains.find(d.grid_variable);
            REQUIRE(dom != d.domains.end());
            for (double x : d.default_grid.nodes()) {
                CAPTURE(x);
                CHECK(dom->second.contains(x));
            }
        }
    }

    TEST_CASE("every default instance builds")
    {
        for (const auto& d : list_properties()) {
            CAPTURE(d.id);
            const auto inst = instantiate(d.id);
            CHECK(inst.id == d.id);
            CHECK(inst.claim == d.claim);
            CHECK(inst.expected == d.expected);
            CHECK_FALSE(inst.cases.empty());
        }
    }

    TEST_CASE("instantiate validates overrides")
    {
        CHECK_THROWS_AS(instantiate("thm8-lcm", {{"q", {2.0}}}), DomainError);
        CHECK_THROWS_AS(instantiate("thm8-lcm", {{"nonsense", {1.0}}}), UsageError);
        CHECK_THROWS_AS(instantiate("thm8-lcm", {{"q", {}}}), UsageError);
        CHECK_THROWS_AS(instantiate("no-such-id"), UsageError);
        CHECK_THROWS_AS(find_property("no-such-id"), UsageError);
        CHECK_THROWS_AS(instantiate("thm8-lcm", {}, {.grid_points = 1}), UsageError);
        CHECK_THROWS_AS(instantiate("thm8-lcm", {}, {.max_order = -1}), UsageError);
    }

    TEST_CASE("ball-thm51 makes one chain per dimension")
    {
        const auto inst = instantiate("ball-thm51", {{"n_max", {10}}});
        CHECK(inst.cases.size() == 10);
        for (const auto& c : inst.cases) {
            CHECK(std::holds_alternative<ChainCase>(c));
        }
        CHECK(instantiate("ball-thm51").cases.size() == 200);
    }

    TEST_CASE("eq42-nonneg is the chain 0 <= psi'^2 + psi''")
    {
        const auto& d = find_property("eq42-nonneg");
        CHECK(d.claim == ClaimKind::chain_le);
        const auto inst = instantiate("eq42-nonneg");
        REQUIRE(inst.cases.size() == 1);
        const auto* c = std::get_if<ChainCase>(&inst.cases.front());
        REQUIRE(c != nullptr);
        CHECK(c->exprs.size() == 2);
        CHECK(c->claim == ClaimKind::chain_le);
        CHECK(c->exprs[0]({1.0, {}}).value == 0.0);
        // psi'(1)^2 + psi''(1) = pi^4/36 - 2 zeta(3)
        CHECK(c->exprs[1]({1.0, {}}).value == doctest::Approx(2.7058080842778454 - 2.4041138063191885));
    }

    TEST_CASE("eq14 runs over the 9 x 9 x 30 grid")
    {
        const auto r = run(instantiate("eq14-bounds"));
        CHECK(r.points_checked == 9 * 9 * 30);
        CHECK(r.status == Status::pass);
    }

    TEST_CASE("expected-violation entries")
    {
        std::set<std::string> expect_violation;
        for (const auto& d : list_properties()) {
            if (d.expected == Expectation::violation) {
                expect_violation.insert(d.id);
            }
        }
        CHECK(expect_violation ==
              std::set<std::string>{"eq14-sharp-u", "eq14-sharp-v", "falpha-onlyif", "gc-onlyif", "lem-thm11-onlyif"});
        CHECK(as_expected(Status::fail, Expectation::violation));
        CHECK_FALSE(as_expected(Status::pass, Expectation::violation));
        CHECK_FALSE(as_expected(Status::inconclusive, Expectation::violation));
        CHECK(as_expected(Status::pass, Expectation::pass));
    }

    TEST_CASE("selected entries hold")
    {
        for (const char* id : {"eq42-nonneg", "thm4-cm", "ci-kernel", "lem5-root"}) {
            CAPTURE(id);
            CHECK(run(instantiate(id)).status == Status::pass);
        }
        CHECK(run(instantiate("thm8-lcm", {}, {.max_order = 6})).status == Status::pass);
        CHECK(run(instantiate("gc-onlyif")).status == Status::fail);
    }

    TEST_CASE("suite options reach the cases")
    {
        const auto r = run(instantiate("thm8-lcm", {{"q", {0.5}}}, {.grid_points = 10, .max_order = 3}));
        CHECK(r.orders_checked == 3);
        CHECK(r.grid.points == 10);
    }

    TEST_CASE("parameter domains")
    {
        ParamDomain d{0.0, 1.0, false, true, false};
        CHECK_FALSE(d.contains(0.0));
        CHECK(d.contains(1.0));
        CHECK_FALSE(d.contains(std::nan("")));
        ParamDomain n{1.0, 10.0, true, true, true};
        CHECK(n.contains(3.0));
        CHECK_FALSE(n.contains(3.5));
    }

    TEST_CASE("manifest lines")
    {
        const auto line = manifest_line(find_property("eq42-nonneg"));
        CHECK(line.rfind("eq42-nonneg | ", 0) == 0);
        CHECK(describe(GridSpec{}) == "log [0.01, 100] x64");
    }
}
