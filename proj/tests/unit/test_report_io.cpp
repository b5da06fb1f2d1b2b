#include <cmath>
#include <limits>

#include "doctest.h"
#include "qgk/corpus.hpp"
#include "qgk/errors.hpp"
#include "qgk/report_io.hpp"

using namespace qgk;
using namespace qgk::report;

namespace {

ReportDocument sample()
{
    cm::VerificationReport a;
    a.claim_id = "a";
    a.status = cm::Status::fail;
    a.worst_margin = -0.125;
    a.grid = cm::GridSpec::linear(0.0, 0.5, 50, true);
    a.orders_checked = 2;
    a.points_checked = 50;
    a.violations.push_back({0.1, {{"q", 0.5}, {"s", 1.0 / 3.0}}, 1, 1.0000000000000002, 0.1, -0.9000000000000002});
    a.violations.push_back({0.2, {}, 0, -0.0, std::numeric_limits<double>::infinity(), 5e-324});
    cm::VerificationReport b;
    b.claim_id = "b \"quoted\"";
    b.worst_margin = std::numeric_limits<double>::quiet_NaN();
    b.inconclusive_points = 3;
    b.status = cm::Status::inconclusive;
    return make_document("all", config_digest("x"), {{a, corpus::Expectation::violation}, {b, corpus::Expectation::pass}});
}

} // namespace

TEST_SUITE("report_io")
{
    TEST_CASE("summary tallies the statuses")
    {
        const auto doc = sample();
        CHECK(doc.summary.fail == 1);
        CHECK(doc.summary.inconclusive == 1);
        CHECK(doc.summary.pass == 0);
        CHECK(unexpected_outcomes(doc) == 1);
    }

    TEST_CASE("float formatting")
    {
        CHECK(format_double(0.1) == "1.0000000000000001e-01");
        CHECK(format_double(-0.0) == "0.0000000000000000e+00");
        CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
        CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
        CHECK(format_double(std::nan("")) == "nan");
    }

    TEST_CASE("json round trip")
    {
        const auto doc = sample();
        const auto text = to_json(doc);
        const auto back = from_json(text);
        // NaN never compares equal, so compare the re-serialisation instead
        CHECK(to_json(back) == text);
        CHECK(back.entries.size() == 2);
        CHECK(back.entries[0].report.violations == doc.entries[0].report.violations);
        CHECK(back.entries[0].report.grid == doc.entries[0].report.grid);
        CHECK(back.entries[1].report.claim_id == "b \"quoted\"");
        CHECK(back.summary == doc.summary);
    }

    TEST_CASE("json keys are sorted")
    {
        const auto text = to_json(sample());
        CHECK(text.find("\"config\"") < text.find("\"entries\""));
        CHECK(text.find("\"entries\"") < text.find("\"suite\""));
        CHECK(text.find("\"claim_id\"") < text.find("\"expected\""));
        CHECK(text.find("\"status\"") < text.find("\"violations\""));
        CHECK(text.find("\"lhs\"") < text.find("\"margin\""));
    }

    TEST_CASE("round trip of a real report without NaN")
    {
        const auto inst = corpus::instantiate("eq14-sharp-u");
        const auto doc = make_document("eq14-sharp-u", config_digest("c"), {{corpus::run(inst), inst.expected}});
        CHECK(from_json(to_json(doc)) == doc);
    }

    TEST_CASE("malformed input is a usage error")
    {
        CHECK_THROWS_AS(from_json("{"), UsageError);
        CHECK_THROWS_AS(from_json("{}"), UsageError);
        CHECK_THROWS_AS(from_json("[]"), UsageError);
    }

    TEST_CASE("csv has per-violation and per-entry rows")
    {
        const auto csv = to_csv(sample());
        CHECK(csv.rfind("row,claim_id,status,expected,point,order,lhs,rhs,margin,params\n", 0) == 0);
        std::size_t lines = 0;
        for (char c : csv) {
            lines += c == '\n';
        }
        CHECK(lines == 1 + 2 + 2);
        CHECK(csv.find("violation,a,fail,violation,1.0000000000000001e-01,1,") != std::string::npos);
        CHECK(csv.find("q=5.0000000000000000e-01;s=3.3333333333333331e-01") != std::string::npos);
        CHECK(csv.find("summary,\"b \"\"quoted\"\"\",inconclusive,pass,") != std::string::npos);
    }

    TEST_CASE("config digest")
    {
        CHECK(config_digest("") == "fnv1a64:cbf29ce484222325");
        CHECK(config_digest("a") != config_digest("b"));
    }
}
