#include "qgk/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qgk/errors.hpp"

namespace qgk::report {

namespace {

using nlohmann::json;

std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

std::string num(double v)
{
    const std::string s = format_double(v);
    return std::isfinite(v) ? s : quote(s);
}

class Writer {
public:
    void open(char c)
    {
        out_ << c;
        ++depth_;
        first_ = true;
    }
    void close(char c)
    {
        --depth_;
        if (!first_) {
            newline();
        }
        out_ << c;
        first_ = false;
    }
    void key(std::string_view k)
    {
        item();
        out_ << quote(k) << ": ";
    }
    void item()
    {
        if (!first_) {
            out_ << ',';
        }
        newline();
        first_ = false;
    }
    // Scalars written right after key() or item().
    Writer& raw(const std::string& s)
    {
        out_ << s;
        first_ = false;
        return *this;
    }
    std::string str() const { return out_.str() + "\n"; }

private:
    void newline()
    {
        out_ << '\n';
        for (int i = 0; i < depth_; ++i) {
            out_ << "  ";
        }
    }

    std::ostringstream out_;
    int depth_ = 0;
    bool first_ = true;
};

void write_params(Writer& w, const cm::ParamMap& params)
{
    w.open('{');
    for (const auto& [k, v] : params) {
        w.key(k);
        w.raw(num(v));
    }
    w.close('}');
}

void write_entry(Writer& w, const Entry& e)
{
    const auto& r = e.report;
    w.open('{');
    w.key("claim_id");
    w.raw(quote(r.claim_id));
    w.key("expected");
    w.raw(quote(corpus::to_string(e.expected)));
    w.key("grid");
    w.open('{');
    w.key("hi");
    w.raw(num(r.grid.hi));
    w.key("lo");
    w.raw(num(r.grid.lo));
    w.key("lo_open");
    w.raw(r.grid.lo_open ? "true" : "false");
    w.key("points");
    w.raw(std::to_string(r.grid.points));
    w.key("spacing");
    w.raw(quote(r.grid.spacing == cm::Spacing::log ? "log" : "linear"));
    w.close('}');
    w.key("inconclusive_points");
    w.raw(std::to_string(r.inconclusive_points));
    w.key("orders_checked");
    w.raw(std::to_string(r.orders_checked));
    w.key("points_checked");
    w.raw(std::to_string(r.points_checked));
    w.key("status");
    w.raw(quote(cm::to_string(r.status)));
    w.key("violations");
    w.open('[');
    for (const auto& v : r.violations) {
        w.item();
        w.open('{');
        w.key("lhs");
        w.raw(num(v.lhs));
        w.key("margin");
        w.raw(num(v.margin));
        w.key("order");
        w.raw(std::to_string(v.order));
        w.key("params");
        write_params(w, v.params);
        w.key("point");
        w.raw(num(v.point));
        w.key("rhs");
        w.raw(num(v.rhs));
        w.close('}');
    }
    w.close(']');
    w.key("worst_margin");
    w.raw(num(r.worst_margin));
    w.close('}');
}

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw UsageError(std::string("report: missing field '") + name + "'");
    }
    return j.at(name);
}

double get_double(const json& j)
{
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    throw UsageError("report: expected a number");
}

std::int64_t get_int(const json& j)
{
    if (!j.is_number_integer()) {
        throw UsageError("report: expected an integer");
    }
    return j.get<std::int64_t>();
}

std::string get_string(const json& j)
{
    if (!j.is_string()) {
        throw UsageError("report: expected a string");
    }
    return j.get<std::string>();
}

Entry read_entry(const json& j)
{
    Entry e;
    auto& r = e.report;
    r.claim_id = get_string(field(j, "claim_id"));
    const auto expected = get_string(field(j, "expected"));
    if (expected == "pass") {
        e.expected = corpus::Expectation::pass;
    } else if (expected == "violation") {
        e.expected = corpus::Expectation::violation;
    } else {
        throw UsageError("report: bad expected value '" + expected + "'");
    }
    const auto& g = field(j, "grid");
    r.grid.hi = get_double(field(g, "hi"));
    r.grid.lo = get_double(field(g, "lo"));
    if (!field(g, "lo_open").is_boolean()) {
        throw UsageError("report: lo_open must be boolean");
    }
    r.grid.lo_open = field(g, "lo_open").get<bool>();
    r.grid.points = static_cast<int>(get_int(field(g, "points")));
    const auto spacing = get_string(field(g, "spacing"));
    if (spacing != "log" && spacing != "linear") {
        throw UsageError("report: bad spacing '" + spacing + "'");
    }
    r.grid.spacing = spacing == "log" ? cm::Spacing::log : cm::Spacing::linear;
    r.inconclusive_points = get_int(field(j, "inconclusive_points"));
    r.orders_checked = static_cast<int>(get_int(field(j, "orders_checked")));
    r.points_checked = get_int(field(j, "points_checked"));
    try {
        r.status = cm::parse_status(get_string(field(j, "status")));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& ex) {
        throw UsageError(std::string("report: ") + ex.what());
    }
    const auto& vs = field(j, "violations");
    if (!vs.is_array()) {
        throw UsageError("report: violations must be an array");
    }
    for (const auto& v : vs) {
        cm::Violation out;
        out.lhs = get_double(field(v, "lhs"));
        out.margin = get_double(field(v, "margin"));
        out.order = static_cast<int>(get_int(field(v, "order")));
        const auto& ps = field(v, "params");
        if (!ps.is_object()) {
            throw UsageError("report: params must be an object");
        }
        for (const auto& [k, pv] : ps.items()) {
            out.params[k] = get_double(pv);
        }
        out.point = get_double(field(v, "point"));
        out.rhs = get_double(field(v, "rhs"));
        r.violations.push_back(std::move(out));
    }
    r.worst_margin = get_double(field(j, "worst_margin"));
    return e;
}

// Quotes a field holding a comma, quote or newline, doubling inner quotes.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string csv_params(const cm::ParamMap& params)
{
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) {
            out += ';';
        }
        out += csv_field(k) + "=" + format_double(v);
    }
    return out;
}

} // namespace

ReportDocument make_document(std::string suite, std::string config, std::vector<Entry> entries)
{
    ReportDocument doc;
    doc.suite = std::move(suite);
    doc.config = std::move(config);
    doc.entries = std::move(entries);
    for (const auto& e : doc.entries) {
        switch (e.report.status) {
        case cm::Status::pass:
            ++doc.summary.pass;
            break;
        case cm::Status::fail:
            ++doc.summary.fail;
            break;
        case cm::Status::inconclusive:
            ++doc.summary.inconclusive;
            break;
        }
    }
    return doc;
}

std::int64_t unexpected_outcomes(const ReportDocument& doc)
{
    std::int64_t n = 0;
    for (const auto& e : doc.entries) {
        if (!corpus::as_expected(e.report.status, e.expected)) {
            ++n;
        }
    }
    return n;
}

std::string config_digest(std::string_view canonical_config)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical_config) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        v = 0.0; // drop the sign of negative zero
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string to_json(const ReportDocument& doc)
{
    Writer w;
    w.open('{');
    w.key("config");
    w.raw(quote(doc.config));
    w.key("entries");
    w.open('[');
    for (const auto& e : doc.entries) {
        w.item();
        write_entry(w, e);
    }
    w.close(']');
    w.key("suite");
    w.raw(quote(doc.suite));
    w.key("summary");
    w.open('{');
    w.key("fail");
    w.raw(std::to_string(doc.summary.fail));
    w.key("inconclusive");
    w.raw(std::to_string(doc.summary.inconclusive));
    w.key("pass");
    w.raw(std::to_string(doc.summary.pass));
    w.close('}');
    w.close('}');
    return w.str();
}

ReportDocument from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& ex) {
        throw UsageError(std::string("report: ") + ex.what());
    }
    ReportDocument doc;
    doc.config = get_string(field(j, "config"));
    doc.suite = get_string(field(j, "suite"));
    const auto& es = field(j, "entries");
    if (!es.is_array()) {
        throw UsageError("report: entries must be an array");
    }
    for (const auto& e : es) {
        doc.entries.push_back(read_entry(e));
    }
    const auto& s = field(j, "summary");
    doc.summary.fail = get_int(field(s, "fail"));
    doc.summary.inconclusive = get_int(field(s, "inconclusive"));
    doc.summary.pass = get_int(field(s, "pass"));
    return doc;
}

std::string to_csv(const ReportDocument& doc)
{
    std::ostringstream os;
    os << "row,claim_id,status,expected,point,order,lhs,rhs,margin,params\n";
    for (const auto& e : doc.entries) {
        const auto& r = e.report;
        const auto status = cm::to_string(r.status);
        const auto expected = corpus::to_string(e.expected);
        for (const auto& v : r.violations) {
            os << "violation," << csv_field(r.claim_id) << ',' << status << ',' << expected << ',' << format_double(v.point)
               << ',' << v.order << ',' << format_double(v.lhs) << ',' << format_double(v.rhs) << ','
               << format_double(v.margin) << ',' << csv_params(v.params) << '\n';
        }
        os << "summary," << csv_field(r.claim_id) << ',' << status << ',' << expected << ",,," << ",," << format_double(r.worst_margin)
           << ",points=" << r.points_checked << ";orders=" << r.orders_checked
           << ";inconclusive=" << r.inconclusive_points << ";violations=" << r.violations.size() << '\n';
    }
    return os.str();
}

} // namespace qgk::report
