#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgk/cm_engine.hpp"
#include "qgk/corpus.hpp"

namespace qgk::report {

struct Entry {
    cm::VerificationReport report;
    corpus::Expectation expected = corpus::Expectation::pass;

    friend bool operator==(const Entry&, const Entry&) = default;
};

struct Summary {
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t inconclusive = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct ReportDocument {
    std::string suite;
    std::string config;
    std::vector<Entry> entries;
    Summary summary;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// Tallies entry statuses into the summary.
ReportDocument make_document(std::string suite, std::string config, std::vector<Entry> entries);

// Entries whose status differs from what their descriptor expects.
std::int64_t unexpected_outcomes(const ReportDocument& doc);

// 64-bit FNV-1a of the text, as "fnv1a64:" plus 16 hex digits.
std::string config_digest(std::string_view canonical_config);

// 17 significant digits, lowercase e-notation; "inf", "-inf", "nan" otherwise.
std::string format_double(double v);

// Canonical JSON: keys sorted, two-space indentation, fixed float format.
std::string to_json(const ReportDocument& doc);
// Throws UsageError on malformed input.
ReportDocument from_json(std::string_view text);

// One row per violation plus one summary row per entry.
std::string to_csv(const ReportDocument& doc);

} // namespace qgk::report
