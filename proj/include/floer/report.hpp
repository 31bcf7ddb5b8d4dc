#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "floer/betti.hpp"
#include "floer/munoz.hpp"

namespace floer {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

// Decimal string with thousands separators, e.g. 165868 -> "165,868".
std::string format_thousands(const Int& value);

// Exact integers become plain JSON numbers while they fit 53 bits and
// decimal strings beyond that.
Json json_int(const Int& value);

Json json_betti(const std::array<Int, 4>& b);

// Envelope skeleton {version, command, config, results, summary}.
Json make_envelope(const std::string& command, Json config);

Json genus_report_json(const GenusReport& report);

// The published two-row table layout: one column per genus, rows for the
// paired graded betti numbers in epsilon-shifted labels plus the total.
std::string render_table_text(const std::string& which, const std::vector<GenusReport>& reports);
std::string render_table_csv(const std::string& which, const std::vector<GenusReport>& reports);

std::string render_nilpotency_text(const std::vector<GenusReport>& reports);

Json check_results_json(const std::vector<CheckResult>& results);

// Strips volatile timing fields, for byte-stable comparisons.
Json strip_timings(Json value);

}  // namespace floer
