#ifndef UNICOB_REPORT_HPP
#define UNICOB_REPORT_HPP

// JSON reports. Keys come out sorted (nlohmann::json objects are ordered
// maps) and every exact number is a decimal string.

#include "unicob/dsl.hpp"
#include "unicob/kernels.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace unicob {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const ExactScalar& v);
Json to_json(const mpz_class& v);
Json to_json(const GeneratorReport& r);
Json to_json(const LemmaRecord& r);
Json to_json(const TableRow& r);
Json to_json(const dsl::CommandResult& r);

// Top-level object {schema_version, command, inputs, results, timing_ms};
// timing_ms is null when no timing is given.
Json make_report(const std::string& command, Json inputs, Json results, std::optional<long long> timing_ms);

// Every "pass" field found anywhere in the report is true.
bool all_pass(const Json& report);

std::string dump_report(const Json& report);

// Tab-separated a-table with header i, j, a_closed, a_engine (empty when the
// engine was not run for that entry).
std::string table_tsv(const std::vector<TableRow>& rows);

}  // namespace unicob

#endif  // UNICOB_REPORT_HPP
