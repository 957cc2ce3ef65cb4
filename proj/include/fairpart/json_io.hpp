#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fairpart/audit.hpp"
#include "fairpart/constructive.hpp"
#include "fairpart/exact.hpp"
#include "fairpart/generators.hpp"
#include "fairpart/partition.hpp"

namespace fairpart {

// Field order in every document is fixed; reruns with identical inputs must
// produce byte-identical output.
using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& partition);
Json alpha_partition_to_json(const AlphaPartition& partition);
Json audit_report_to_json(const AuditReport& report);
Json solve_result_to_json(const SolveResult& result);

/// Metadata comment line emitted ahead of generated instances: "# meta: {...}".
std::string gen_meta_line(const GenResult& result);
/// Full instance file: meta line plus the run-token payload.
std::string gen_instance_file(const GenResult& result);

/// Accepts either the JSON document {"n": ..., "boundaries": [...]} or the
/// plain text boundary list "0 10 20 ... n".
Partition parse_partition_file(std::string_view text);

} // namespace fairpart
