#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "partgen/demand_split.hpp"
#include "partgen/greedy.hpp"
#include "partgen/oracle.hpp"
#include "partgen/partition.hpp"

// Structured (JSON) forms of the library types. Every *_from_json re-checks
// the invariants of the type it builds and throws InputError on bad input.
namespace partgen::io {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const GenerationPlan& plan);
GenerationPlan plan_from_json(const json& j);

json to_json(const GreedyTrace& trace);

json to_json(const VerificationReport& report);
VerificationReport report_from_json(const json& j);

// Native instance file: {"k": 3, "customers": [{"id": "A", "demand": 9, "attrs": {}}]}
// plus an optional "depot": {"id": ..., "attrs": {...}}.
json to_json(const InstanceSpec& instance);
InstanceSpec instance_from_json(const json& j);

// Expanded file: the native fields plus
// "copies": [{"copy_id": "A#1", "parent_id": "A", "demand": 3, "attrs": {}}].
json to_json(const ExpandedInstance& expanded);
ExpandedInstance expanded_from_json(const json& j);

// [{"copy_id": "A#1", "fulfiller": "f1", "amount": 3}, ...]
json to_json(const CopyAssignment& assignment);
CopyAssignment assignment_from_json(const json& j);

// {"k": 3, "assignments": [{"customer": "A", "fulfiller": "f1", "amount": 5}, ...]}
json to_json(const SplitAssignment& split, Part k);
SplitAssignment split_from_json(const json& j);

/// Two-space indented dump with a trailing newline; stable across runs.
std::string dump(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/*
 * Reads a TSPLIB/CVRPLIB style CVRP file: DIMENSION, NODE_COORD_SECTION
 * (stored as attrs {"x", "y"}), DEMAND_SECTION and optional DEPOT_SECTION.
 * CAPACITY and descriptive keys are ignored. The depot (DEPOT_SECTION entry,
 * or node 1 when its demand is 0) becomes InstanceSpec::depot. The fleet size
 * comes from `k` or, failing that, a VEHICLES entry.
 */
InstanceSpec read_tsplib(std::istream& in, std::optional<Part> k);
InstanceSpec read_tsplib_file(const std::string& path, std::optional<Part> k);

} // namespace partgen::io
