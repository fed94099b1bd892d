#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fibocube/harness.hpp"
#include "fibocube/oracle.hpp"
#include "fibocube/periodicity.hpp"
#include "fibocube/structural.hpp"

namespace fibocube::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const structural::CriticalWitness& w);
structural::CriticalWitness witness_from_json(const Json& j);

Json to_json(const structural::Classification& c, const Pattern& f);
std::string to_text(const structural::Classification& c);

Json to_json(const harness::TheoremReport& r);
harness::TheoremReport report_from_json(const Json& j);
std::string to_text(const std::vector<harness::TheoremReport>& reports);

Json to_json(const harness::CensusRow& row);
harness::CensusRow census_from_json(const Json& j);
std::string census_csv_header();
std::string to_csv(const harness::CensusRow& row);
std::string to_text(const harness::CensusRow& row);

/// Vertices as 0/1 words; each edge listed once, smaller endpoint first.
std::string graph_dot(const oracle::AvoidanceGraph& G);
Json graph_json(const oracle::AvoidanceGraph& G);

Json overlap_graph_json(const periodicity::OverlapGraph& G);

}  // namespace fibocube::serialize
