#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "pbland/certificates.hpp"
#include "pbland/graphwidth.hpp"
#include "pbland/oracle.hpp"
#include "pbland/search.hpp"
#include "pbland/vcsp.hpp"

namespace pbland {

using json = nlohmann::ordered_json;

json instance_to_json(const VcspInstance& instance);
/// Throws ParseError on malformed input, InvalidVariable on bad scopes.
VcspInstance instance_from_json(const json& j);

json decomposition_to_json(const PathDecomposition& pd);
PathDecomposition decomposition_from_json(const json& j);
json minor_to_json(const MinorCertificate& cert);
MinorCertificate minor_from_json(const json& j);

json report_to_json(const DecompositionReport& r);
json report_to_json(const MinorReport& r);
json report_to_json(const AscentGraphReport& r);
json report_to_json(const PeakTableReport& r);
json report_to_json(const DeltaTableReport& r);

/// Header line then one line per step.
void write_trace_jsonl(std::ostream& out, const VcspInstance& instance, const AscentTrace& trace);
json trace_summary(const AscentTrace& trace);

/// Primal graph with the summed weight of every scope inducing an edge; unary weights on vertices.
void write_dot(std::ostream& out, const VcspInstance& instance);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pbland
