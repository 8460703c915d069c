#pragma once

#include <json.hpp>

#include "conesparse/instance.hpp"
#include "conesparse/order.hpp"
#include "conesparse/packcover.hpp"
#include "conesparse/verify.hpp"

namespace conesparse {

using Json = nlohmann::json;

/// Cone spec: {"type":"orthant","n":10} | {"type":"psd","d":4} |
/// {"type":"soc","n":3} | {"type":"spectral_epigraph","n":6,"k":2,
/// "barrier":"hyperbolic"|"k_plus_1"} | {"type":"product","parts":[...]}.
ConeHandle cone_from_json(const Json& j);
Json cone_to_json(const Cone& cone);

/// Instance document: {"cone":{...},"elements":[[...],...],"epsilon":0.3,
/// "target":[...]}; target defaults to the element sum. An epsilon given by
/// the caller (CLI --eps) overrides the document's.
SparsificationInstance instance_from_json(const Json& j, std::optional<double> eps_override = {});
Json instance_to_json(const SparsificationInstance& inst);

Json certificate_to_json(const SandwichCertificate& cert);
Json result_to_json(const SparsifierResult& result, const SandwichCertificate& cert);
SparsifierResult result_from_json(const Json& j);

Json law_report_to_json(const LawReport& report);

/// Pack/cover document: {"cone":{"type":"orthant","n":d},"a":[[...],...],
/// "b":[...],"c":[...]}.
PackCoverInstance packcover_from_json(const Json& j);

Json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// One trace row per line (JSON lines); NaN fields are omitted.
void write_trace_jsonl(const std::string& path, const std::vector<TraceRow>& trace);

} // namespace conesparse
