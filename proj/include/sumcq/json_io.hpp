#pragma once

#include <json.hpp>

#include "sumcq/channels.hpp"
#include "sumcq/rates.hpp"
#include "sumcq/sim.hpp"

namespace sumcq {

using Json = nlohmann::ordered_json;

// Complex matrices are nested arrays of [re, im] pairs; every document carries
// a top-level "schema" version field.
inline constexpr int kSchemaVersion = 1;

Json complex_matrix_to_json(const CMatrix& m);
CMatrix complex_matrix_from_json(const Json& j);

Json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const Json& j, const Tolerances& tol = {});

// Channel documents: {"schema": 1, "type": "cq_ptp" | "cq_mac" | "example1", ...}.
// "example1" expands to the noisy-OR table from q_noise and two states.
CqPtp ptp_from_json(const Json& j, const Tolerances& tol = {});
Json ptp_to_json(const CqPtp& ptp);
CqMac mac_from_json(const Json& j, const Tolerances& tol = {});
Json mac_to_json(const CqMac& mac);

SourcePair source_from_json(const Json& j, const Tolerances& tol = {});
Json source_to_json(const SourcePair& source);

Json rate_report_to_json(const RateReport& r);
Json sim_result_to_json(const SimResult& r, bool include_timing = true);
Json example1_report_to_json(const Example1Report& r);
Json pinching_result_to_json(const PinchingResult& r);
Json coverage_result_to_json(const CoverageResult& r);

}  // namespace sumcq
