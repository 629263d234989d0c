#include "sumcq/json_io.hpp"

namespace sumcq {

Json complex_matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix complex_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw UsageError("matrix JSON must be a nonempty array");
    const auto rows = j.size();
    const auto cols = j[0].size();
    CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw UsageError("matrix JSON rows have inconsistent lengths");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& cell = j[i][c];
            if (!cell.is_array() || cell.size() != 2) {
                throw UsageError("matrix entries must be [re, im] pairs");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                Cplx(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

Json density_to_json(const DensityOperator& rho) { return complex_matrix_to_json(rho.matrix()); }

DensityOperator density_from_json(const Json& j, const Tolerances& tol) {
    return DensityOperator(complex_matrix_from_json(j), tol);
}

namespace {

void require_schema(const Json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != kSchemaVersion) {
        throw UsageError("document missing or unsupported \"schema\" version");
    }
}

std::vector<DensityOperator> states_from_json(const Json& j, const Tolerances& tol) {
    std::vector<DensityOperator> out;
    for (const auto& s : j) out.push_back(density_from_json(s, tol));
    return out;
}

}  // namespace

CqPtp ptp_from_json(const Json& j, const Tolerances& tol) {
    require_schema(j);
    if (j.value("type", "") != "cq_ptp") throw UsageError("expected channel type \"cq_ptp\"");
    return CqPtp(states_from_json(j.at("states"), tol));
}

Json ptp_to_json(const CqPtp& ptp) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "cq_ptp";
    Json states = Json::array();
    for (const auto& s : ptp.states()) states.push_back(density_to_json(s));
    j["states"] = std::move(states);
    return j;
}

CqMac mac_from_json(const Json& j, const Tolerances& tol) {
    require_schema(j);
    const std::string type = j.value("type", "");
    if (type == "example1") {
        return example1_channel(j.at("q_noise").get<double>(),
                                density_from_json(j.at("sigma0"), tol),
                                density_from_json(j.at("sigma1"), tol));
    }
    if (type != "cq_mac") throw UsageError("expected channel type \"cq_mac\" or \"example1\"");
    const auto x1 = j.at("x1_size").get<std::size_t>();
    const auto x2 = j.at("x2_size").get<std::size_t>();
    return CqMac(x1, x2, states_from_json(j.at("states"), tol));
}

Json mac_to_json(const CqMac& mac) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "cq_mac";
    j["x1_size"] = mac.x1_size();
    j["x2_size"] = mac.x2_size();
    Json states = Json::array();
    for (std::size_t a = 0; a < mac.x1_size(); ++a) {
        for (std::size_t b = 0; b < mac.x2_size(); ++b) {
            states.push_back(density_to_json(mac.state(a, b)));
        }
    }
    j["states"] = std::move(states);
    return j;
}

SourcePair source_from_json(const Json& j, const Tolerances& tol) {
    require_schema(j);
    return SourcePair(j.at("s1_size").get<std::size_t>(), j.at("s2_size").get<std::size_t>(),
                      j.at("joint").get<std::vector<double>>(), tol);
}

Json source_to_json(const SourcePair& source) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["s1_size"] = source.s1_size;
    j["s2_size"] = source.s2_size;
    j["joint"] = source.joint;
    return j;
}

Json rate_report_to_json(const RateReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["h_v1"] = r.h_v1;
    j["h_v2"] = r.h_v2;
    j["h_u"] = r.h_u;
    j["chi_u"] = r.chi_u;
    j["rate"] = r.rate;
    j["p_v1x1"] = r.p_v1x1;
    j["p_v2x2"] = r.p_v2x2;
    j["grid_resolution"] = r.grid_resolution;
    j["refined"] = r.refined;
    return j;
}

Json sim_result_to_json(const SimResult& r, bool include_timing) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["error"] = r.error;
    j["std_error"] = r.std_error;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

Json example1_report_to_json(const Example1Report& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["p"] = r.p;
    j["q_noise"] = r.q_noise;
    j["overlap"] = r.overlap;
    j["lhs_structured_closed"] = r.lhs_structured_closed;
    j["lhs_structured_direct"] = r.lhs_structured_direct;
    j["rhs_structured"] = r.rhs_structured;
    j["theta_star"] = r.theta_star;
    j["lhs_unstructured"] = r.lhs_unstructured;
    j["rhs_unstructured"] = r.rhs_unstructured;
    j["structured_ok"] = r.structured_ok;
    j["unstructured_ok"] = r.unstructured_ok;
    return j;
}

Json pinching_result_to_json(const PinchingResult& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["min_trace"] = r.min_trace;
    j["argmin_a"] = r.argmin_a;
    j["argmin_b"] = r.argmin_b;
    j["pairs_checked"] = r.pairs_checked;
    return j;
}

Json coverage_result_to_json(const CoverageResult& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["estimate"] = r.estimate;
    j["std_error"] = r.std_error;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    return j;
}

}  // namespace sumcq
