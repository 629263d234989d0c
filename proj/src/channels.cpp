#include "sumcq/channels.hpp"

#include <cmath>
#include <numeric>

#include "sumcq/field.hpp"

namespace sumcq {

namespace {

void require_common_dim(const std::vector<DensityOperator>& states, const char* what) {
    if (states.empty()) throw UsageError(std::string(what) + ": no states");
    const Eigen::Index d = states.front().dim();
    for (const auto& s : states) {
        if (s.dim() != d) throw UsageError(std::string(what) + ": mixed dimensions");
    }
}

void require_pmf(const std::vector<double>& pmf, double tol, const char* what) {
    double total = 0.0;
    for (double v : pmf) {
        if (v < -tol) throw UsageError(std::string(what) + ": negative probability");
        total += v;
    }
    if (std::abs(total - 1.0) > tol) {
        throw UsageError(std::string(what) + ": pmf sums to " + std::to_string(total));
    }
}

}  // namespace

CqPtp::CqPtp(std::vector<DensityOperator> states) : states_(std::move(states)) {
    require_common_dim(states_, "CqPtp");
}

const DensityOperator& CqPtp::state(std::size_t x) const {
    if (x >= states_.size()) throw UsageError("CqPtp: input out of range");
    return states_[x];
}

CqMac::CqMac(std::size_t x1_size, std::size_t x2_size, std::vector<DensityOperator> states)
    : x1_size_(x1_size), x2_size_(x2_size), states_(std::move(states)) {
    if (x1_size_ == 0 || x2_size_ == 0) throw UsageError("CqMac: empty input alphabet");
    if (states_.size() != x1_size_ * x2_size_) {
        throw UsageError("CqMac: state table size does not match alphabets");
    }
    require_common_dim(states_, "CqMac");
}

const DensityOperator& CqMac::state(std::size_t x1, std::size_t x2) const {
    if (x1 >= x1_size_ || x2 >= x2_size_) throw UsageError("CqMac: input out of range");
    return states_[x1 * x2_size_ + x2];
}

SourcePair::SourcePair(std::size_t n1, std::size_t n2, std::vector<double> pmf,
                       const Tolerances& tol)
    : s1_size(n1), s2_size(n2), joint(std::move(pmf)) {
    if (n1 == 0 || n2 == 0) throw UsageError("SourcePair: empty alphabet");
    if (joint.size() != n1 * n2) throw UsageError("SourcePair: pmf size mismatch");
    require_pmf(joint, tol.pmf, "SourcePair");
}

std::vector<double> SourcePair::marginal1() const {
    std::vector<double> out(s1_size, 0.0);
    for (std::size_t i = 0; i < s1_size; ++i) {
        for (std::size_t j = 0; j < s2_size; ++j) out[i] += prob(i, j);
    }
    return out;
}

std::vector<double> SourcePair::marginal2() const {
    std::vector<double> out(s2_size, 0.0);
    for (std::size_t i = 0; i < s1_size; ++i) {
        for (std::size_t j = 0; j < s2_size; ++j) out[j] += prob(i, j);
    }
    return out;
}

CqEnsemble InducedSumEnsemble::sum_ensemble(std::vector<std::uint32_t>* labels,
                                            const Tolerances& tol) const {
    std::vector<double> pmf;
    std::vector<DensityOperator> states;
    if (labels) labels->clear();
    for (std::uint32_t u = 0; u < q; ++u) {
        if (p_u[u] > 0.0) {
            pmf.push_back(p_u[u]);
            states.push_back(rho_u[u]);
            if (labels) labels->push_back(u);
        }
    }
    return CqEnsemble(std::move(pmf), std::move(states), tol);
}

InducedSumEnsemble induced_sum_ensemble(const CqMac& mac, std::uint32_t q,
                                        const std::vector<double>& p_v1x1,
                                        const std::vector<double>& p_v2x2,
                                        const Tolerances& tol) {
    if (!is_prime(q)) throw UsageError("induced_sum_ensemble: q must be prime");
    if (p_v1x1.size() != q * mac.x1_size() || p_v2x2.size() != q * mac.x2_size()) {
        throw UsageError("induced_sum_ensemble: joint pmf shape mismatch");
    }
    require_pmf(p_v1x1, tol.pmf, "p_v1x1");
    require_pmf(p_v2x2, tol.pmf, "p_v2x2");

    InducedSumEnsemble out;
    out.q = q;
    out.p_v1.assign(q, 0.0);
    out.p_v2.assign(q, 0.0);
    for (std::uint32_t v = 0; v < q; ++v) {
        for (std::size_t x = 0; x < mac.x1_size(); ++x) out.p_v1[v] += p_v1x1[v * mac.x1_size() + x];
        for (std::size_t x = 0; x < mac.x2_size(); ++x) out.p_v2[v] += p_v2x2[v * mac.x2_size() + x];
    }

    auto conditionals = [](const std::vector<double>& joint, const std::vector<double>& marg,
                           std::uint32_t q_, std::size_t xs) {
        std::vector<std::vector<double>> rows(q_);
        for (std::uint32_t v = 0; v < q_; ++v) {
            rows[v].resize(xs);
            if (marg[v] > 0.0) {
                for (std::size_t x = 0; x < xs; ++x) rows[v][x] = joint[v * xs + x] / marg[v];
            } else {
                // Unreachable conditioning value: any valid row works, use uniform.
                for (std::size_t x = 0; x < xs; ++x) rows[v][x] = 1.0 / static_cast<double>(xs);
            }
        }
        return rows;
    };
    out.p_x1_given_v1 = conditionals(p_v1x1, out.p_v1, q, mac.x1_size());
    out.p_x2_given_v2 = conditionals(p_v2x2, out.p_v2, q, mac.x2_size());

    const Eigen::Index d = mac.dim();
    out.rho_pair.reserve(static_cast<std::size_t>(q) * q);
    for (std::uint32_t v1 = 0; v1 < q; ++v1) {
        for (std::uint32_t v2 = 0; v2 < q; ++v2) {
            CMatrix m = CMatrix::Zero(d, d);
            for (std::size_t x1 = 0; x1 < mac.x1_size(); ++x1) {
                for (std::size_t x2 = 0; x2 < mac.x2_size(); ++x2) {
                    const double w = out.p_x1_given_v1[v1][x1] * out.p_x2_given_v2[v2][x2];
                    if (w > 0.0) m += w * mac.state(x1, x2).matrix();
                }
            }
            out.rho_pair.emplace_back(std::move(m), tol);
        }
    }

    out.p_u.assign(q, 0.0);
    std::vector<CMatrix> acc(q, CMatrix::Zero(d, d));
    for (std::uint32_t v1 = 0; v1 < q; ++v1) {
        for (std::uint32_t v2 = 0; v2 < q; ++v2) {
            const std::uint32_t u = (v1 + v2) % q;
            const double w = out.p_v1[v1] * out.p_v2[v2];
            out.p_u[u] += w;
            if (w > 0.0) acc[u] += w * out.rho_pair[v1 * q + v2].matrix();
        }
    }
    out.rho_u.reserve(q);
    for (std::uint32_t u = 0; u < q; ++u) {
        if (out.p_u[u] > 0.0) {
            out.rho_u.emplace_back(CMatrix(acc[u] / out.p_u[u]), tol);
        } else {
            out.rho_u.emplace_back(
                CMatrix(CMatrix::Identity(d, d) / static_cast<double>(d)), tol);
        }
    }
    return out;
}

std::optional<CqPtp> additive_reduction(const CqMac& mac, std::uint32_t q, double tau_eq) {
    if (!is_prime(q)) throw UsageError("additive_reduction: q must be prime");
    if (mac.x1_size() != q || mac.x2_size() != q) {
        throw UsageError("additive_reduction: both alphabets must be F_q");
    }
    for (std::uint32_t x1 = 0; x1 < q; ++x1) {
        for (std::uint32_t x2 = 0; x2 < q; ++x2) {
            const std::uint32_t u = (x1 + x2) % q;
            // Compare against the representative pair (u, 0).
            if (trace_distance(mac.state(x1, x2).matrix(), mac.state(u, 0).matrix()) > tau_eq) {
                return std::nullopt;
            }
        }
    }
    std::vector<DensityOperator> sigma;
    sigma.reserve(q);
    for (std::uint32_t u = 0; u < q; ++u) sigma.push_back(mac.state(u, 0));
    return CqPtp(std::move(sigma));
}

CqMac example1_channel(double q_noise, const DensityOperator& sigma0,
                       const DensityOperator& sigma1) {
    if (sigma0.dim() != sigma1.dim()) throw UsageError("example1_channel: dimension mismatch");
    if (q_noise < 0.0 || q_noise > 1.0) throw UsageError("example1_channel: q_noise not in [0,1]");
    auto mix = [&](double t) {
        return DensityOperator(CMatrix((1.0 - t) * sigma0.matrix() + t * sigma1.matrix()));
    };
    const DensityOperator lo = mix(q_noise);        // output when x1 | x2 = 0
    const DensityOperator hi = mix(1.0 - q_noise);  // output when x1 | x2 = 1
    return CqMac(2, 2, {lo, hi, hi, hi});
}

}  // namespace sumcq
