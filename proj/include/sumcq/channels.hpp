#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcq/quantum.hpp"

namespace sumcq {

// Point-to-point channel: one classical input selects a quantum state.
class CqPtp {
public:
    explicit CqPtp(std::vector<DensityOperator> states);

    std::size_t num_inputs() const { return states_.size(); }
    Eigen::Index dim() const { return states_.front().dim(); }
    const DensityOperator& state(std::size_t x) const;
    const std::vector<DensityOperator>& states() const { return states_; }

private:
    std::vector<DensityOperator> states_;
};

// Two-sender channel with a complete state table over X1 x X2 (row-major).
class CqMac {
public:
    CqMac(std::size_t x1_size, std::size_t x2_size, std::vector<DensityOperator> states);

    std::size_t x1_size() const { return x1_size_; }
    std::size_t x2_size() const { return x2_size_; }
    Eigen::Index dim() const { return states_.front().dim(); }
    const DensityOperator& state(std::size_t x1, std::size_t x2) const;

private:
    std::size_t x1_size_, x2_size_;
    std::vector<DensityOperator> states_;
};

// Correlated classical source pair with joint pmf over S1 x S2 (row-major).
struct SourcePair {
    std::size_t s1_size, s2_size;
    std::vector<double> joint;

    SourcePair(std::size_t n1, std::size_t n2, std::vector<double> pmf,
               const Tolerances& tol = {});

    double prob(std::size_t s1, std::size_t s2) const { return joint[s1 * s2_size + s2]; }
    std::vector<double> marginal1() const;
    std::vector<double> marginal2() const;
};

// The sum-variable calculus: auxiliary variables V1, V2 over F_q with
// conditionals into the channel alphabets induce U = V1 + V2 (mod q), states
// rho_{v1 v2} and the averaged ensemble {p_U(u); rho_u}.
struct InducedSumEnsemble {
    std::uint32_t q;
    std::vector<double> p_v1, p_v2;                     // marginals over F_q
    std::vector<std::vector<double>> p_x1_given_v1;     // q rows, |X1| columns
    std::vector<std::vector<double>> p_x2_given_v2;     // q rows, |X2| columns
    std::vector<double> p_u;                            // over F_q, may contain zeros
    std::vector<DensityOperator> rho_pair;              // index v1*q + v2
    std::vector<DensityOperator> rho_u;                 // length q; filler where p_u = 0

    // Ensemble with zero-probability sum values omitted; `labels` records which
    // u each retained entry corresponds to.
    CqEnsemble sum_ensemble(std::vector<std::uint32_t>* labels = nullptr,
                            const Tolerances& tol = {}) const;
};

// p_v1x1 / p_v2x2 are row-major joint pmfs of shape q x |X_j|. Rows of the
// derived conditionals with zero marginal mass are normalized to uniform (they
// never affect p_u or rho_u).
InducedSumEnsemble induced_sum_ensemble(const CqMac& mac, std::uint32_t q,
                                        const std::vector<double>& p_v1x1,
                                        const std::vector<double>& p_v2x2,
                                        const Tolerances& tol = {});

// When the channel state depends on the inputs only through x1 + x2 (mod q)
// up to trace distance tau_eq, returns the point-to-point channel sigma_u with
// u ranging over F_q; otherwise returns nullopt.
std::optional<CqPtp> additive_reduction(const CqMac& mac, std::uint32_t q,
                                        double tau_eq = 1e-9);

// Noisy-OR channel on binary inputs: rho_{x1 x2} = (1-q)s_{x1 or x2} + q s_{not(x1 or x2)}.
CqMac example1_channel(double q_noise, const DensityOperator& sigma0,
                       const DensityOperator& sigma1);

}  // namespace sumcq
