#pragma once

#include <cstdint>
#include <vector>

#include "sumcq/coset.hpp"

namespace sumcq {

// Error-probability evaluation result. Exact evaluations carry stderr 0 and
// trials 0; Monte Carlo results report a Wilson-adjusted standard error
// (p~ = (x + 1/2) / (trials + 1), se = sqrt(p~ (1 - p~) / (trials + 1))).
struct SimResult {
    double error = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    std::uint64_t trials = 0;  // 0 for exact evaluation
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

// Average block-error of a point-to-point code under uniform messages:
// 1 - q^-l sum_m tr(Lambda_m rho_m^{tensor n}); the failure outcome counts as
// an error.
SimResult exact_ptp_error(const PtpCode& code, const CqPtp& ptp, const Budgets& budgets = {});

// Sum-decoding error over all message pairs: correctness is credited only when
// the measured label equals m1 + m2 (mod q, componentwise). p_m1 / p_m2 are
// pmfs over message ranks.
SimResult exact_mac_sum_error(const MacSumCode& code, const std::vector<double>& p_m1,
                              const std::vector<double>& p_m2, const CqMac& mac,
                              const Budgets& budgets = {});

// Full pipeline: sources -> shared-parity syndromes -> sum code over the
// channel -> measured syndrome -> ML sequence decode; success means the
// decoded sequence equals s1 + s2. Exact mode enumerates all q^{2n} source
// pairs; Monte Carlo samples them.
SimResult end_to_end_function_error_exact(const KmCode& km, const MacSumCode& code,
                                          const SourcePair& source, const CqMac& mac,
                                          const Budgets& budgets = {});
SimResult end_to_end_function_error_mc(const KmCode& km, const MacSumCode& code,
                                       const SourcePair& source, const CqMac& mac,
                                       std::uint64_t trials, std::uint64_t seed,
                                       const Budgets& budgets = {});

// Minimum of tr(Pi_rho Pi_{a^n} Pi_rho rho_{b^n}) over jointly typical pairs
// (a^n, b^n) in T_{delta/4}(p_ab); projectors use radius delta. p_ab is
// row-major a_size x |B| with one state per b. Commuting ensembles take a
// joint-type fast path; general ensembles are evaluated densely.
struct PinchingResult {
    double min_trace = 1.0;
    std::vector<std::uint32_t> argmin_a, argmin_b;
    std::uint64_t pairs_checked = 0;
};

PinchingResult pinching_check(const std::vector<double>& p_ab, std::size_t a_size,
                              const std::vector<DensityOperator>& states_b, std::size_t n,
                              double delta, const Budgets& budgets = {},
                              const Tolerances& tol = {});

// Monte Carlo estimate of P(the coset of message 0 contains no typical
// codeword) over random (g_i, bias) draws.
struct CoverageResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
};

CoverageResult coset_coverage_probability(std::size_t n, std::size_t k, std::uint32_t q,
                                          const std::vector<double>& p_v, double delta,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const Budgets& budgets = {});

// Classical linear-binning error: sample source pairs, decode the summed
// syndrome, compare against the true symbol-wise sum. `per_trial_h` redraws
// the parity matrix each trial; either policy resamples rank-deficient h when
// l = n so the map stays invertible.
SimResult km_error_monte_carlo(const SourcePair& source, std::uint32_t q, std::size_t n,
                               std::size_t l, std::uint64_t trials, std::uint64_t seed,
                               bool per_trial_h = false, const Budgets& budgets = {});

}  // namespace sumcq
