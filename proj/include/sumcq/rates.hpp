#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumcq/channels.hpp"

namespace sumcq {

// Entropies are in bits (log base 2) throughout.
double shannon_entropy(const std::vector<double>& pmf, double tol = 1e-9);
double binary_entropy(double p);
// a*b = a(1-b) + b(1-a), the flip-probability combination of two binary noises.
double binary_convolution(double a, double b);

// Evaluated sum-rate R = min(H_V1, H_V2) - H_U + chi_U for one auxiliary
// choice, with all intermediate quantities and (for optimizer output) the
// witness pmfs and grid metadata.
struct RateReport {
    double h_v1 = 0, h_v2 = 0, h_u = 0, chi_u = 0;
    double rate = 0;
    std::vector<double> p_v1x1, p_v2x2;  // witness joints, row-major q x |X_j|
    std::size_t grid_resolution = 0;     // 0 for direct evaluation
    bool refined = false;
};

RateReport message_sum_rate(const CqMac& mac, std::uint32_t q,
                            const std::vector<double>& p_v1x1,
                            const std::vector<double>& p_v2x2, const Tolerances& tol = {});

// Supremum estimate over product auxiliary pmfs: deterministic grid search at
// the given resolution (pmfs with denominators = resolution) plus optional
// pairwise-transfer coordinate refinement. Never a certified supremum.
RateReport optimize_message_sum_rate(const CqMac& mac, std::uint32_t q,
                                     std::size_t grid_resolution, bool refine,
                                     const Budgets& budgets = {}, const Tolerances& tol = {});

// Factorization f(s1, s2) = g(h1(s1) + h2(s2) mod q) of a function table.
struct EmbeddingSpec {
    std::uint32_t q;
    std::vector<std::uint32_t> h1, h2;  // maps S_j -> F_q
    std::vector<double> g;              // map F_q -> function values
};

// Exhaustive check that the embedding reproduces the function table.
bool embedding_factorizes(const EmbeddingSpec& e, const SourcePair& source,
                          const std::vector<double>& f_table, double tol = 1e-12);

struct ReconstructibilityResult {
    bool reconstructible = false;
    std::string reason;
    std::optional<EmbeddingSpec> embedding;
    std::optional<RateReport> rate;
    double sum_entropy = 0;  // H(h1(S1) + h2(S2)) for the returned embedding
    double margin = 0;       // rate - sum_entropy
};

// Decides whether f can be computed through the channel via some sum
// embedding: either checks the supplied embeddings in order, or searches all
// (h1, h2, g) over the given primes. The verdict requires the embedded-sum
// entropy strictly below the optimized rate (margin > 1e-9).
ReconstructibilityResult function_reconstructibility_check(
    const SourcePair& source, const std::vector<double>& f_table, const CqMac& mac,
    const std::vector<EmbeddingSpec>& embeddings, const std::vector<std::uint32_t>& search_primes,
    std::size_t grid_resolution, bool refine, const Budgets& budgets = {},
    const Tolerances& tol = {});

struct UnstructuredResult {
    bool verdict = false;    // H(S1, S2) < max chi
    double source_entropy = 0;
    double max_chi = 0;
    std::vector<double> best_p1, best_p2;
    std::size_t grid_resolution = 0;
    bool refined = false;
};

// Baseline without algebraic structure: maximize the channel's Holevo
// information over independent product input pmfs and compare with the joint
// source entropy.
UnstructuredResult unstructured_condition(const SourcePair& source, const CqMac& mac,
                                          std::size_t grid_resolution, bool refine = true,
                                          const Budgets& budgets = {}, const Tolerances& tol = {});

// Closed-form analysis of the noisy-OR channel with pure sigma0, sigma1 and
// Bernoulli(p)-related binary sources, embedded in F_3. All four sides of the
// structured and unstructured comparisons, maximized over the theta grid.
struct Example1Report {
    double p = 0, q_noise = 0, overlap = 0;
    double lhs_structured_closed = 0;  // sum-entropy closed form
    double lhs_structured_direct = 0;  // entropy of the explicit sum pmf
    double rhs_structured = 0;         // max_theta rate, closed form
    double theta_star = 0;
    double lhs_unstructured = 0;       // 1 + h_b(p)
    double rhs_unstructured = 0;       // S(rho(1/2)) - S(rho(q_noise))
    bool structured_ok = false;
    bool unstructured_ok = false;
};

Example1Report example1_analysis(double p, double q_noise, const DensityOperator& sigma0,
                                 const DensityOperator& sigma1,
                                 const std::vector<double>& theta_grid,
                                 const Tolerances& tol = {});

// Scans the parameter grids (overlap parameterizes pure qubit states
// sigma0 = |0>, sigma1 with <0|sigma1|0> = overlap^2) and returns the first
// tuple whose structured condition holds while the unstructured one fails.
std::optional<Example1Report> find_example1_witness(const std::vector<double>& p_grid,
                                                    const std::vector<double>& q_grid,
                                                    const std::vector<double>& overlap_grid,
                                                    const std::vector<double>& theta_grid,
                                                    const Tolerances& tol = {});

// Exact strong-typical set enumeration (unconditional, or conditioned on a
// sequence under a joint pmf), lexicographic order.
std::vector<std::vector<std::uint32_t>> classical_typical_set(const std::vector<double>& pmf,
                                                              std::size_t n, double delta,
                                                              const Budgets& budgets = {});
std::vector<std::vector<std::uint32_t>> classical_typical_set_conditional(
    const std::vector<double>& joint_pmf, std::size_t b_size,
    const std::vector<std::uint32_t>& given, double delta, const Budgets& budgets = {});

}  // namespace sumcq
