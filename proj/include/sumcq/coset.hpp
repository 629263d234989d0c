#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcq/channels.hpp"
#include "sumcq/field.hpp"
#include "sumcq/quantum.hpp"

namespace sumcq {

// Nested coset code (n, k, l, g_i, g_oi, bias) over F_q. Codewords
// v^n(a, m) = a g_i + m g_oi + bias (mod q); messages m index cosets of the
// inner code inside the outer one. k = 0 or l = 0 degenerate shapes are
// allowed and represented by absent generator matrices.
struct NestedCosetCode {
    std::size_t n = 0, k = 0, l = 0;
    std::uint32_t q = 2;
    std::optional<FieldMatrix> g_i;   // k x n, absent iff k = 0
    std::optional<FieldMatrix> g_oi;  // l x n, absent iff l = 0
    std::vector<std::uint32_t> bias;  // length n

    NestedCosetCode(std::size_t n, std::size_t k, std::size_t l, std::uint32_t q,
                    std::optional<FieldMatrix> gi, std::optional<FieldMatrix> goi,
                    std::vector<std::uint32_t> b);
};

// Uniformly random generators and bias, fully determined by the seed.
NestedCosetCode random_ncc(std::size_t n, std::size_t k, std::size_t l, std::uint32_t q,
                           std::uint64_t seed);
NestedCosetCode random_ncc(std::size_t n, std::size_t k, std::size_t l, std::uint32_t q,
                           CounterRng& rng);

std::vector<std::uint32_t> ncc_codeword(const NestedCosetCode& ncc,
                                        const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& m);

// Per-message coset representatives: rep[rank(m)] is the lexicographically
// smallest a with v^n(a, m) typical for (p_v, delta), or 0^k when the coset
// holds no typical codeword; coverage[rank(m)] counts the typical codewords.
struct CosetRepresentatives {
    std::vector<std::vector<std::uint32_t>> rep;
    std::vector<std::uint64_t> coverage;
};

CosetRepresentatives choose_representatives(const NestedCosetCode& ncc,
                                            const std::vector<double>& p_v, double delta,
                                            const Budgets& budgets = {});

// Point-to-point code built on an NCC: the transmitted word for message m is
// v^n(rep[m], m); the decoder is the square-root measurement of the
// coset-aggregated sandwiched projectors, with labels = message ranks and the
// reserved failure label -1.
struct PtpCode {
    NestedCosetCode ncc;
    CosetRepresentatives reps;
    std::vector<double> p_v;
    double delta = 0.0;
    Povm povm;
};

PtpCode build_ptp_code(const NestedCosetCode& ncc, const CqPtp& ptp,
                       const std::vector<double>& p_v, double delta,
                       const Budgets& budgets = {}, const Tolerances& tol = {});

// Linear binning code for the field sum of two sources: both senders apply the
// same parity matrix h; the receiver decodes the sum of syndromes against the
// pmf p_z of the symbol-wise source sum.
struct KmCode {
    std::uint32_t q;
    std::size_t n, l;
    FieldMatrix h;            // l x n
    std::vector<double> p_z;  // over F_q

    KmCode(std::uint32_t q, std::size_t n, std::size_t l, FieldMatrix h,
           std::vector<double> p_z, const Tolerances& tol = {});
};

std::vector<std::uint32_t> km_encode(const KmCode& km, const std::vector<std::uint32_t>& s);

// Exact maximum-likelihood decoding over the solution coset {z : h z = syndrome},
// ties broken lexicographically smallest. Enumerates q^(n - rank h) candidates.
std::vector<std::uint32_t> km_decode_ml(const KmCode& km,
                                        const std::vector<std::uint32_t>& syndrome,
                                        const Budgets& budgets = {});

// Two-sender sum code: encoders share g_i and g_oi but carry their own biases;
// the decoder runs the square-root measurement for the NCC with bias b1 + b2
// against the induced sum ensemble (p_u, rho_u).
struct MacSumCode {
    NestedCosetCode enc1, enc2;
    NestedCosetCode dec;  // bias = enc1.bias + enc2.bias
    CosetRepresentatives reps1, reps2;
    std::vector<std::vector<std::uint32_t>> x1, x2;  // channel inputs per message rank
    InducedSumEnsemble ensemble;
    double delta = 0.0;
    Povm povm;  // labels: decoded sum-message ranks over F_q^l, plus -1
};

MacSumCode build_mac_sum_code(const CqMac& mac, std::uint32_t q,
                              const std::vector<double>& p_v1x1,
                              const std::vector<double>& p_v2x2, std::size_t n, std::size_t k,
                              std::size_t l, double delta, std::uint64_t seed,
                              const Budgets& budgets = {}, const Tolerances& tol = {});

}  // namespace sumcq
