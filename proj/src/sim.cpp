#include "sumcq/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

namespace sumcq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double real_trace_product(const CMatrix& a, const CMatrix& b) {
    return a.cwiseProduct(b.transpose()).sum().real();
}

double clamp_probability(double p) {
    if (p < 0.0 && p > -1e-12) return 0.0;
    if (p > 1.0 && p < 1.0 + 1e-12) return 1.0;
    if (p < 0.0 || p > 1.0) {
        throw ValidationError("probability " + std::to_string(p) + " outside [0,1]");
    }
    return p;
}

double wilson_std_error(std::uint64_t successes, std::uint64_t trials) {
    const double nn = static_cast<double>(trials) + 1.0;
    const double p = (static_cast<double>(successes) + 0.5) / nn;
    return std::sqrt(p * (1.0 - p) / nn);
}

// povm element index for each message rank (labels may be permuted; -1 is the
// failure element and is never indexed here).
std::vector<std::size_t> element_index_by_rank(const Povm& povm, std::uint64_t num_messages) {
    std::vector<std::size_t> idx(num_messages, povm.elements.size());
    for (std::size_t i = 0; i < povm.elements.size(); ++i) {
        if (povm.labels[i] >= 0) idx[static_cast<std::size_t>(povm.labels[i])] = i;
    }
    for (auto v : idx) {
        if (v == povm.elements.size()) throw UsageError("POVM is missing a message label");
    }
    return idx;
}

std::vector<CMatrix> state_matrices(const std::vector<DensityOperator>& states) {
    std::vector<CMatrix> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(s.matrix());
    return out;
}

}  // namespace

SimResult exact_ptp_error(const PtpCode& code, const CqPtp& ptp, const Budgets& budgets) {
    const auto start = Clock::now();
    const auto& ncc = code.ncc;
    if (ptp.num_inputs() != ncc.q) throw UsageError("exact_ptp_error: alphabet mismatch");
    const std::uint64_t num_messages = checked_pow(ncc.q, ncc.l, budgets.enum_budget);
    const auto idx = element_index_by_rank(code.povm, num_messages);
    const auto letters = state_matrices(ptp.states());

    double correct = 0.0;
    for (std::uint64_t mr = 0; mr < num_messages; ++mr) {
        const auto v = ncc_codeword(ncc, code.reps.rep[mr], rank_to_tuple(mr, ncc.l, ncc.q));
        const CMatrix rho_m = tensor_power_states(letters, v);
        correct += clamp_probability(
            real_trace_product(code.povm.elements[idx[mr]].matrix(), rho_m));
    }

    SimResult r;
    r.error = clamp_probability(1.0 - correct / static_cast<double>(num_messages));
    r.n = ncc.n;
    r.wall_seconds = seconds_since(start);
    return r;
}

namespace {

// tr(Lambda_{m1+m2} rho_{m1,m2}) for one message pair of a sum code.
double mac_pair_success(const MacSumCode& code, const CqMac& mac,
                        const std::vector<std::size_t>& idx, std::uint64_t m1r,
                        std::uint64_t m2r) {
    const std::size_t n = code.dec.n;
    const std::uint32_t q = code.dec.q;
    CMatrix rho = CMatrix::Ones(1, 1);
    for (std::size_t t = 0; t < n; ++t) {
        rho = kron(rho, mac.state(code.x1[m1r][t], code.x2[m2r][t]).matrix());
    }
    const auto m1 = rank_to_tuple(m1r, code.dec.l, q);
    const auto m2 = rank_to_tuple(m2r, code.dec.l, q);
    const std::uint64_t sum_rank = tuple_to_rank(vec_add(m1, m2, q), q);
    return clamp_probability(
        real_trace_product(code.povm.elements[idx[sum_rank]].matrix(), rho));
}

}  // namespace

SimResult exact_mac_sum_error(const MacSumCode& code, const std::vector<double>& p_m1,
                              const std::vector<double>& p_m2, const CqMac& mac,
                              const Budgets& budgets) {
    const auto start = Clock::now();
    const std::uint64_t num_messages = checked_pow(code.dec.q, code.dec.l, budgets.enum_budget);
    checked_pow(code.dec.q, 2 * code.dec.l, budgets.enum_budget);
    if (p_m1.size() != num_messages || p_m2.size() != num_messages) {
        throw UsageError("exact_mac_sum_error: message pmf size mismatch");
    }
    const auto idx = element_index_by_rank(code.povm, num_messages);

    double correct = 0.0;
    for (std::uint64_t m1r = 0; m1r < num_messages; ++m1r) {
        for (std::uint64_t m2r = 0; m2r < num_messages; ++m2r) {
            const double w = p_m1[m1r] * p_m2[m2r];
            if (w == 0.0) continue;
            correct += w * mac_pair_success(code, mac, idx, m1r, m2r);
        }
    }

    SimResult r;
    r.error = clamp_probability(1.0 - correct);
    r.n = code.dec.n;
    r.wall_seconds = seconds_since(start);
    return r;
}

namespace {

struct PipelineTables {
    std::uint64_t num_messages = 0;
    std::vector<std::size_t> idx;
    // success_given_pair[m1r * num_messages + m2r][mhat] = tr(Lambda_mhat rho)
    std::vector<std::vector<double>> outcome;
    // decoded sequence for every measured syndrome rank
    std::vector<std::vector<std::uint32_t>> d_table;
};

PipelineTables build_pipeline_tables(const KmCode& km, const MacSumCode& code, const CqMac& mac,
                                     const Budgets& budgets) {
    if (km.n != code.dec.n || km.q != code.dec.q || km.l != code.dec.l) {
        throw UsageError("end_to_end: source code and channel code shapes disagree");
    }
    PipelineTables t;
    t.num_messages = checked_pow(km.q, km.l, budgets.enum_budget);
    checked_pow(km.q, 2 * km.l, budgets.enum_budget);
    t.idx = element_index_by_rank(code.povm, t.num_messages);

    t.outcome.resize(t.num_messages * t.num_messages);
    for (std::uint64_t m1r = 0; m1r < t.num_messages; ++m1r) {
        for (std::uint64_t m2r = 0; m2r < t.num_messages; ++m2r) {
            const std::size_t n = code.dec.n;
            CMatrix rho = CMatrix::Ones(1, 1);
            for (std::size_t s = 0; s < n; ++s) {
                rho = kron(rho, mac.state(code.x1[m1r][s], code.x2[m2r][s]).matrix());
            }
            auto& row = t.outcome[m1r * t.num_messages + m2r];
            row.resize(t.num_messages);
            for (std::uint64_t mh = 0; mh < t.num_messages; ++mh) {
                row[mh] = clamp_probability(
                    real_trace_product(code.povm.elements[t.idx[mh]].matrix(), rho));
            }
        }
    }

    t.d_table.resize(t.num_messages);
    for (std::uint64_t mh = 0; mh < t.num_messages; ++mh) {
        t.d_table[mh] = km_decode_ml(km, rank_to_tuple(mh, km.l, km.q), budgets);
    }
    return t;
}

double pair_success_probability(const KmCode& km, const PipelineTables& t,
                                const std::vector<std::uint32_t>& s1,
                                const std::vector<std::uint32_t>& s2) {
    const auto m1r = tuple_to_rank(km_encode(km, s1), km.q);
    const auto m2r = tuple_to_rank(km_encode(km, s2), km.q);
    const auto z = vec_add(s1, s2, km.q);
    const auto& row = t.outcome[m1r * t.num_messages + m2r];
    double p = 0.0;
    for (std::uint64_t mh = 0; mh < t.num_messages; ++mh) {
        if (t.d_table[mh] == z) p += row[mh];
    }
    return p;
}

}  // namespace

SimResult end_to_end_function_error_exact(const KmCode& km, const MacSumCode& code,
                                          const SourcePair& source, const CqMac& mac,
                                          const Budgets& budgets) {
    const auto start = Clock::now();
    if (source.s1_size != km.q || source.s2_size != km.q) {
        throw UsageError("end_to_end: source alphabets must be F_q");
    }
    const std::uint64_t seq_count = checked_pow(km.q, km.n, budgets.enum_budget);
    if (seq_count > budgets.enum_budget / seq_count) {
        throw ResourceError("end_to_end: q^(2n) source-pair enumeration exceeds budget");
    }
    const auto tables = build_pipeline_tables(km, code, mac, budgets);

    double success = 0.0;
    for (std::uint64_t r1 = 0; r1 < seq_count; ++r1) {
        const auto s1 = rank_to_tuple(r1, km.n, km.q);
        for (std::uint64_t r2 = 0; r2 < seq_count; ++r2) {
            const auto s2 = rank_to_tuple(r2, km.n, km.q);
            double w = 1.0;
            for (std::size_t t = 0; t < km.n; ++t) w *= source.prob(s1[t], s2[t]);
            if (w == 0.0) continue;
            success += w * pair_success_probability(km, tables, s1, s2);
        }
    }

    SimResult r;
    r.error = clamp_probability(1.0 - success);
    r.n = km.n;
    r.wall_seconds = seconds_since(start);
    return r;
}

SimResult end_to_end_function_error_mc(const KmCode& km, const MacSumCode& code,
                                       const SourcePair& source, const CqMac& mac,
                                       std::uint64_t trials, std::uint64_t seed,
                                       const Budgets& budgets) {
    const auto start = Clock::now();
    if (trials == 0) throw UsageError("end_to_end: zero trials");
    if (source.s1_size != km.q || source.s2_size != km.q) {
        throw UsageError("end_to_end: source alphabets must be F_q");
    }
    const auto tables = build_pipeline_tables(km, code, mac, budgets);

    CounterRng root(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto rng = root.substream(trial);
        std::vector<std::uint32_t> s1(km.n), s2(km.n);
        for (std::size_t t = 0; t < km.n; ++t) {
            const double r = rng.next_double();
            double acc = 0.0;
            std::size_t cell = km.q * km.q - 1;
            for (std::size_t c = 0; c < km.q * static_cast<std::size_t>(km.q); ++c) {
                acc += source.joint[c];
                if (r < acc) {
                    cell = c;
                    break;
                }
            }
            s1[t] = static_cast<std::uint32_t>(cell / km.q);
            s2[t] = static_cast<std::uint32_t>(cell % km.q);
        }
        const auto m1r = tuple_to_rank(km_encode(km, s1), km.q);
        const auto m2r = tuple_to_rank(km_encode(km, s2), km.q);
        const auto& row = tables.outcome[m1r * tables.num_messages + m2r];
        // Sample the measurement outcome; residual mass is the failure element.
        const double r = rng.next_double();
        double acc = 0.0;
        std::int64_t outcome = -1;
        for (std::uint64_t mh = 0; mh < tables.num_messages; ++mh) {
            acc += row[mh];
            if (r < acc) {
                outcome = static_cast<std::int64_t>(mh);
                break;
            }
        }
        if (outcome >= 0 &&
            tables.d_table[static_cast<std::uint64_t>(outcome)] == vec_add(s1, s2, km.q)) {
            ++successes;
        }
    }

    SimResult r;
    r.error = clamp_probability(1.0 - static_cast<double>(successes) / static_cast<double>(trials));
    r.std_error = wilson_std_error(trials - successes, trials);
    r.n = km.n;
    r.trials = trials;
    r.seed = seed;
    r.wall_seconds = seconds_since(start);
    return r;
}

namespace {

bool counts_within(const std::vector<std::uint32_t>& counts, const std::vector<double>& pmf,
                   std::size_t n, double radius) {
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        if (pmf[i] == 0.0) {
            if (counts[i] != 0) return false;
        } else if (std::abs(static_cast<double>(counts[i]) / static_cast<double>(n) - pmf[i]) >
                   radius) {
            return false;
        }
    }
    return true;
}

// Joint-type fast path for simultaneously diagonal ensembles: the trace
// depends on (a^n, b^n) only through the joint type, so one representative
// pair per typical type suffices.
PinchingResult pinching_diagonal(const std::vector<double>& p_ab, std::size_t a_size,
                                 std::size_t b_size, const std::vector<double>& r_rho,
                                 const std::vector<std::vector<double>>& r_given_a,
                                 const std::vector<std::vector<double>>& r_given_b,
                                 const std::vector<double>& p_a, std::size_t n, double delta,
                                 const Budgets& budgets) {
    const std::size_t d = r_rho.size();
    checked_pow(d, n, budgets.dim_budget);
    const auto types = enumerate_compositions(n, a_size * b_size, budgets.enum_budget);

    // Joint pmf p_A(a) * r(y|a) for the conditional gate, flattened a*d + y.
    std::vector<double> p_ay(a_size * d);
    for (std::size_t a = 0; a < a_size; ++a) {
        for (std::size_t y = 0; y < d; ++y) p_ay[a * d + y] = p_a[a] * r_given_a[a][y];
    }

    PinchingResult out;
    out.min_trace = std::numeric_limits<double>::infinity();
    for (const auto& type : types) {
        if (!counts_within(type, p_ab, n, delta / 4.0)) continue;
        std::vector<std::uint32_t> a_seq, b_seq;
        a_seq.reserve(n);
        b_seq.reserve(n);
        for (std::size_t cell = 0; cell < type.size(); ++cell) {
            for (std::uint32_t c = 0; c < type[cell]; ++c) {
                a_seq.push_back(static_cast<std::uint32_t>(cell / b_size));
                b_seq.push_back(static_cast<std::uint32_t>(cell % b_size));
            }
        }

        double trace = 0.0;
        std::vector<std::uint32_t> y(n, 0);
        std::vector<std::uint32_t> y_counts(d, 0);
        std::vector<std::uint32_t> ay_counts(a_size * d, 0);
        while (true) {
            double w = 1.0;
            for (std::size_t t = 0; t < n && w > 0.0; ++t) w *= r_given_b[b_seq[t]][y[t]];
            if (w > 0.0) {
                std::fill(y_counts.begin(), y_counts.end(), 0);
                std::fill(ay_counts.begin(), ay_counts.end(), 0);
                for (std::size_t t = 0; t < n; ++t) {
                    ++y_counts[y[t]];
                    ++ay_counts[a_seq[t] * d + y[t]];
                }
                if (counts_within(y_counts, r_rho, n, delta) &&
                    counts_within(ay_counts, p_ay, n, delta)) {
                    trace += w;
                }
            }
            std::size_t pos = n;
            while (pos > 0) {
                if (++y[pos - 1] < d) break;
                y[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }

        ++out.pairs_checked;
        if (trace < out.min_trace) {
            out.min_trace = trace;
            out.argmin_a = a_seq;
            out.argmin_b = b_seq;
        }
    }
    if (out.pairs_checked == 0) out.min_trace = 1.0;  // empty typical set
    return out;
}

}  // namespace

PinchingResult pinching_check(const std::vector<double>& p_ab, std::size_t a_size,
                              const std::vector<DensityOperator>& states_b, std::size_t n,
                              double delta, const Budgets& budgets, const Tolerances& tol) {
    const std::size_t b_size = states_b.size();
    if (b_size == 0 || a_size == 0 || p_ab.size() != a_size * b_size) {
        throw UsageError("pinching_check: pmf shape mismatch");
    }
    const Eigen::Index d = states_b.front().dim();

    std::vector<double> p_a(a_size, 0.0), p_b(b_size, 0.0);
    for (std::size_t a = 0; a < a_size; ++a) {
        for (std::size_t b = 0; b < b_size; ++b) {
            p_a[a] += p_ab[a * b_size + b];
            p_b[b] += p_ab[a * b_size + b];
        }
    }

    CMatrix avg = CMatrix::Zero(d, d);
    for (std::size_t b = 0; b < b_size; ++b) avg += p_b[b] * states_b[b].matrix();
    const DensityOperator rho(avg, tol);

    // rho_a = sum_b p(b|a) rho_b; rows with p_a = 0 never pass the gate.
    std::vector<CMatrix> rho_a(a_size, CMatrix::Zero(d, d));
    for (std::size_t a = 0; a < a_size; ++a) {
        if (p_a[a] == 0.0) {
            rho_a[a] = CMatrix::Identity(d, d) / static_cast<double>(d);
            continue;
        }
        for (std::size_t b = 0; b < b_size; ++b) {
            rho_a[a] += (p_ab[a * b_size + b] / p_a[a]) * states_b[b].matrix();
        }
    }

    // Common-eigenbasis fast path: all states diagonal in rho's eigenbasis.
    const auto eig = spectral_decomposition(rho, tol);
    bool commuting = true;
    std::vector<std::vector<double>> r_given_b(b_size, std::vector<double>(d));
    for (std::size_t b = 0; b < b_size && commuting; ++b) {
        const CMatrix sigma =
            eig.eigenvectors.adjoint() * states_b[b].matrix() * eig.eigenvectors;
        for (Eigen::Index i = 0; i < d && commuting; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                if (i != j && std::abs(sigma(i, j)) > 1e-11) {
                    commuting = false;
                    break;
                }
            }
            if (commuting) r_given_b[b][static_cast<std::size_t>(i)] = sigma(i, i).real();
        }
    }

    if (commuting) {
        // numerically-zero weights are treated as exact zeros so the
        // zero-probability exclusion of strong typicality applies
        for (auto& row : r_given_b) {
            for (auto& v : row) {
                if (v < 1e-12) v = 0.0;
            }
        }
        std::vector<double> r_rho(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            r_rho[i] = eig.eigenvalues(i) < 1e-12 ? 0.0 : eig.eigenvalues(i);
        }
        std::vector<std::vector<double>> r_given_a(a_size, std::vector<double>(d, 0.0));
        for (std::size_t a = 0; a < a_size; ++a) {
            for (std::size_t b = 0; b < b_size; ++b) {
                const double w = p_a[a] > 0.0 ? p_ab[a * b_size + b] / p_a[a]
                                              : 1.0 / static_cast<double>(b_size);
                for (std::size_t y = 0; y < static_cast<std::size_t>(d); ++y) {
                    r_given_a[a][y] += w * std::max(0.0, r_given_b[b][y]);
                }
            }
        }
        for (auto& row : r_given_b) {
            for (auto& v : row) v = std::max(0.0, v);
        }
        return pinching_diagonal(p_ab, a_size, b_size, r_rho, r_given_a, r_given_b, p_a, n,
                                 delta, budgets);
    }

    // Dense path: enumerate jointly typical pairs explicitly.
    checked_pow(static_cast<std::uint64_t>(d), n, budgets.dim_budget);
    const auto pairs = enumerate_typical(p_ab, n, delta / 4.0, budgets.enum_budget);
    const PsdOperator pi_rho = typical_projector(rho, n, delta, budgets, tol);
    const auto letters = state_matrices(states_b);

    std::vector<DensityOperator> rho_a_states;
    rho_a_states.reserve(a_size);
    for (const auto& m : rho_a) rho_a_states.emplace_back(m, tol);

    PinchingResult out;
    out.min_trace = std::numeric_limits<double>::infinity();
    std::map<std::vector<std::uint32_t>, CMatrix> sandwich_cache;
    for (const auto& pair_seq : pairs) {
        std::vector<std::uint32_t> a_seq(n), b_seq(n);
        for (std::size_t t = 0; t < n; ++t) {
            a_seq[t] = pair_seq[t] / static_cast<std::uint32_t>(b_size);
            b_seq[t] = pair_seq[t] % static_cast<std::uint32_t>(b_size);
        }
        auto it = sandwich_cache.find(a_seq);
        if (it == sandwich_cache.end()) {
            const PsdOperator pi_a =
                conditional_typical_projector(rho_a_states, p_a, a_seq, delta, budgets, tol);
            it = sandwich_cache
                     .emplace(a_seq,
                              CMatrix(pi_rho.matrix() * pi_a.matrix() * pi_rho.matrix()))
                     .first;
        }
        const CMatrix rho_bn = tensor_power_states(letters, b_seq);
        const double trace = real_trace_product(it->second, rho_bn);
        ++out.pairs_checked;
        if (trace < out.min_trace) {
            out.min_trace = trace;
            out.argmin_a = a_seq;
            out.argmin_b = b_seq;
        }
    }
    if (out.pairs_checked == 0) out.min_trace = 1.0;
    return out;
}

CoverageResult coset_coverage_probability(std::size_t n, std::size_t k, std::uint32_t q,
                                          const std::vector<double>& p_v, double delta,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const Budgets& budgets) {
    if (trials == 0) throw UsageError("coset_coverage_probability: zero trials");
    if (p_v.size() != q) throw UsageError("coset_coverage_probability: pmf size != q");
    const std::uint64_t coset_size = checked_pow(q, k, budgets.enum_budget);

    CounterRng root(seed);
    CoverageResult out;
    out.trials = trials;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto rng = root.substream(trial);
        std::optional<FieldMatrix> gi;
        if (k > 0) gi = uniform_random_matrix(k, n, q, rng);
        std::vector<std::uint32_t> bias(n);
        for (auto& v : bias) v = static_cast<std::uint32_t>(rng.next_below(q));
        const NestedCosetCode ncc(n, k, 0, q, gi, std::nullopt, bias);

        bool covered = false;
        for (std::uint64_t ar = 0; ar < coset_size && !covered; ++ar) {
            covered = is_typical(ncc_codeword(ncc, rank_to_tuple(ar, k, q), {}), p_v, delta);
        }
        if (!covered) ++out.failures;
    }
    out.estimate = static_cast<double>(out.failures) / static_cast<double>(trials);
    out.std_error = wilson_std_error(out.failures, trials);
    return out;
}

SimResult km_error_monte_carlo(const SourcePair& source, std::uint32_t q, std::size_t n,
                               std::size_t l, std::uint64_t trials, std::uint64_t seed,
                               bool per_trial_h, const Budgets& budgets) {
    const auto start = Clock::now();
    if (trials == 0) throw UsageError("km_error_monte_carlo: zero trials");
    if (source.s1_size != q || source.s2_size != q) {
        throw UsageError("km_error_monte_carlo: source alphabets must be F_q");
    }
    if (l == 0 || l > n) throw UsageError("km_error_monte_carlo: l must be in [1, n]");

    std::vector<double> p_z(q, 0.0);
    for (std::uint32_t s1 = 0; s1 < q; ++s1) {
        for (std::uint32_t s2 = 0; s2 < q; ++s2) {
            p_z[(s1 + s2) % q] += source.prob(s1, s2);
        }
    }

    CounterRng root(seed);
    auto h_lane = root.substream(0);
    auto trial_lane = root.substream(1);

    // l = n keeps the syndrome map invertible by redrawing rank-deficient h.
    auto draw_h = [&](CounterRng& rng) {
        while (true) {
            FieldMatrix h = uniform_random_matrix(l, n, q, rng);
            if (l < n || field_rank(h) == n) return h;
        }
    };

    std::optional<KmCode> fixed;
    if (!per_trial_h) fixed = KmCode(q, n, l, draw_h(h_lane), p_z);

    std::uint64_t errors = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto rng = trial_lane.substream(trial);
        std::vector<std::uint32_t> s1(n), s2(n);
        for (std::size_t t = 0; t < n; ++t) {
            const double r = rng.next_double();
            double acc = 0.0;
            std::size_t cell = static_cast<std::size_t>(q) * q - 1;
            for (std::size_t c = 0; c < static_cast<std::size_t>(q) * q; ++c) {
                acc += source.joint[c];
                if (r < acc) {
                    cell = c;
                    break;
                }
            }
            s1[t] = static_cast<std::uint32_t>(cell / q);
            s2[t] = static_cast<std::uint32_t>(cell % q);
        }

        const KmCode* km = nullptr;
        std::optional<KmCode> per_trial;
        if (per_trial_h) {
            auto hr = h_lane.substream(trial);
            per_trial = KmCode(q, n, l, draw_h(hr), p_z);
            km = &*per_trial;
        } else {
            km = &*fixed;
        }

        const auto syndrome =
            vec_add(km_encode(*km, s1), km_encode(*km, s2), q);
        if (km_decode_ml(*km, syndrome, budgets) != vec_add(s1, s2, q)) ++errors;
    }

    SimResult r;
    r.error = static_cast<double>(errors) / static_cast<double>(trials);
    r.std_error = wilson_std_error(errors, trials);
    r.n = n;
    r.trials = trials;
    r.seed = seed;
    r.wall_seconds = seconds_since(start);
    return r;
}

}  // namespace sumcq
