#include "sumcq/coset.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sumcq {

namespace {

void require_generator_shape(const std::optional<FieldMatrix>& g, std::size_t rows,
                             std::size_t n, std::uint32_t q, const char* name) {
    if (rows == 0) {
        if (g.has_value()) throw UsageError(std::string(name) + ": expected absent for 0 rows");
        return;
    }
    if (!g.has_value()) throw UsageError(std::string(name) + ": missing generator matrix");
    if (g->rows() != rows || g->cols() != n) {
        throw UsageError(std::string(name) + ": generator shape mismatch");
    }
    if (g->modulus() != q) throw UsageError(std::string(name) + ": modulus mismatch");
}

}  // namespace

NestedCosetCode::NestedCosetCode(std::size_t n_, std::size_t k_, std::size_t l_, std::uint32_t q_,
                                 std::optional<FieldMatrix> gi, std::optional<FieldMatrix> goi,
                                 std::vector<std::uint32_t> b)
    : n(n_), k(k_), l(l_), q(q_), g_i(std::move(gi)), g_oi(std::move(goi)), bias(std::move(b)) {
    if (n == 0) throw UsageError("NestedCosetCode: blocklength must be positive");
    if (!is_prime(q)) throw UsageError("NestedCosetCode: q must be prime");
    require_generator_shape(g_i, k, n, q, "g_i");
    require_generator_shape(g_oi, l, n, q, "g_oi");
    if (bias.size() != n) throw UsageError("NestedCosetCode: bias length mismatch");
    for (auto v : bias) {
        if (v >= q) throw UsageError("NestedCosetCode: bias entry out of range");
    }
}

NestedCosetCode random_ncc(std::size_t n, std::size_t k, std::size_t l, std::uint32_t q,
                           std::uint64_t seed) {
    CounterRng rng(seed);
    return random_ncc(n, k, l, q, rng);
}

NestedCosetCode random_ncc(std::size_t n, std::size_t k, std::size_t l, std::uint32_t q,
                           CounterRng& rng) {
    std::optional<FieldMatrix> gi, goi;
    if (k > 0) gi = uniform_random_matrix(k, n, q, rng);
    if (l > 0) goi = uniform_random_matrix(l, n, q, rng);
    std::vector<std::uint32_t> bias(n);
    for (auto& v : bias) v = static_cast<std::uint32_t>(rng.next_below(q));
    return NestedCosetCode(n, k, l, q, std::move(gi), std::move(goi), std::move(bias));
}

std::vector<std::uint32_t> ncc_codeword(const NestedCosetCode& ncc,
                                        const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& m) {
    if (a.size() != ncc.k || m.size() != ncc.l) {
        throw UsageError("ncc_codeword: coordinate length mismatch");
    }
    std::vector<std::uint32_t> v = ncc.bias;
    if (ncc.k > 0) v = vec_add(v, vec_mat_mul(a, *ncc.g_i), ncc.q);
    if (ncc.l > 0) v = vec_add(v, vec_mat_mul(m, *ncc.g_oi), ncc.q);
    return v;
}

CosetRepresentatives choose_representatives(const NestedCosetCode& ncc,
                                            const std::vector<double>& p_v, double delta,
                                            const Budgets& budgets) {
    if (p_v.size() != ncc.q) throw UsageError("choose_representatives: pmf size != q");
    const std::uint64_t num_messages = checked_pow(ncc.q, ncc.l, budgets.enum_budget);
    const std::uint64_t coset_size = checked_pow(ncc.q, ncc.k, budgets.enum_budget);

    CosetRepresentatives out;
    out.rep.resize(num_messages);
    out.coverage.assign(num_messages, 0);
    for (std::uint64_t mr = 0; mr < num_messages; ++mr) {
        const auto m = rank_to_tuple(mr, ncc.l, ncc.q);
        bool found = false;
        for (std::uint64_t ar = 0; ar < coset_size; ++ar) {
            const auto a = rank_to_tuple(ar, ncc.k, ncc.q);
            if (is_typical(ncc_codeword(ncc, a, m), p_v, delta)) {
                ++out.coverage[mr];
                if (!found) {
                    out.rep[mr] = a;  // ranks scan in lex order, first hit is smallest
                    found = true;
                }
            }
        }
        if (!found) out.rep[mr].assign(ncc.k, 0);
    }
    return out;
}

namespace {

// Square-root measurement over the coset-aggregated sandwiched projectors
// G_m = sum_a pi_rho pi_{v^n(a,m)} pi_rho, one element per message rank.
Povm coset_povm(const NestedCosetCode& ncc, const std::vector<DensityOperator>& letter_states,
                const std::vector<double>& p_v, double delta, const Budgets& budgets,
                const Tolerances& tol) {
    if (letter_states.size() != ncc.q) throw UsageError("coset_povm: state count != q");
    const Eigen::Index d = letter_states.front().dim();
    checked_pow(static_cast<std::uint64_t>(d), ncc.n, budgets.dim_budget);
    const std::uint64_t num_messages = checked_pow(ncc.q, ncc.l, budgets.enum_budget);
    const std::uint64_t coset_size = checked_pow(ncc.q, ncc.k, budgets.enum_budget);
    checked_pow(ncc.q, ncc.k + ncc.l, budgets.enum_budget);

    CMatrix avg = CMatrix::Zero(d, d);
    for (std::uint32_t v = 0; v < ncc.q; ++v) avg += p_v[v] * letter_states[v].matrix();
    const DensityOperator rho(avg, tol);
    const PsdOperator pi_rho = typical_projector(rho, ncc.n, delta, budgets, tol);

    std::vector<PsdOperator> gammas;
    std::vector<std::int64_t> labels;
    gammas.reserve(num_messages);
    for (std::uint64_t mr = 0; mr < num_messages; ++mr) {
        const auto m = rank_to_tuple(mr, ncc.l, ncc.q);
        CMatrix g = CMatrix::Zero(pi_rho.dim(), pi_rho.dim());
        for (std::uint64_t ar = 0; ar < coset_size; ++ar) {
            const auto a = rank_to_tuple(ar, ncc.k, ncc.q);
            const auto v_seq = ncc_codeword(ncc, a, m);
            if (!is_typical(v_seq, p_v, delta)) continue;  // zero projector, skip
            // sandwich the projector span vector-by-vector; each term is
            // (pi_rho v)(pi_rho v)^dagger, avoiding dense cubic products
            for (const auto& v :
                 conditional_typical_vectors(letter_states, p_v, v_seq, delta, budgets, tol)) {
                const CVector w = pi_rho.matrix() * v;
                g += w * w.adjoint();
            }
        }
        gammas.push_back(PsdOperator::trusted(0.5 * (g + g.adjoint())));
        labels.push_back(static_cast<std::int64_t>(mr));
    }
    return square_root_povm(gammas, labels, tol, /*require_upper_bound=*/false);
}

}  // namespace

PtpCode build_ptp_code(const NestedCosetCode& ncc, const CqPtp& ptp,
                       const std::vector<double>& p_v, double delta, const Budgets& budgets,
                       const Tolerances& tol) {
    if (ptp.num_inputs() != ncc.q) throw UsageError("build_ptp_code: channel alphabet != F_q");
    PtpCode code{ncc, choose_representatives(ncc, p_v, delta, budgets), p_v, delta, Povm{}};
    code.povm = coset_povm(ncc, ptp.states(), p_v, delta, budgets, tol);
    return code;
}

KmCode::KmCode(std::uint32_t q_, std::size_t n_, std::size_t l_, FieldMatrix h_,
               std::vector<double> p_z_, const Tolerances& tol)
    : q(q_), n(n_), l(l_), h(std::move(h_)), p_z(std::move(p_z_)) {
    if (!is_prime(q)) throw UsageError("KmCode: q must be prime");
    if (h.rows() != l || h.cols() != n || h.modulus() != q) {
        throw UsageError("KmCode: parity matrix shape/modulus mismatch");
    }
    if (p_z.size() != q) throw UsageError("KmCode: sum pmf size != q");
    double total = 0.0;
    for (double v : p_z) {
        if (v < -tol.pmf) throw UsageError("KmCode: negative probability");
        total += v;
    }
    if (std::abs(total - 1.0) > tol.pmf) throw UsageError("KmCode: sum pmf not normalized");
}

std::vector<std::uint32_t> km_encode(const KmCode& km, const std::vector<std::uint32_t>& s) {
    if (s.size() != km.n) throw UsageError("km_encode: sequence length mismatch");
    return mat_vec_mul(km.h, s);
}

std::vector<std::uint32_t> km_decode_ml(const KmCode& km,
                                        const std::vector<std::uint32_t>& syndrome,
                                        const Budgets& budgets) {
    if (syndrome.size() != km.l) throw UsageError("km_decode_ml: syndrome length mismatch");
    const auto sol = solve_linear(km.h, syndrome);
    if (!sol) throw ValidationError("km_decode_ml: inconsistent syndrome");  // impossible for h z = s over a field when s in image; rank-deficient h with off-image s

    const std::size_t free_dims = sol->nullspace_basis.size();
    const std::uint64_t candidates = checked_pow(km.q, free_dims, budgets.enum_budget);

    std::vector<double> log_p(km.q);
    for (std::uint32_t z = 0; z < km.q; ++z) {
        log_p[z] = km.p_z[z] > 0.0 ? std::log(km.p_z[z])
                                   : -std::numeric_limits<double>::infinity();
    }

    std::vector<std::uint32_t> best;
    double best_ll = -std::numeric_limits<double>::infinity();
    for (std::uint64_t cr = 0; cr < candidates; ++cr) {
        const auto coeffs = rank_to_tuple(cr, free_dims, km.q);
        std::vector<std::uint32_t> z = sol->particular;
        for (std::size_t i = 0; i < free_dims; ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t t = 0; t < km.n; ++t) {
                z[t] = static_cast<std::uint32_t>(
                    (z[t] + static_cast<std::uint64_t>(coeffs[i]) * sol->nullspace_basis[i][t]) %
                    km.q);
            }
        }
        double ll = 0.0;
        for (auto zt : z) ll += log_p[zt];
        if (best.empty() || ll > best_ll + 1e-12 ||
            (std::abs(ll - best_ll) <= 1e-12 && z < best)) {
            best = std::move(z);
            best_ll = ll;
        }
    }
    return best;
}

MacSumCode build_mac_sum_code(const CqMac& mac, std::uint32_t q,
                              const std::vector<double>& p_v1x1,
                              const std::vector<double>& p_v2x2, std::size_t n, std::size_t k,
                              std::size_t l, double delta, std::uint64_t seed,
                              const Budgets& budgets, const Tolerances& tol) {
    const auto ens = induced_sum_ensemble(mac, q, p_v1x1, p_v2x2, tol);

    CounterRng root(seed);
    auto gi_rng = root.substream(0);
    auto goi_rng = root.substream(1);
    auto b1_rng = root.substream(2);
    auto b2_rng = root.substream(3);

    std::optional<FieldMatrix> gi, goi;
    if (k > 0) gi = uniform_random_matrix(k, n, q, gi_rng);
    if (l > 0) goi = uniform_random_matrix(l, n, q, goi_rng);
    auto draw_bias = [&](CounterRng& rng) {
        std::vector<std::uint32_t> b(n);
        for (auto& v : b) v = static_cast<std::uint32_t>(rng.next_below(q));
        return b;
    };
    const auto b1 = draw_bias(b1_rng);
    const auto b2 = draw_bias(b2_rng);

    NestedCosetCode enc1(n, k, l, q, gi, goi, b1);
    NestedCosetCode enc2(n, k, l, q, gi, goi, b2);
    NestedCosetCode dec(n, k, l, q, gi, goi, vec_add(b1, b2, q));

    auto reps1 = choose_representatives(enc1, ens.p_v1, delta, budgets);
    auto reps2 = choose_representatives(enc2, ens.p_v2, delta, budgets);
    MacSumCode code{std::move(enc1), std::move(enc2), std::move(dec), std::move(reps1),
                    std::move(reps2), {},  {},        ens,            delta,           Povm{}};

    const std::uint64_t num_messages = checked_pow(q, l, budgets.enum_budget);
    auto sample_inputs = [&](const NestedCosetCode& enc, const CosetRepresentatives& reps,
                             const std::vector<std::vector<double>>& p_x_given_v,
                             std::uint64_t sender_lane) {
        std::vector<std::vector<std::uint32_t>> inputs(num_messages);
        auto lane = root.substream(4 + sender_lane);
        for (std::uint64_t mr = 0; mr < num_messages; ++mr) {
            auto rng = lane.substream(mr);
            const auto v_seq =
                ncc_codeword(enc, reps.rep[mr], rank_to_tuple(mr, l, q));
            inputs[mr].resize(n);
            for (std::size_t t = 0; t < n; ++t) {
                const auto& row = p_x_given_v[v_seq[t]];
                double r = rng.next_double();
                std::size_t x = row.size() - 1;
                double acc = 0.0;
                for (std::size_t c = 0; c < row.size(); ++c) {
                    acc += row[c];
                    if (r < acc) {
                        x = c;
                        break;
                    }
                }
                inputs[mr][t] = static_cast<std::uint32_t>(x);
            }
        }
        return inputs;
    };
    code.x1 = sample_inputs(code.enc1, code.reps1, ens.p_x1_given_v1, 0);
    code.x2 = sample_inputs(code.enc2, code.reps2, ens.p_x2_given_v2, 1);

    code.povm = coset_povm(code.dec, ens.rho_u, ens.p_u, delta, budgets, tol);
    return code;
}

}  // namespace sumcq
