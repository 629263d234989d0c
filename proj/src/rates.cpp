#include "sumcq/rates.hpp"

#include <algorithm>
#include <cmath>

#include "sumcq/field.hpp"

namespace sumcq {

double shannon_entropy(const std::vector<double>& pmf, double tol) {
    if (pmf.empty()) throw UsageError("shannon_entropy: empty pmf");
    double total = 0.0, h = 0.0;
    for (double p : pmf) {
        if (p < -tol) throw UsageError("shannon_entropy: negative probability");
        total += p;
        if (p > 0.0) h -= p * std::log2(p);
    }
    if (std::abs(total - 1.0) > tol) throw UsageError("shannon_entropy: pmf not normalized");
    return h;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw UsageError("binary_entropy: p not in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double binary_convolution(double a, double b) {
    if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0) {
        throw UsageError("binary_convolution: arguments not in [0,1]");
    }
    return a * (1.0 - b) + b * (1.0 - a);
}

RateReport message_sum_rate(const CqMac& mac, std::uint32_t q,
                            const std::vector<double>& p_v1x1,
                            const std::vector<double>& p_v2x2, const Tolerances& tol) {
    const auto ens = induced_sum_ensemble(mac, q, p_v1x1, p_v2x2, tol);
    RateReport r;
    r.h_v1 = shannon_entropy(ens.p_v1, tol.pmf);
    r.h_v2 = shannon_entropy(ens.p_v2, tol.pmf);
    r.h_u = shannon_entropy(ens.p_u, tol.pmf);
    r.chi_u = holevo_information(ens.sum_ensemble(nullptr, tol), tol);
    r.rate = std::min(r.h_v1, r.h_v2) - r.h_u + r.chi_u;
    r.p_v1x1 = p_v1x1;
    r.p_v2x2 = p_v2x2;
    return r;
}

namespace {

std::vector<std::vector<double>> simplex_grid(std::size_t cells, std::size_t resolution,
                                              std::uint64_t enum_budget) {
    const auto compositions = enumerate_compositions(resolution, cells, enum_budget);
    std::vector<std::vector<double>> out;
    out.reserve(compositions.size());
    for (const auto& c : compositions) {
        std::vector<double> p(cells);
        for (std::size_t i = 0; i < cells; ++i) {
            p[i] = static_cast<double>(c[i]) / static_cast<double>(resolution);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Pairwise mass-transfer coordinate descent over two simplex points, halving
// the step until 1e-9. Deterministic scan order; accepts strict improvements.
template <typename Eval>
double refine_pair(std::vector<double>& p1, std::vector<double>& p2, double init_step,
                   Eval&& eval) {
    double best = eval(p1, p2);
    double step = init_step;
    while (step > 1e-9) {
        bool improved = false;
        for (auto* vec : {&p1, &p2}) {
            auto& p = *vec;
            for (std::size_t i = 0; i < p.size(); ++i) {
                for (std::size_t j = 0; j < p.size(); ++j) {
                    if (i == j || p[i] < step) continue;
                    p[i] -= step;
                    p[j] += step;
                    const double val = eval(p1, p2);
                    if (val > best + 1e-13) {
                        best = val;
                        improved = true;
                    } else {
                        p[i] += step;
                        p[j] -= step;
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace

RateReport optimize_message_sum_rate(const CqMac& mac, std::uint32_t q,
                                     std::size_t grid_resolution, bool refine,
                                     const Budgets& budgets, const Tolerances& tol) {
    if (grid_resolution == 0) throw UsageError("optimize_message_sum_rate: zero resolution");
    const auto grid1 = simplex_grid(q * mac.x1_size(), grid_resolution, budgets.enum_budget);
    const auto grid2 = simplex_grid(q * mac.x2_size(), grid_resolution, budgets.enum_budget);
    if (grid1.size() * grid2.size() > budgets.enum_budget) {
        throw ResourceError("optimize_message_sum_rate: grid of " +
                            std::to_string(grid1.size() * grid2.size()) +
                            " points exceeds budget");
    }

    RateReport best;
    bool first = true;
    for (const auto& p1 : grid1) {
        for (const auto& p2 : grid2) {
            RateReport r = message_sum_rate(mac, q, p1, p2, tol);
            if (first || r.rate > best.rate) {
                best = std::move(r);
                first = false;
            }
        }
    }
    best.grid_resolution = grid_resolution;
    if (refine) {
        auto p1 = best.p_v1x1;
        auto p2 = best.p_v2x2;
        refine_pair(p1, p2, 1.0 / static_cast<double>(grid_resolution),
                    [&](const std::vector<double>& a, const std::vector<double>& b) {
                        return message_sum_rate(mac, q, a, b, tol).rate;
                    });
        best = message_sum_rate(mac, q, p1, p2, tol);
        best.grid_resolution = grid_resolution;
        best.refined = true;
    }
    return best;
}

bool embedding_factorizes(const EmbeddingSpec& e, const SourcePair& source,
                          const std::vector<double>& f_table, double tol) {
    if (e.h1.size() != source.s1_size || e.h2.size() != source.s2_size ||
        e.g.size() != e.q) {
        return false;
    }
    for (auto v : e.h1) {
        if (v >= e.q) return false;
    }
    for (auto v : e.h2) {
        if (v >= e.q) return false;
    }
    for (std::size_t s1 = 0; s1 < source.s1_size; ++s1) {
        for (std::size_t s2 = 0; s2 < source.s2_size; ++s2) {
            const std::uint32_t u = (e.h1[s1] + e.h2[s2]) % e.q;
            if (std::abs(e.g[u] - f_table[s1 * source.s2_size + s2]) > tol) return false;
        }
    }
    return true;
}

namespace {

double embedded_sum_entropy(const EmbeddingSpec& e, const SourcePair& source) {
    std::vector<double> p_z(e.q, 0.0);
    for (std::size_t s1 = 0; s1 < source.s1_size; ++s1) {
        for (std::size_t s2 = 0; s2 < source.s2_size; ++s2) {
            p_z[(e.h1[s1] + e.h2[s2]) % e.q] += source.prob(s1, s2);
        }
    }
    return shannon_entropy(p_z);
}

// Derive g from (h1, h2) and the function table; nullopt when inconsistent.
std::optional<std::vector<double>> derive_g(std::uint32_t q, const std::vector<std::uint32_t>& h1,
                                            const std::vector<std::uint32_t>& h2,
                                            const SourcePair& source,
                                            const std::vector<double>& f_table) {
    std::vector<double> g(q, 0.0);
    std::vector<bool> seen(q, false);
    for (std::size_t s1 = 0; s1 < source.s1_size; ++s1) {
        for (std::size_t s2 = 0; s2 < source.s2_size; ++s2) {
            const std::uint32_t u = (h1[s1] + h2[s2]) % q;
            const double f = f_table[s1 * source.s2_size + s2];
            if (seen[u]) {
                if (std::abs(g[u] - f) > 1e-12) return std::nullopt;
            } else {
                g[u] = f;
                seen[u] = true;
            }
        }
    }
    return g;
}

}  // namespace

ReconstructibilityResult function_reconstructibility_check(
    const SourcePair& source, const std::vector<double>& f_table, const CqMac& mac,
    const std::vector<EmbeddingSpec>& embeddings, const std::vector<std::uint32_t>& search_primes,
    std::size_t grid_resolution, bool refine, const Budgets& budgets, const Tolerances& tol) {
    if (f_table.size() != source.s1_size * source.s2_size) {
        throw UsageError("function_reconstructibility_check: table size mismatch");
    }

    std::vector<EmbeddingSpec> candidates;
    for (const auto& e : embeddings) {
        if (embedding_factorizes(e, source, f_table)) candidates.push_back(e);
    }
    for (std::uint32_t q : search_primes) {
        if (!is_prime(q)) throw UsageError("function_reconstructibility_check: q not prime");
        const std::uint64_t h1_count = checked_pow(q, source.s1_size, budgets.enum_budget);
        const std::uint64_t h2_count = checked_pow(q, source.s2_size, budgets.enum_budget);
        for (std::uint64_t r1 = 0; r1 < h1_count; ++r1) {
            const auto h1 = rank_to_tuple(r1, source.s1_size, q);
            for (std::uint64_t r2 = 0; r2 < h2_count; ++r2) {
                const auto h2 = rank_to_tuple(r2, source.s2_size, q);
                if (auto g = derive_g(q, h1, h2, source, f_table)) {
                    candidates.push_back(EmbeddingSpec{q, h1, h2, std::move(*g)});
                }
            }
        }
    }

    ReconstructibilityResult out;
    if (candidates.empty()) {
        out.reason = "no (h1,h2,g) factorization";
        return out;
    }

    // The optimized rate depends only on q, so cache it across candidates.
    std::vector<std::pair<std::uint32_t, RateReport>> rate_cache;
    double best_margin = -1e300;
    for (const auto& e : candidates) {
        const RateReport* rate = nullptr;
        for (const auto& [cq, cr] : rate_cache) {
            if (cq == e.q) rate = &cr;
        }
        if (!rate) {
            rate_cache.emplace_back(
                e.q, optimize_message_sum_rate(mac, e.q, grid_resolution, refine, budgets, tol));
            rate = &rate_cache.back().second;
        }
        const double hz = embedded_sum_entropy(e, source);
        const double margin = rate->rate - hz;
        if (margin > best_margin) {
            best_margin = margin;
            out.embedding = e;
            out.rate = *rate;
            out.sum_entropy = hz;
            out.margin = margin;
        }
        if (margin > 1e-9) {
            out.reconstructible = true;
            out.reason = "embedded-sum entropy strictly below optimized rate";
            return out;
        }
    }
    out.reason = "no embedding beats the optimized rate";
    return out;
}

UnstructuredResult unstructured_condition(const SourcePair& source, const CqMac& mac,
                                          std::size_t grid_resolution, bool refine,
                                          const Budgets& budgets, const Tolerances& tol) {
    auto chi_of = [&](const std::vector<double>& p1, const std::vector<double>& p2) {
        std::vector<double> pmf;
        std::vector<DensityOperator> states;
        for (std::size_t x1 = 0; x1 < mac.x1_size(); ++x1) {
            for (std::size_t x2 = 0; x2 < mac.x2_size(); ++x2) {
                const double w = p1[x1] * p2[x2];
                if (w > 0.0) {
                    pmf.push_back(w);
                    states.push_back(mac.state(x1, x2));
                }
            }
        }
        return holevo_information(CqEnsemble(std::move(pmf), std::move(states), tol), tol);
    };

    const auto grid1 = simplex_grid(mac.x1_size(), grid_resolution, budgets.enum_budget);
    const auto grid2 = simplex_grid(mac.x2_size(), grid_resolution, budgets.enum_budget);

    UnstructuredResult out;
    out.grid_resolution = grid_resolution;
    bool first = true;
    for (const auto& p1 : grid1) {
        for (const auto& p2 : grid2) {
            const double chi = chi_of(p1, p2);
            if (first || chi > out.max_chi) {
                out.max_chi = chi;
                out.best_p1 = p1;
                out.best_p2 = p2;
                first = false;
            }
        }
    }
    if (refine) {
        out.max_chi = refine_pair(out.best_p1, out.best_p2,
                                  1.0 / static_cast<double>(grid_resolution), chi_of);
        out.refined = true;
    }
    out.source_entropy = shannon_entropy(source.joint, tol.pmf);
    out.verdict = out.source_entropy < out.max_chi - 1e-9;
    return out;
}

Example1Report example1_analysis(double p, double q_noise, const DensityOperator& sigma0,
                                 const DensityOperator& sigma1,
                                 const std::vector<double>& theta_grid, const Tolerances& tol) {
    if (p < 0.0 || p > 1.0 || q_noise < 0.0 || q_noise > 1.0) {
        throw UsageError("example1_analysis: parameters not in [0,1]");
    }
    if (!is_pure(sigma0) || !is_pure(sigma1)) {
        throw UsageError(
            "example1_analysis: closed forms require pure states; evaluate mixed states through "
            "message_sum_rate instead");
    }
    if (theta_grid.empty()) throw UsageError("example1_analysis: empty theta grid");

    auto entropy_of_mix = [&](double t) {
        return von_neumann_entropy(
            DensityOperator(CMatrix((1.0 - t) * sigma0.matrix() + t * sigma1.matrix()), tol), tol);
    };
    const double s_q = entropy_of_mix(q_noise);

    Example1Report rep;
    rep.p = p;
    rep.q_noise = q_noise;
    // Amplitude overlap |<psi0|psi1>| recovered from tr(sigma0 sigma1).
    rep.overlap = std::sqrt(std::abs((sigma0.matrix() * sigma1.matrix()).trace().real()));

    const double alpha_p = 2.0 * p - p * p;
    rep.lhs_structured_closed =
        binary_entropy(alpha_p) + alpha_p * binary_entropy(p < 1.0 ? p / (2.0 - p) : 1.0);
    rep.lhs_structured_direct =
        shannon_entropy({(1.0 - p) * (1.0 - p), 2.0 * p * (1.0 - p), p * p});

    bool first = true;
    for (double theta : theta_grid) {
        if (theta < 0.0 || theta > 1.0) throw UsageError("example1_analysis: theta outside [0,1]");
        const double alpha = 2.0 * theta - theta * theta;
        const double h_u = binary_entropy(alpha) +
                           alpha * binary_entropy(theta < 1.0 ? theta / (2.0 - theta) : 1.0);
        const double rhs = binary_entropy(theta) - h_u +
                           entropy_of_mix(binary_convolution(alpha, q_noise)) - s_q;
        if (first || rhs > rep.rhs_structured) {
            rep.rhs_structured = rhs;
            rep.theta_star = theta;
            first = false;
        }
    }

    rep.lhs_unstructured = 1.0 + binary_entropy(p);
    rep.rhs_unstructured = entropy_of_mix(0.5) - s_q;

    rep.structured_ok = rep.lhs_structured_closed < rep.rhs_structured - 1e-9;
    rep.unstructured_ok = rep.lhs_unstructured < rep.rhs_unstructured - 1e-9;
    return rep;
}

std::optional<Example1Report> find_example1_witness(const std::vector<double>& p_grid,
                                                    const std::vector<double>& q_grid,
                                                    const std::vector<double>& overlap_grid,
                                                    const std::vector<double>& theta_grid,
                                                    const Tolerances& tol) {
    const DensityOperator sigma0 = pure_qubit(0.0);
    for (double p : p_grid) {
        for (double q_noise : q_grid) {
            for (double overlap : overlap_grid) {
                const DensityOperator sigma1 = pure_qubit(std::acos(overlap));
                const auto rep = example1_analysis(p, q_noise, sigma0, sigma1, theta_grid, tol);
                if (rep.structured_ok && !rep.unstructured_ok) return rep;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> classical_typical_set(const std::vector<double>& pmf,
                                                              std::size_t n, double delta,
                                                              const Budgets& budgets) {
    return enumerate_typical(pmf, n, delta, budgets.enum_budget);
}

std::vector<std::vector<std::uint32_t>> classical_typical_set_conditional(
    const std::vector<double>& joint_pmf, std::size_t b_size,
    const std::vector<std::uint32_t>& given, double delta, const Budgets& budgets) {
    return enumerate_conditionally_typical(joint_pmf, b_size, given, delta, budgets.enum_budget);
}

}  // namespace sumcq
