#include "sumcq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sumcq/field.hpp"

namespace sumcq {

namespace {

// spectral weights below this are treated as exactly zero when forming the
// pmfs that drive typical-sequence enumeration
constexpr double kSpectralZero = 1e-12;

void require_hermitian(const CMatrix& m, double tol, const char* what) {
    if (m.rows() != m.cols()) throw UsageError(std::string(what) + ": matrix not square");
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol) {
        throw ValidationError(std::string(what) + ": not Hermitian (deviation " +
                              std::to_string(dev) + ")");
    }
}

CMatrix hermitize(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

double min_eigenvalue(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitize(m),
                                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void canonicalize_phase(CMatrix& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const Cplx v = vectors(r, c);
            if (std::abs(v) > 1e-12) {
                vectors.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
}

bool column_lex_less(const CMatrix& m, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const Cplx x = m(r, a), y = m(r, b);
        if (std::abs(x.real() - y.real()) > 1e-12) return x.real() < y.real();
        if (std::abs(x.imag() - y.imag()) > 1e-12) return x.imag() < y.imag();
    }
    return false;
}

SpectralDecomposition ordered_eigs(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitize(m));
    if (solver.info() != Eigen::Success) throw ValidationError("eigendecomposition failed");
    Eigen::VectorXd vals = solver.eigenvalues();
    CMatrix vecs = solver.eigenvectors();
    canonicalize_phase(vecs);

    std::vector<Eigen::Index> order(static_cast<std::size_t>(vals.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (std::abs(vals(a) - vals(b)) > 1e-10) return vals(a) > vals(b);
        return column_lex_less(vecs, a, b);
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(vals.size());
    out.eigenvectors.resize(vecs.rows(), vecs.cols());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        out.eigenvalues(i) = vals(order[static_cast<std::size_t>(i)]);
        out.eigenvectors.col(i) = vecs.col(order[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace

PsdOperator::PsdOperator(CMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    require_hermitian(m_, tol.herm, "PsdOperator");
    m_ = hermitize(m_);
    const double lambda_min = min_eigenvalue(m_);
    if (lambda_min < -tol.psd) {
        throw ValidationError("PsdOperator: negative eigenvalue " + std::to_string(lambda_min));
    }
}

PsdOperator PsdOperator::trusted(CMatrix m) { return PsdOperator(std::move(m), Trusted{}); }

DensityOperator::DensityOperator(CMatrix m, const Tolerances& tol)
    : PsdOperator(std::move(m), tol) {
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw ValidationError("DensityOperator: trace " + std::to_string(tr) + " != 1");
    }
}

SpectralDecomposition spectral_decomposition(const DensityOperator& rho, const Tolerances& tol) {
    SpectralDecomposition out = ordered_eigs(rho.matrix());
    for (Eigen::Index i = 0; i < out.eigenvalues.size(); ++i) {
        if (out.eigenvalues(i) < -tol.psd) {
            throw ValidationError("spectral_decomposition: negative eigenvalue");
        }
        out.eigenvalues(i) = std::clamp(out.eigenvalues(i), 0.0, 1.0);
    }
    return out;
}

SpectralDecomposition hermitian_eigs(const CMatrix& m) { return ordered_eigs(m); }

double von_neumann_entropy(const DensityOperator& rho, const Tolerances& tol) {
    const auto eig = spectral_decomposition(rho, tol);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const double p = eig.eigenvalues(i);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

CqEnsemble::CqEnsemble(std::vector<double> p, std::vector<DensityOperator> s,
                       const Tolerances& tol)
    : pmf(std::move(p)), states(std::move(s)) {
    if (pmf.size() != states.size() || pmf.empty()) {
        throw UsageError("CqEnsemble: pmf/state count mismatch");
    }
    double total = 0.0;
    for (double v : pmf) {
        if (v < -tol.pmf) throw UsageError("CqEnsemble: negative probability");
        total += v;
    }
    if (std::abs(total - 1.0) > tol.pmf) {
        throw UsageError("CqEnsemble: pmf sums to " + std::to_string(total));
    }
    const Eigen::Index d = states.front().dim();
    for (const auto& st : states) {
        if (st.dim() != d) throw UsageError("CqEnsemble: mixed dimensions");
    }
}

DensityOperator CqEnsemble::average(const Tolerances& tol) const {
    CMatrix avg = CMatrix::Zero(states.front().dim(), states.front().dim());
    for (std::size_t i = 0; i < pmf.size(); ++i) avg += pmf[i] * states[i].matrix();
    return DensityOperator(avg, tol);
}

double holevo_information(const CqEnsemble& ensemble, const Tolerances& tol) {
    double chi = von_neumann_entropy(ensemble.average(tol), tol);
    for (std::size_t i = 0; i < ensemble.pmf.size(); ++i) {
        if (ensemble.pmf[i] > 0.0) {
            chi -= ensemble.pmf[i] * von_neumann_entropy(ensemble.states[i], tol);
        }
    }
    return chi;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix tensor_product(const std::vector<CMatrix>& ops) {
    if (ops.empty()) throw UsageError("tensor_product: empty operator list");
    CMatrix out = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) out = kron(out, ops[i]);
    return out;
}

CMatrix tensor_power_states(const std::vector<CMatrix>& states,
                            const std::vector<std::uint32_t>& labels) {
    if (labels.empty()) throw UsageError("tensor_power_states: empty label sequence");
    std::vector<CMatrix> picked;
    picked.reserve(labels.size());
    for (auto l : labels) {
        if (l >= states.size()) throw UsageError("tensor_power_states: label out of range");
        picked.push_back(states[l]);
    }
    return tensor_product(picked);
}

namespace {

// Product vector ⊗_t columns[labels[t]] built front-to-back.
CVector product_vector(const std::vector<CMatrix>& bases,
                       const std::vector<std::uint32_t>& which_basis,
                       const std::vector<std::uint32_t>& which_column) {
    CVector out = CVector::Ones(1);
    for (std::size_t t = 0; t < which_basis.size(); ++t) {
        const CVector col = bases[which_basis[t]].col(which_column[t]);
        CVector next(out.size() * col.size());
        for (Eigen::Index i = 0; i < out.size(); ++i) {
            next.segment(i * col.size(), col.size()) = out(i) * col;
        }
        out.swap(next);
    }
    return out;
}

std::uint64_t checked_dim_power(Eigen::Index dim, std::size_t n, const Budgets& budgets) {
    try {
        return checked_pow(static_cast<std::uint64_t>(dim), n, budgets.dim_budget);
    } catch (const ResourceError&) {
        throw ResourceError("dim^n exceeds dimension budget " +
                            std::to_string(budgets.dim_budget));
    }
}

}  // namespace

PsdOperator typical_projector(const DensityOperator& rho, std::size_t n, double delta,
                              const Budgets& budgets, const Tolerances& tol) {
    if (n == 0) throw UsageError("typical_projector: n must be positive");
    const std::uint64_t big_dim = checked_dim_power(rho.dim(), n, budgets);
    const auto eig = spectral_decomposition(rho, tol);
    std::vector<double> pmf(eig.eigenvalues.data(),
                            eig.eigenvalues.data() + eig.eigenvalues.size());
    // snap numerically-zero spectral weights to exact zero so the
    // zero-probability exclusion of strong typicality applies to them
    for (auto& p : pmf) {
        if (p < kSpectralZero) p = 0.0;
    }
    const auto sequences = enumerate_typical(pmf, n, delta, budgets.dim_budget);

    CMatrix proj = CMatrix::Zero(static_cast<Eigen::Index>(big_dim),
                                 static_cast<Eigen::Index>(big_dim));
    const std::vector<CMatrix> bases = {eig.eigenvectors};
    const std::vector<std::uint32_t> basis_choice(n, 0);
    for (const auto& seq : sequences) {
        const CVector v = product_vector(bases, basis_choice, seq);
        proj += v * v.adjoint();
    }
    return PsdOperator::trusted(std::move(proj));
}

PsdOperator conditional_typical_projector(const std::vector<DensityOperator>& states,
                                          const std::vector<double>& p_label,
                                          const std::vector<std::uint32_t>& v_seq, double delta,
                                          const Budgets& budgets, const Tolerances& tol) {
    if (states.empty() || states.size() != p_label.size()) {
        throw UsageError("conditional_typical_projector: label set mismatch");
    }
    if (v_seq.empty()) throw UsageError("conditional_typical_projector: empty sequence");
    const Eigen::Index d = states.front().dim();
    const std::size_t n = v_seq.size();
    const std::uint64_t big_dim = checked_dim_power(d, n, budgets);
    const Eigen::Index big = static_cast<Eigen::Index>(big_dim);

    if (!is_typical(v_seq, p_label, delta)) {
        return PsdOperator::trusted(CMatrix::Zero(big, big));
    }

    CMatrix proj = CMatrix::Zero(big, big);
    for (const auto& v : conditional_typical_vectors(states, p_label, v_seq, delta, budgets, tol)) {
        proj += v * v.adjoint();
    }
    return PsdOperator::trusted(std::move(proj));
}

std::vector<CVector> conditional_typical_vectors(const std::vector<DensityOperator>& states,
                                                 const std::vector<double>& p_label,
                                                 const std::vector<std::uint32_t>& v_seq,
                                                 double delta, const Budgets& budgets,
                                                 const Tolerances& tol) {
    if (states.empty() || states.size() != p_label.size()) {
        throw UsageError("conditional_typical_vectors: label set mismatch");
    }
    if (v_seq.empty()) throw UsageError("conditional_typical_vectors: empty sequence");
    const Eigen::Index d = states.front().dim();
    const std::size_t n = v_seq.size();
    checked_dim_power(d, n, budgets);

    if (!is_typical(v_seq, p_label, delta)) return {};

    // Joint pmf p(v, y) = p_V(v) * r(y|v) with r from each state's spectrum.
    std::vector<CMatrix> bases(states.size());
    std::vector<double> joint(states.size() * static_cast<std::size_t>(d), 0.0);
    for (std::size_t v = 0; v < states.size(); ++v) {
        const auto eig = spectral_decomposition(states[v], tol);
        bases[v] = eig.eigenvectors;
        for (Eigen::Index y = 0; y < d; ++y) {
            double w = p_label[v] * eig.eigenvalues(y);
            if (w < kSpectralZero) w = 0.0;  // see typical_projector
            joint[v * static_cast<std::size_t>(d) + static_cast<std::size_t>(y)] = w;
        }
    }

    const auto sequences = enumerate_conditionally_typical(
        joint, static_cast<std::size_t>(d), v_seq, delta, budgets.dim_budget);
    std::vector<CVector> out;
    out.reserve(sequences.size());
    for (const auto& y_seq : sequences) out.push_back(product_vector(bases, v_seq, y_seq));
    return out;
}

PsdOperator psd_inverse_sqrt(const PsdOperator& a, double support_tol, const Tolerances& tol) {
    const auto eig = ordered_eigs(a.matrix());
    CMatrix out = CMatrix::Zero(a.dim(), a.dim());
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda > support_tol) {
            out += (1.0 / std::sqrt(lambda)) * eig.eigenvectors.col(i) *
                   eig.eigenvectors.col(i).adjoint();
        }
    }
    return PsdOperator(out, tol);
}

void validate_povm(const Povm& povm, const Tolerances& tol) {
    if (povm.elements.empty()) throw UsageError("validate_povm: empty POVM");
    if (povm.elements.size() != povm.labels.size()) {
        throw UsageError("validate_povm: label count mismatch");
    }
    const Eigen::Index d = povm.elements.front().dim();
    CMatrix total = CMatrix::Zero(d, d);
    for (const auto& el : povm.elements) {
        if (el.dim() != d) throw UsageError("validate_povm: mixed dimensions");
        total += el.matrix();
    }
    const double dev = (total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > tol.povm) {
        throw ValidationError("POVM does not resolve identity (deviation " + std::to_string(dev) +
                              ")");
    }
}

Povm square_root_povm(const std::vector<PsdOperator>& gammas,
                      const std::vector<std::int64_t>& labels, const Tolerances& tol,
                      bool require_upper_bound) {
    if (gammas.empty()) throw UsageError("square_root_povm: no elements");
    if (gammas.size() != labels.size()) throw UsageError("square_root_povm: label mismatch");
    const Eigen::Index d = gammas.front().dim();
    CMatrix total = CMatrix::Zero(d, d);
    for (const auto& g : gammas) {
        if (g.dim() != d) throw UsageError("square_root_povm: mixed dimensions");
        if (require_upper_bound) {
            const auto eig = ordered_eigs(g.matrix());
            if (eig.eigenvalues.maxCoeff() > 1.0 + tol.psd) {
                throw ValidationError("square_root_povm: gamma exceeds identity");
            }
        }
        total += g.matrix();
    }

    const PsdOperator inv_sqrt = psd_inverse_sqrt(PsdOperator::trusted(total), 1e-12, tol);
    Povm out;
    CMatrix sum = CMatrix::Zero(d, d);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        CMatrix el = inv_sqrt.matrix() * gammas[i].matrix() * inv_sqrt.matrix();
        el = 0.5 * (el + el.adjoint());
        sum += el;
        // sandwiches of PSD operators are PSD by construction
        out.elements.push_back(PsdOperator::trusted(std::move(el)));
        out.labels.push_back(labels[i]);
    }
    // the failure element is the only one whose positivity needs a check
    out.elements.emplace_back(CMatrix(CMatrix::Identity(d, d) - sum), tol);
    out.labels.push_back(-1);
    validate_povm(out, tol);
    return out;
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
    const auto eig = ordered_eigs(a - b);
    return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

bool is_pure(const DensityOperator& rho, double tol) {
    return std::abs((rho.matrix() * rho.matrix()).trace().real() - 1.0) <= tol;
}

DensityOperator pure_qubit(double angle) {
    CVector psi(2);
    psi << std::cos(angle), std::sin(angle);
    return DensityOperator(psi * psi.adjoint());
}

DensityOperator random_density(Eigen::Index dim, CounterRng& rng) {
    CMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            g(i, j) = Cplx(rng.next_normal(), rng.next_normal());
        }
    }
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityOperator(m);
}

}  // namespace sumcq
