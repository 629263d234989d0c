#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "sumcq/errors.hpp"
#include "sumcq/rng.hpp"
#include "sumcq/typicality.hpp"

namespace sumcq {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Validation tolerances for operator invariants.
struct Tolerances {
    double herm = 1e-9;
    double psd = 1e-9;
    double trace = 1e-9;
    double povm = 1e-9;
    double pmf = 1e-9;
};

// Hermitian positive semidefinite operator (trace unconstrained). POVM
// elements, projectors and the gamma/Gamma intermediates all live here.
class PsdOperator {
public:
    explicit PsdOperator(CMatrix m, const Tolerances& tol = {});

    // Wraps a matrix that is PSD by construction (sums of outer products,
    // sandwiches of PSD operators, ...) without the validating eigensolve.
    static PsdOperator trusted(CMatrix m);

    Eigen::Index dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }

protected:
    struct Trusted {};
    PsdOperator(CMatrix m, Trusted) : m_(std::move(m)) {}

    CMatrix m_;
};

// Unit-trace density operator.
class DensityOperator : public PsdOperator {
public:
    explicit DensityOperator(CMatrix m, const Tolerances& tol = {});
};

// Eigenvalues descending, clamped to [0,1]; eigenvector columns orthonormal,
// phase-canonicalized so the first non-negligible component is real positive.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    CMatrix eigenvectors;
};

SpectralDecomposition spectral_decomposition(const DensityOperator& rho,
                                             const Tolerances& tol = {});

// Hermitian eigendecomposition with the same deterministic ordering but no
// density-operator clamping; used for PSD intermediates like T = sum gamma.
SpectralDecomposition hermitian_eigs(const CMatrix& m);

double von_neumann_entropy(const DensityOperator& rho, const Tolerances& tol = {});

// Finite CQ ensemble {p_i, rho_i}.
struct CqEnsemble {
    std::vector<double> pmf;
    std::vector<DensityOperator> states;

    CqEnsemble(std::vector<double> p, std::vector<DensityOperator> s, const Tolerances& tol = {});

    DensityOperator average(const Tolerances& tol = {}) const;
};

double holevo_information(const CqEnsemble& ensemble, const Tolerances& tol = {});

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix tensor_product(const std::vector<CMatrix>& ops);
// Tensor product of per-letter states selected by a label sequence.
CMatrix tensor_power_states(const std::vector<CMatrix>& states,
                            const std::vector<std::uint32_t>& labels);

// Projector onto eigen-sequences of rho^{tensor n} whose empirical
// eigen-label frequency is within delta of rho's eigen-distribution.
PsdOperator typical_projector(const DensityOperator& rho, std::size_t n, double delta,
                              const Budgets& budgets = {}, const Tolerances& tol = {});

// Conditional typical projector for a label sequence v^n over the ensemble
// {p_label, states}: span of eigen-sequences y^n with (v^n, y^n) jointly
// typical for p_V(v) r(y|v), where r(y|v) are the eigenvalues of states[v].
// Returns the zero operator when v^n itself is not typical for p_label.
PsdOperator conditional_typical_projector(const std::vector<DensityOperator>& states,
                                          const std::vector<double>& p_label,
                                          const std::vector<std::uint32_t>& v_seq, double delta,
                                          const Budgets& budgets = {}, const Tolerances& tol = {});

// The orthonormal product vectors spanning the conditional typical projector
// (the projector equals the sum of their outer products). Exposing the span
// lets decoder builders sandwich rank-by-rank instead of densely.
std::vector<CVector> conditional_typical_vectors(const std::vector<DensityOperator>& states,
                                                 const std::vector<double>& p_label,
                                                 const std::vector<std::uint32_t>& v_seq,
                                                 double delta, const Budgets& budgets = {},
                                                 const Tolerances& tol = {});

// Generalized inverse square root: eigenvalues above `support_tol` map to
// lambda^{-1/2}, the kernel maps to zero.
PsdOperator psd_inverse_sqrt(const PsdOperator& a, double support_tol = 1e-12,
                             const Tolerances& tol = {});

struct Povm {
    std::vector<PsdOperator> elements;
    std::vector<std::int64_t> labels;  // -1 reserved for the failure outcome
};

void validate_povm(const Povm& povm, const Tolerances& tol = {});

// Square-root (pretty-good) measurement: Lambda_i = T^{-1/2} gamma_i T^{-1/2}
// with T = sum gamma_j, plus the failure element I - sum Lambda_i.
// `require_upper_bound` enforces gamma <= I per element; callers passing
// pre-aggregated sums of valid gammas (which may exceed I) disable it.
Povm square_root_povm(const std::vector<PsdOperator>& gammas,
                      const std::vector<std::int64_t>& labels, const Tolerances& tol = {},
                      bool require_upper_bound = true);

double trace_distance(const CMatrix& a, const CMatrix& b);

bool is_pure(const DensityOperator& rho, double tol = 1e-9);

// Qubit pure state cos(angle)|0> + sin(angle)|1> as a density operator.
DensityOperator pure_qubit(double angle);

// Random density operator from a Ginibre draw (test/CLI utility).
DensityOperator random_density(Eigen::Index dim, CounterRng& rng);

}  // namespace sumcq
