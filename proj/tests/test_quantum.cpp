#include <doctest.h>

#include <cmath>

#include "sumcq/quantum.hpp"

using namespace sumcq;

namespace {

CMatrix diag2(double a, double b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("operator validation") {
    CHECK_NOTHROW(DensityOperator(diag2(0.5, 0.5)));
    CHECK_THROWS_AS(DensityOperator(diag2(0.6, 0.6)), ValidationError);  // trace 1.2
    CHECK_THROWS_AS(DensityOperator(diag2(1.5, -0.5)), ValidationError);  // negative eigenvalue
    CMatrix nh = CMatrix::Zero(2, 2);
    nh(0, 1) = 1.0;
    CHECK_THROWS_AS(PsdOperator{nh}, ValidationError);  // not Hermitian
}

TEST_CASE("spectral decomposition") {
    const auto eig = spectral_decomposition(DensityOperator(diag2(0.3, 0.7)));
    CHECK(eig.eigenvalues(0) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(eig.eigenvalues(1) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(std::abs(eig.eigenvectors(1, 0)) == doctest::Approx(1.0));  // |1> first

    const auto plus = pure_qubit(std::numbers::pi / 4);  // |+>
    const auto peig = spectral_decomposition(plus);
    CHECK(peig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(peig.eigenvalues(1) == doctest::Approx(0.0));

    // round-trip oracle on a random 3x3 density
    CounterRng rng(99);
    const auto rho = random_density(3, rng);
    const auto e = spectral_decomposition(rho);
    CMatrix rebuilt = CMatrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
        rebuilt += e.eigenvalues(i) * e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint();
    }
    CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);

    // phase canonicalization: first nonzero component real positive
    for (int i = 0; i < 3; ++i) {
        for (int r = 0; r < 3; ++r) {
            const Cplx v = e.eigenvectors(r, i);
            if (std::abs(v) > 1e-12) {
                CHECK(v.real() > 0.0);
                CHECK(std::abs(v.imag()) < 1e-12);
                break;
            }
        }
    }
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(pure_qubit(0.4)) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(von_neumann_entropy(DensityOperator(diag2(0.5, 0.5))) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // h_b(0.1) closed form
    CHECK(von_neumann_entropy(DensityOperator(diag2(0.9, 0.1))) ==
          doctest::Approx(0.4689955935892812).epsilon(1e-10));

    // additivity on a random tensor pair
    CounterRng rng(5);
    const auto a = random_density(2, rng);
    const auto b = random_density(3, rng);
    const DensityOperator ab(kron(a.matrix(), b.matrix()));
    CHECK(von_neumann_entropy(ab) ==
          doctest::Approx(von_neumann_entropy(a) + von_neumann_entropy(b)).epsilon(1e-9));
}

TEST_CASE("Holevo information") {
    const auto zero = pure_qubit(0.0);
    const auto one = pure_qubit(std::numbers::pi / 2);
    const auto plus = pure_qubit(std::numbers::pi / 4);

    CHECK(holevo_information(CqEnsemble({0.5, 0.5}, {zero, zero})) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(holevo_information(CqEnsemble({0.5, 0.5}, {zero, one})) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // average of |0><0| and |+><+| has eigenvalues (1 +- sqrt(1/2)) / 2
    CHECK(holevo_information(CqEnsemble({0.5, 0.5}, {zero, plus})) ==
          doctest::Approx(0.6008760366928562).epsilon(1e-9));

    // chi bounded by the average-state entropy
    CounterRng rng(17);
    for (int t = 0; t < 5; ++t) {
        const CqEnsemble e({0.3, 0.7}, {random_density(2, rng), random_density(2, rng)});
        const double chi = holevo_information(e);
        CHECK(chi >= -1e-12);
        CHECK(chi <= von_neumann_entropy(e.average()) + 1e-12);
    }
}

TEST_CASE("tensor products") {
    const CMatrix t = tensor_product({diag2(1, 0), diag2(0, 1)});
    CHECK(t.rows() == 4);
    CHECK(t(1, 1).real() == doctest::Approx(1.0));
    CHECK(t.trace().real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(tensor_product({}), UsageError);

    CounterRng rng(3);
    const auto a = random_density(2, rng);
    const auto b = random_density(2, rng);
    CHECK(kron(a.matrix(), b.matrix()).trace().real() ==
          doctest::Approx(a.matrix().trace().real() * b.matrix().trace().real()).epsilon(1e-12));

    // label selection
    const CMatrix sel = tensor_power_states({diag2(1, 0), diag2(0, 1)}, {1, 0});
    CHECK(sel(2, 2).real() == doctest::Approx(1.0));
}

TEST_CASE("typical projectors") {
    // deterministic spectrum: rank-1 projector onto |00...0>
    const auto proj = typical_projector(DensityOperator(diag2(1, 0)), 3, 0.3);
    CHECK(proj.matrix().trace().real() == doctest::Approx(1.0));
    CHECK(proj.matrix()(0, 0).real() == doctest::Approx(1.0));

    // maximally mixed, generous delta: identity
    const auto full = typical_projector(DensityOperator(diag2(0.5, 0.5)), 2, 0.5);
    CHECK((full.matrix() - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

    // projector commutes with rho^{tensor n}
    const DensityOperator rho(diag2(0.8, 0.2));
    const auto pi = typical_projector(rho, 3, 0.2);
    const CMatrix rho3 = tensor_product({rho.matrix(), rho.matrix(), rho.matrix()});
    CHECK((pi.matrix() * rho3 - rho3 * pi.matrix()).cwiseAbs().maxCoeff() < 1e-9);

    // conditional mode gated on the conditioning sequence
    const std::vector<DensityOperator> states = {DensityOperator(diag2(0.9, 0.1)),
                                                 DensityOperator(diag2(0.2, 0.8))};
    const std::vector<double> p_v = {1.0, 0.0};
    const auto zero_proj = conditional_typical_projector(states, p_v, {0, 1, 0}, 0.3);
    CHECK(zero_proj.matrix().cwiseAbs().maxCoeff() == 0.0);  // v contains a banned symbol
    const auto live = conditional_typical_projector(states, p_v, {0, 0, 0}, 0.3);
    CHECK(live.matrix().trace().real() > 0.0);
}

TEST_CASE("generalized inverse square root") {
    const PsdOperator id(CMatrix(CMatrix::Identity(2, 2)));
    CHECK((psd_inverse_sqrt(id).matrix() - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-12);

    const auto half = psd_inverse_sqrt(PsdOperator(diag2(4, 0)));
    CHECK(half.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(half.matrix()(1, 1).real() == doctest::Approx(0.0));

    // A^{-1/2} A A^{-1/2} = support projector
    CounterRng rng(11);
    const auto rho = random_density(3, rng);
    const PsdOperator a(CMatrix(3.0 * rho.matrix()));
    const auto inv = psd_inverse_sqrt(a);
    const CMatrix support = inv.matrix() * a.matrix() * inv.matrix();
    CHECK((support * support - support).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("square-root measurement") {
    // orthogonal projectors pass through unchanged
    std::vector<PsdOperator> gammas;
    gammas.emplace_back(diag2(1, 0));
    gammas.emplace_back(diag2(0, 1));
    const auto povm = square_root_povm(gammas, {0, 1});
    REQUIRE(povm.elements.size() == 3);
    CHECK((povm.elements[0].matrix() - diag2(1, 0)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(povm.labels[2] == -1);
    CHECK(povm.elements[2].matrix().cwiseAbs().maxCoeff() < 1e-9);

    // single gamma = I/2: normalization stretches it to the identity
    const auto single = square_root_povm({PsdOperator(diag2(0.5, 0.5))}, {0});
    CHECK((single.elements[0].matrix() - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-9);

    // completeness for arbitrary inputs
    CounterRng rng(23);
    std::vector<PsdOperator> random_gammas;
    std::vector<std::int64_t> labels;
    for (int i = 0; i < 3; ++i) {
        random_gammas.emplace_back(CMatrix(0.3 * random_density(2, rng).matrix()));
        labels.push_back(i);
    }
    const auto out = square_root_povm(random_gammas, labels);
    CMatrix total = CMatrix::Zero(2, 2);
    for (const auto& el : out.elements) total += el.matrix();
    CHECK((total - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-9);

    // gamma beyond the identity is rejected
    CHECK_THROWS_AS(square_root_povm({PsdOperator(diag2(1.5, 0))}, {0}), ValidationError);
}

TEST_CASE("trace distance and purity") {
    CHECK(trace_distance(diag2(1, 0), diag2(0, 1)) == doctest::Approx(1.0));
    CHECK(trace_distance(diag2(0.5, 0.5), diag2(0.5, 0.5)) == doctest::Approx(0.0));
    CHECK(is_pure(pure_qubit(1.2)));
    CHECK_FALSE(is_pure(DensityOperator(diag2(0.5, 0.5))));
}
