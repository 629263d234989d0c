#include <doctest.h>

#include <cmath>

#include "sumcq/channels.hpp"
#include "sumcq/rates.hpp"

using namespace sumcq;

namespace {

DensityOperator diag_state(double a) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = 1.0 - a;
    return DensityOperator(m);
}

}  // namespace

TEST_CASE("channel construction validates shapes") {
    CHECK_THROWS_AS(CqMac(2, 2, {diag_state(1), diag_state(0)}), UsageError);
    const CqMac mac(2, 2, {diag_state(1), diag_state(0), diag_state(0), diag_state(0)});
    CHECK(mac.dim() == 2);
    CHECK_THROWS_AS(mac.state(2, 0), UsageError);
}

TEST_CASE("source pair marginals") {
    const SourcePair s(2, 2, {0.4, 0.1, 0.1, 0.4});
    CHECK(s.marginal1()[0] == doctest::Approx(0.5));
    CHECK(s.marginal2()[1] == doctest::Approx(0.5));
    CHECK_THROWS_AS(SourcePair(2, 2, {0.5, 0.5, 0.5, 0.5}), UsageError);
}

TEST_CASE("induced sum ensemble: identity embedding") {
    // V_j = X_j over F_2, point-mass conditionals
    const CqMac mac(2, 2, {diag_state(0.9), diag_state(0.5), diag_state(0.5), diag_state(0.1)});
    const std::vector<double> p1 = {0.5, 0.0, 0.0, 0.5};  // p(v, x) = 1/2 on v = x
    const auto ens = induced_sum_ensemble(mac, 2, p1, p1);

    CHECK(ens.p_v1[0] == doctest::Approx(0.5));
    // rho_{v1 v2} = rho_{x1 x2} exactly
    for (std::uint32_t v1 = 0; v1 < 2; ++v1) {
        for (std::uint32_t v2 = 0; v2 < 2; ++v2) {
            CHECK(trace_distance(ens.rho_pair[v1 * 2 + v2].matrix(),
                                 mac.state(v1, v2).matrix()) < 1e-12);
        }
    }
    // p_U = uniform convolution of uniforms
    CHECK(ens.p_u[0] == doctest::Approx(0.5));
    CHECK(ens.p_u[1] == doctest::Approx(0.5));

    // probability conservation and order-independent average state
    double total = 0;
    for (auto p : ens.p_u) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CMatrix avg_u = CMatrix::Zero(2, 2);
    for (std::uint32_t u = 0; u < 2; ++u) avg_u += ens.p_u[u] * ens.rho_u[u].matrix();
    CMatrix avg_v = CMatrix::Zero(2, 2);
    for (std::uint32_t v1 = 0; v1 < 2; ++v1) {
        for (std::uint32_t v2 = 0; v2 < 2; ++v2) {
            avg_v += ens.p_v1[v1] * ens.p_v2[v2] * ens.rho_pair[v1 * 2 + v2].matrix();
        }
    }
    CHECK((avg_u - avg_v).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("induced sum ensemble: ternary embedding of the OR channel") {
    const double q_noise = 0.2, theta = 0.3;
    const auto mac = example1_channel(q_noise, pure_qubit(0.0), pure_qubit(std::numbers::pi / 2));
    // V_j in {0,1} inside F_3, V = X, Bernoulli(theta)
    const std::vector<double> joint = {1 - theta, 0, 0, theta, 0, 0};  // 3 x 2 row-major
    const auto ens = induced_sum_ensemble(mac, 3, joint, joint);

    CHECK(ens.p_u[0] == doctest::Approx((1 - theta) * (1 - theta)));
    CHECK(ens.p_u[1] == doctest::Approx(2 * theta * (1 - theta)));
    CHECK(ens.p_u[2] == doctest::Approx(theta * theta));

    // rho_0 = rho(q), rho_1 = rho_2 = rho(1-q) for orthogonal pure states
    CHECK(ens.rho_u[0].matrix()(0, 0).real() == doctest::Approx(1 - q_noise));
    CHECK(ens.rho_u[1].matrix()(0, 0).real() == doctest::Approx(q_noise));
    CHECK(ens.rho_u[2].matrix()(0, 0).real() == doctest::Approx(q_noise));
}

TEST_CASE("additive reduction") {
    // built from a PTP: sigma_{x1+x2} round-trips
    const std::vector<DensityOperator> sigma = {diag_state(0.9), diag_state(0.3)};
    const CqMac additive(2, 2, {sigma[0], sigma[1], sigma[1], sigma[0]});
    const auto ptp = additive_reduction(additive, 2);
    REQUIRE(ptp.has_value());
    CHECK(trace_distance(ptp->state(0).matrix(), sigma[0].matrix()) < 1e-12);
    CHECK(trace_distance(ptp->state(1).matrix(), sigma[1].matrix()) < 1e-12);

    // the OR channel is not additive away from q = 1/2 (rho_00 != rho_11)
    const auto mac = example1_channel(0.2, diag_state(1.0), diag_state(0.0));
    CHECK_FALSE(additive_reduction(mac, 2).has_value());

    // constant channel at q = 1/2 is trivially additive
    const auto flat = example1_channel(0.5, diag_state(1.0), diag_state(0.0));
    CHECK(additive_reduction(flat, 2).has_value());
}

TEST_CASE("additive reduction agrees with point-mass embeddings") {
    const std::vector<DensityOperator> sigma = {diag_state(0.9), diag_state(0.3)};
    const CqMac additive(2, 2, {sigma[0], sigma[1], sigma[1], sigma[0]});
    const auto ptp = additive_reduction(additive, 2);
    REQUIRE(ptp.has_value());

    const std::vector<double> p1 = {0.7, 0.0, 0.0, 0.3};
    const std::vector<double> p2 = {0.4, 0.0, 0.0, 0.6};
    const auto ens = induced_sum_ensemble(additive, 2, p1, p2);
    const double chi_direct = holevo_information(ens.sum_ensemble());
    const double chi_ptp = holevo_information(
        CqEnsemble(ens.p_u, {ptp->state(0), ptp->state(1)}));
    CHECK(chi_direct == doctest::Approx(chi_ptp).epsilon(1e-10));
}

TEST_CASE("noisy-OR channel table") {
    const auto s0 = diag_state(1.0), s1 = diag_state(0.0);
    const auto clean = example1_channel(0.0, s0, s1);
    CHECK(trace_distance(clean.state(0, 0).matrix(), s0.matrix()) < 1e-12);
    CHECK(trace_distance(clean.state(1, 1).matrix(), s1.matrix()) < 1e-12);

    const auto noisy = example1_channel(0.3, s0, s1);
    CHECK(noisy.state(0, 0).matrix()(0, 0).real() == doctest::Approx(0.7));
    // output depends only on x1 OR x2
    CHECK(trace_distance(noisy.state(0, 1).matrix(), noisy.state(1, 0).matrix()) < 1e-12);
    CHECK(trace_distance(noisy.state(0, 1).matrix(), noisy.state(1, 1).matrix()) < 1e-12);
}
