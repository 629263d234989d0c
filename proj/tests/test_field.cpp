#include <doctest.h>

#include "sumcq/field.hpp"

using namespace sumcq;

TEST_CASE("prime check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(FieldScalar(0, 4), UsageError);
}

TEST_CASE("scalar arithmetic") {
    CHECK(FieldScalar(2, 3).add(FieldScalar(2, 3)).value == 1);
    CHECK(FieldScalar(2, 5).add(FieldScalar(0, 5)).value == 2);
    // brute force over F_5: 3*2 = 6 = 1 mod 5, so inv(3) = 2
    CHECK(FieldScalar(3, 5).inv().value == 2);
    CHECK_THROWS_AS(FieldScalar(0, 5).inv(), std::domain_error);
    CHECK_THROWS_AS(FieldScalar(1, 3).add(FieldScalar(1, 5)), UsageError);

    // a * inv(a) = 1 for all nonzero a, q in {2, 3, 5, 7}
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t a = 1; a < q; ++a) {
            CHECK(FieldScalar(a, q).mul(FieldScalar(a, q).inv()).value == 1);
        }
    }
    // a + (-a) = 0 and associativity, exhaustive for q in {2, 3, 5}
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(FieldScalar(a, q).add(FieldScalar(a, q).neg()).value == 0);
            for (std::uint32_t b = 0; b < q; ++b) {
                for (std::uint32_t c = 0; c < q; ++c) {
                    const FieldScalar fa(a, q), fb(b, q), fc(c, q);
                    CHECK(fa.add(fb).add(fc).value == fa.add(fb.add(fc)).value);
                }
            }
        }
    }
}

TEST_CASE("matrix product") {
    // hand mod-3 expansion: (1,2) x [[1,0,2],[2,1,1]] = (5,2,4) = (2,2,1)
    const FieldMatrix m(2, 3, 3, {1, 0, 2, 2, 1, 1});
    CHECK(vec_mat_mul({1, 2}, m) == std::vector<std::uint32_t>{2, 2, 1});
    CHECK(vec_mat_mul({0, 0}, m) == std::vector<std::uint32_t>{0, 0, 0});

    const FieldMatrix id = FieldMatrix::identity(3, 3);
    CHECK(vec_mat_mul({1, 2, 0}, id) == std::vector<std::uint32_t>{1, 2, 0});

    CHECK_THROWS_AS(vec_mat_mul({1, 2, 0}, m), UsageError);

    // linearity of the codeword map: (a + a') g = a g + a' g, exhaustive F_3
    for (std::uint32_t a = 0; a < 3; ++a) {
        for (std::uint32_t b = 0; b < 3; ++b) {
            const auto lhs = vec_mat_mul({(a + b) % 3, 0}, m);
            const auto rhs = vec_add(vec_mat_mul({a, 0}, m), vec_mat_mul({b, 0}, m), 3);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("random matrices are deterministic and uniform") {
    const auto m1 = uniform_random_matrix(4, 5, 3, 42);
    const auto m2 = uniform_random_matrix(4, 5, 3, 42);
    CHECK(m1 == m2);
    CHECK(m1.rows() == 4);
    CHECK(m1.cols() == 5);
    CHECK(uniform_random_matrix(4, 5, 3, 43) != m1);

    // law of large numbers: 1e5 entries, per-symbol frequency within 0.01 of 1/3
    const auto big = uniform_random_matrix(1000, 100, 3, 7);
    std::size_t counts[3] = {0, 0, 0};
    for (auto v : big.data()) ++counts[v];
    for (std::size_t s = 0; s < 3; ++s) {
        CHECK(std::abs(static_cast<double>(counts[s]) / 1e5 - 1.0 / 3.0) < 0.01);
    }
}

TEST_CASE("linear solving") {
    // invertible 2x2 over F_5: [[1,2],[3,4]] x = (0,1) -> x = (1, 2)? verify by
    // substitution: 1+4=5=0, 3+8=11=1. yes.
    const FieldMatrix m(2, 2, 5, {1, 2, 3, 4});
    const auto sol = solve_linear(m, {0, 1});
    REQUIRE(sol.has_value());
    CHECK(sol->nullspace_basis.empty());
    CHECK(sol->particular == std::vector<std::uint32_t>{1, 2});
    CHECK(field_rank(m) == 2);

    // rank-deficient: second row = 2 * first over F_5 (2*3 = 6 = 1)
    const FieldMatrix r(2, 3, 5, {1, 2, 3, 2, 4, 1});
    CHECK(field_rank(r) == 1);
    const auto hom = solve_linear(r, {0, 0});
    REQUIRE(hom.has_value());
    CHECK(hom->nullspace_basis.size() == 2);
    // every homogeneous solution maps to zero
    for (const auto& basis : hom->nullspace_basis) {
        CHECK(mat_vec_mul(r, basis) == std::vector<std::uint32_t>{0, 0});
    }

    // inconsistent system: duplicate rows, different rhs
    const FieldMatrix dup(2, 2, 3, {1, 1, 1, 1});
    CHECK_FALSE(solve_linear(dup, {0, 1}).has_value());
}

TEST_CASE("tuple ranking is lexicographic") {
    CHECK(rank_to_tuple(0, 3, 3) == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(rank_to_tuple(5, 3, 3) == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(tuple_to_rank({0, 1, 2}, 3) == 5);
    std::vector<std::uint32_t> prev;
    for (std::uint64_t r = 0; r < 27; ++r) {
        auto t = rank_to_tuple(r, 3, 3);
        CHECK(tuple_to_rank(t, 3) == r);
        if (r > 0) CHECK(prev < t);
        prev = std::move(t);
    }
    CHECK_THROWS_AS(rank_to_tuple(27, 3, 3), UsageError);
}

TEST_CASE("budget-capped powers") {
    CHECK(checked_pow(2, 10, 1024) == 1024);
    CHECK_THROWS_AS(checked_pow(2, 11, 1024), ResourceError);
    CHECK(checked_pow(3, 0, 1) == 1);
}
