#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcq/errors.hpp"
#include "sumcq/rng.hpp"

namespace sumcq {

bool is_prime(std::uint64_t n);

// Single element of a prime field F_q. Arithmetic is exact integer mod q;
// mixing moduli is a usage error.
struct FieldScalar {
    std::uint32_t value;
    std::uint32_t modulus;

    FieldScalar(std::uint32_t v, std::uint32_t q);

    FieldScalar add(FieldScalar other) const;
    FieldScalar sub(FieldScalar other) const;
    FieldScalar mul(FieldScalar other) const;
    FieldScalar neg() const;
    FieldScalar inv() const;  // domain error on zero

    bool operator==(const FieldScalar&) const = default;
};

// Dense row-major matrix over F_q. Entries are stored as raw residues with a
// single shared modulus.
class FieldMatrix {
public:
    FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t q);
    FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                std::vector<std::uint32_t> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return q_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const std::vector<std::uint32_t>& data() const { return data_; }

    std::vector<std::uint32_t> row(std::size_t r) const;

    FieldMatrix operator+(const FieldMatrix& other) const;
    FieldMatrix operator*(const FieldMatrix& other) const;
    bool operator==(const FieldMatrix&) const = default;

    static FieldMatrix identity(std::size_t n, std::uint32_t q);
    static FieldMatrix row_vector(const std::vector<std::uint32_t>& v, std::uint32_t q);

private:
    std::size_t rows_, cols_;
    std::uint32_t q_;
    std::vector<std::uint32_t> data_;
};

// v * M for a length-k vector and k x n matrix, exact mod q.
std::vector<std::uint32_t> vec_mat_mul(const std::vector<std::uint32_t>& v, const FieldMatrix& m);

// M * v (v as column), returning a length-rows vector.
std::vector<std::uint32_t> mat_vec_mul(const FieldMatrix& m, const std::vector<std::uint32_t>& v);

std::vector<std::uint32_t> vec_add(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t q);

// IID uniform entries over F_q, fully determined by (seed, q, shape) under the
// splitmix64-ctr generator.
FieldMatrix uniform_random_matrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                                  std::uint64_t seed);
FieldMatrix uniform_random_matrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                                  CounterRng& rng);

// Solution set of M x = rhs over F_q: a particular solution plus a nullspace
// basis, or nullopt when inconsistent. Columns of the basis are free-variable
// directions; the full solution set is {particular + span(basis)}.
struct LinearSolution {
    std::vector<std::uint32_t> particular;
    std::vector<std::vector<std::uint32_t>> nullspace_basis;
};
std::optional<LinearSolution> solve_linear(const FieldMatrix& m,
                                           const std::vector<std::uint32_t>& rhs);

std::size_t field_rank(const FieldMatrix& m);

// Rank (mixed-radix integer) <-> digit-vector conversions used to index
// messages m in F_q^l and coset coordinates a in F_q^k. Digit 0 is the most
// significant position, so rank order equals lexicographic order.
std::vector<std::uint32_t> rank_to_tuple(std::uint64_t rank, std::size_t len, std::uint32_t q);
std::uint64_t tuple_to_rank(const std::vector<std::uint32_t>& tuple, std::uint32_t q);

// q^e with overflow check against the given cap; throws ResourceError beyond it.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap);

}  // namespace sumcq
