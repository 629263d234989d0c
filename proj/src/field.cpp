#include "sumcq/field.hpp"

#include <string>

namespace sumcq {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

void require_prime(std::uint32_t q) {
    if (!is_prime(q)) {
        throw UsageError("modulus " + std::to_string(q) + " is not prime");
    }
}

void require_same_modulus(std::uint32_t a, std::uint32_t b) {
    if (a != b) {
        throw UsageError("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

FieldScalar::FieldScalar(std::uint32_t v, std::uint32_t q) : value(v), modulus(q) {
    require_prime(q);
    if (v >= q) throw UsageError("field scalar out of range");
}

FieldScalar FieldScalar::add(FieldScalar other) const {
    require_same_modulus(modulus, other.modulus);
    return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(value) + other.value) % modulus),
            modulus};
}

FieldScalar FieldScalar::sub(FieldScalar other) const { return add(other.neg()); }

FieldScalar FieldScalar::mul(FieldScalar other) const {
    require_same_modulus(modulus, other.modulus);
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(value) * other.value % modulus),
            modulus};
}

FieldScalar FieldScalar::neg() const {
    return {value == 0 ? 0u : modulus - value, modulus};
}

FieldScalar FieldScalar::inv() const {
    if (value == 0) throw std::domain_error("inverse of zero in F_q");
    // Fermat: a^(q-2) mod q.
    std::uint64_t result = 1, base = value, e = modulus - 2;
    while (e > 0) {
        if (e & 1) result = result * base % modulus;
        base = base * base % modulus;
        e >>= 1;
    }
    return {static_cast<std::uint32_t>(result), modulus};
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
    require_prime(q);
    if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                         std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), q_(q), data_(std::move(entries)) {
    require_prime(q);
    if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw UsageError("entry count does not match shape");
    for (auto v : data_) {
        if (v >= q) throw UsageError("matrix entry out of range for F_q");
    }
}

std::vector<std::uint32_t> FieldMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& other) const {
    require_same_modulus(q_, other.q_);
    if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("shape mismatch in add");
    FieldMatrix out(rows_, cols_, q_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(data_[i]) + other.data_[i]) % q_);
    }
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
    require_same_modulus(q_, other.q_);
    if (cols_ != other.rows_) throw UsageError("inner dimension mismatch in mat_mul");
    FieldMatrix out(rows_, other.cols_, q_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < other.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < cols_; ++t) {
                acc += static_cast<std::uint64_t>((*this)(i, t)) * other(t, j);
            }
            out(i, j) = static_cast<std::uint32_t>(acc % q_);
        }
    }
    return out;
}

FieldMatrix FieldMatrix::identity(std::size_t n, std::uint32_t q) {
    FieldMatrix out(n, n, q);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

FieldMatrix FieldMatrix::row_vector(const std::vector<std::uint32_t>& v, std::uint32_t q) {
    return FieldMatrix(1, v.size(), q, v);
}

std::vector<std::uint32_t> vec_mat_mul(const std::vector<std::uint32_t>& v, const FieldMatrix& m) {
    if (v.size() != m.rows()) throw UsageError("inner dimension mismatch in vec_mat_mul");
    std::vector<std::uint32_t> out(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < v.size(); ++t) {
            acc += static_cast<std::uint64_t>(v[t]) * m(t, j);
        }
        out[j] = static_cast<std::uint32_t>(acc % m.modulus());
    }
    return out;
}

std::vector<std::uint32_t> mat_vec_mul(const FieldMatrix& m, const std::vector<std::uint32_t>& v) {
    if (v.size() != m.cols()) throw UsageError("inner dimension mismatch in mat_vec_mul");
    std::vector<std::uint32_t> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < v.size(); ++t) {
            acc += static_cast<std::uint64_t>(m(i, t)) * v[t];
        }
        out[i] = static_cast<std::uint32_t>(acc % m.modulus());
    }
    return out;
}

std::vector<std::uint32_t> vec_add(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t q) {
    if (a.size() != b.size()) throw UsageError("length mismatch in vec_add");
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) + b[i]) % q);
    }
    return out;
}

FieldMatrix uniform_random_matrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                                  std::uint64_t seed) {
    CounterRng rng(seed);
    return uniform_random_matrix(rows, cols, q, rng);
}

FieldMatrix uniform_random_matrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                                  CounterRng& rng) {
    require_prime(q);
    FieldMatrix out(rows, cols, q);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = static_cast<std::uint32_t>(rng.next_below(q));
        }
    }
    return out;
}

std::optional<LinearSolution> solve_linear(const FieldMatrix& m,
                                           const std::vector<std::uint32_t>& rhs) {
    if (rhs.size() != m.rows()) throw UsageError("rhs length mismatch in solve_linear");
    const std::uint32_t q = m.modulus();
    const std::size_t nr = m.rows(), nc = m.cols();

    // Augmented Gaussian elimination mod q.
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m(i, j);
        a[i][nc] = rhs[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[row], a[piv]);
        const std::uint64_t inv =
            FieldScalar(static_cast<std::uint32_t>(a[row][col]), q).inv().value;
        for (std::size_t j = col; j <= nc; ++j) a[row][j] = a[row][j] * inv % q;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const std::uint64_t f = a[i][col];
            for (std::size_t j = col; j <= nc; ++j) {
                a[i][j] = (a[i][j] + (q - f % q) * a[row][j]) % q;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < nr; ++i) {
        if (a[i][nc] != 0) return std::nullopt;
    }

    LinearSolution sol;
    sol.particular.assign(nc, 0);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        is_pivot[pivot_col[r]] = true;
        sol.particular[pivot_col[r]] = static_cast<std::uint32_t>(a[r][nc]);
    }
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> basis(nc, 0);
        basis[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            basis[pivot_col[r]] =
                static_cast<std::uint32_t>((q - a[r][free_col] % q) % q);
        }
        sol.nullspace_basis.push_back(std::move(basis));
    }
    return sol;
}

std::size_t field_rank(const FieldMatrix& m) {
    auto sol = solve_linear(m, std::vector<std::uint32_t>(m.rows(), 0));
    return m.cols() - sol->nullspace_basis.size();
}

std::vector<std::uint32_t> rank_to_tuple(std::uint64_t rank, std::size_t len, std::uint32_t q) {
    std::vector<std::uint32_t> out(len, 0);
    for (std::size_t i = len; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(rank % q);
        rank /= q;
    }
    if (rank != 0) throw UsageError("rank out of range for tuple length");
    return out;
}

std::uint64_t tuple_to_rank(const std::vector<std::uint32_t>& tuple, std::uint32_t q) {
    std::uint64_t rank = 0;
    for (auto v : tuple) rank = rank * q + v;
    return rank;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > cap / base) {
            throw ResourceError("enumeration size " + std::to_string(base) + "^" +
                                std::to_string(exp) + " exceeds budget " + std::to_string(cap));
        }
        out *= base;
    }
    if (out > cap) {
        throw ResourceError("enumeration size exceeds budget " + std::to_string(cap));
    }
    return out;
}

}  // namespace sumcq
