#pragma once

#include <stdexcept>
#include <string>

namespace sumcq {

// Caller passed inconsistent arguments (dimension/modulus mismatch, bad pmf, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A constructed object fails its numerical invariants (non-Hermitian, negative
// eigenvalue beyond tolerance, POVM incomplete, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation would exceed the configured enumeration or dimension budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration/dimension limits for exact computations. dim_budget caps the
// tensor-product dimension dim^n; enum_budget caps classical enumerations
// (q^k cosets, q^(n-l) coset leaders, POVM term counts, grids).
struct Budgets {
    std::uint64_t dim_budget = 1ull << 14;
    std::uint64_t enum_budget = 1ull << 16;
};

}  // namespace sumcq
