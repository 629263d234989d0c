#pragma once

#include <cstdint>
#include <vector>

#include "sumcq/errors.hpp"

namespace sumcq {

// Strong (frequency) typicality with per-letter absolute deviation delta:
// a sequence is typical iff |N(a)/n - p(a)| <= delta for every symbol a, and
// N(a) = 0 wherever p(a) = 0. Joint variants apply the rule to symbol pairs.

bool is_typical(const std::vector<std::uint32_t>& seq, const std::vector<double>& pmf,
                double delta);

// joint_pmf is row-major |A| x |B|; sequences must have equal length.
bool is_jointly_typical(const std::vector<std::uint32_t>& a_seq,
                        const std::vector<std::uint32_t>& b_seq,
                        const std::vector<double>& joint_pmf, std::size_t b_size, double delta);

// All typical sequences of length n, enumerated in lexicographic order.
// Throws ResourceError when |alphabet|^n exceeds the budget.
std::vector<std::vector<std::uint32_t>> enumerate_typical(const std::vector<double>& pmf,
                                                          std::size_t n, double delta,
                                                          std::uint64_t enum_budget);

// {y^n : (x^n, y^n) in T_delta(joint_pmf)} in lexicographic order.
std::vector<std::vector<std::uint32_t>> enumerate_conditionally_typical(
    const std::vector<double>& joint_pmf, std::size_t b_size,
    const std::vector<std::uint32_t>& a_seq, double delta, std::uint64_t enum_budget);

// Type (empirical count vector) helpers over a single alphabet.
std::vector<std::uint32_t> sequence_counts(const std::vector<std::uint32_t>& seq,
                                           std::size_t alphabet);

// All count vectors (compositions of n into `parts` bins), lexicographic.
std::vector<std::vector<std::uint32_t>> enumerate_compositions(std::size_t n, std::size_t parts,
                                                               std::uint64_t enum_budget);

}  // namespace sumcq
