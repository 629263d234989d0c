#include "sumcq/typicality.hpp"

#include <cmath>

#include "sumcq/field.hpp"

namespace sumcq {

namespace {

bool counts_typical(const std::vector<std::uint64_t>& counts, const std::vector<double>& pmf,
                    std::size_t n, double delta) {
    for (std::size_t s = 0; s < pmf.size(); ++s) {
        if (pmf[s] == 0.0) {
            if (counts[s] != 0) return false;
        } else if (std::abs(static_cast<double>(counts[s]) / static_cast<double>(n) - pmf[s]) >
                   delta) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_typical(const std::vector<std::uint32_t>& seq, const std::vector<double>& pmf,
                double delta) {
    std::vector<std::uint64_t> counts(pmf.size(), 0);
    for (auto s : seq) {
        if (s >= pmf.size()) throw UsageError("sequence symbol outside alphabet");
        ++counts[s];
    }
    return counts_typical(counts, pmf, seq.size(), delta);
}

bool is_jointly_typical(const std::vector<std::uint32_t>& a_seq,
                        const std::vector<std::uint32_t>& b_seq,
                        const std::vector<double>& joint_pmf, std::size_t b_size, double delta) {
    if (a_seq.size() != b_seq.size()) throw UsageError("sequence length mismatch");
    std::vector<std::uint64_t> counts(joint_pmf.size(), 0);
    for (std::size_t t = 0; t < a_seq.size(); ++t) {
        const std::size_t idx = a_seq[t] * b_size + b_seq[t];
        if (idx >= joint_pmf.size()) throw UsageError("sequence symbol outside alphabet");
        ++counts[idx];
    }
    return counts_typical(counts, joint_pmf, a_seq.size(), delta);
}

std::vector<std::vector<std::uint32_t>> enumerate_typical(const std::vector<double>& pmf,
                                                          std::size_t n, double delta,
                                                          std::uint64_t enum_budget) {
    checked_pow(pmf.size(), n, enum_budget);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> seq(n, 0);
    while (true) {
        if (is_typical(seq, pmf, delta)) out.push_back(seq);
        std::size_t pos = n;
        while (pos > 0) {
            if (++seq[pos - 1] < pmf.size()) break;
            seq[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_conditionally_typical(
    const std::vector<double>& joint_pmf, std::size_t b_size,
    const std::vector<std::uint32_t>& a_seq, double delta, std::uint64_t enum_budget) {
    const std::size_t n = a_seq.size();
    checked_pow(b_size, n, enum_budget);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> seq(n, 0);
    while (true) {
        if (is_jointly_typical(a_seq, seq, joint_pmf, b_size, delta)) out.push_back(seq);
        std::size_t pos = n;
        while (pos > 0) {
            if (++seq[pos - 1] < b_size) break;
            seq[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

std::vector<std::uint32_t> sequence_counts(const std::vector<std::uint32_t>& seq,
                                           std::size_t alphabet) {
    std::vector<std::uint32_t> counts(alphabet, 0);
    for (auto s : seq) {
        if (s >= alphabet) throw UsageError("sequence symbol outside alphabet");
        ++counts[s];
    }
    return counts;
}

std::vector<std::vector<std::uint32_t>> enumerate_compositions(std::size_t n, std::size_t parts,
                                                               std::uint64_t enum_budget) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(parts, 0);
    // Depth-first over bins; the count of compositions C(n+parts-1, parts-1) is
    // checked lazily against the budget as results accumulate.
    auto recurse = [&](auto&& self, std::size_t bin, std::size_t remaining) -> void {
        if (bin + 1 == parts) {
            cur[bin] = static_cast<std::uint32_t>(remaining);
            if (out.size() >= enum_budget) {
                throw ResourceError("composition enumeration exceeds budget");
            }
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= remaining; ++v) {
            cur[bin] = static_cast<std::uint32_t>(v);
            self(self, bin + 1, remaining - v);
        }
    };
    recurse(recurse, 0, n);
    return out;
}

}  // namespace sumcq
