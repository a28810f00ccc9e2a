#pragma once

#include <cstdint>
#include <optional>

#include "sumpath/instances.hpp"

namespace sumpath {

// Exhaustive-enumeration oracles. These are deliberately naive: they are the
// ground truth every reduction and solver is tested against. Hard caps guard
// against accidental blow-up; exceeding one throws std::runtime_error.

struct BruteResult {
    bool yes = false;
    std::uint64_t count = 0;  // number of witnesses
    std::optional<SolutionCertificate> witness;  // first found, deterministic
};

struct BruteCaps {
    std::uint64_t subsets = 1ull << 24;
    std::uint64_t assignments = 1ull << 24;
    std::uint64_t tuples = 1ull << 24;
    std::uint64_t paths = 10'000'000;
};

BruteResult brute_subset_sum(const SubsetSumInstance& inst, const BruteCaps& caps = {});
BruteResult brute_ksum(const KSumInstance& inst, const BruteCaps& caps = {});
BruteResult brute_csp_sat(const CspInstance& psi, const BruteCaps& caps = {});
BruteResult brute_exact_kpath(const ExactKPathInstance& inst, const BruteCaps& caps = {});
BruteResult brute_exact_bicrit_kpath(const ExactBicritKPathInstance& inst, const BruteCaps& caps = {});

// Feasibility by enumerating all simple s,t-paths of at most max_len edges.
BruteResult brute_bicriteria_paths(const BicriteriaInstance& inst, int max_len,
                                   const BruteCaps& caps = {});

// All simple s,t-paths as edge-index sequences (same enumeration order).
std::vector<std::vector<int>> enumerate_st_paths(const BicriteriaInstance& inst, int max_len,
                                                 const BruteCaps& caps = {});

// Is there a feasible s,t-path with exactly k internal vertices (s,t excluded)?
BruteResult brute_bicriteria_k_internal(const BicriteriaInstance& inst, int k,
                                        const BruteCaps& caps = {});

}  // namespace sumpath
