#pragma once

#include <cstdint>
#include <optional>

#include "sumpath/instances.hpp"
#include "sumpath/reductions_numeric.hpp"
#include "sumpath/threshold.hpp"

namespace sumpath {

struct SolveStats {
    std::uint64_t states = 0;
    std::uint64_t nanos = 0;
};

struct SolveResult {
    bool yes = false;
    std::optional<SolutionCertificate> certificate;  // present on YES
    SolveStats stats;
};

struct SolverCaps {
    BigInt dp_target_cap = 10'000'000;           // Bellman table width
    int mim_items_cap = 50;
    std::uint64_t joksch_state_cap = 50'000'000;  // (L+1) * n
    int distinct_length_cap = 3;                  // nonzero distinct lengths
    std::uint64_t distinct_state_cap = 1ull << 23;
    std::uint64_t enumeration_cap = 1ull << 26;   // meet-in-the-middle lists
};

// Bellman's reachable-sums table over 0..T; certificate reconstructed
// greedily toward the lexicographically smallest index set.
SolveResult solve_subset_sum_dp(const SubsetSumInstance& inst, const SolverCaps& caps = {});

// Meet-in-the-middle: both halves' subset sums sorted and matched.
SolveResult solve_subset_sum_mim(const SubsetSumInstance& inst, const SolverCaps& caps = {});

// Halve the groups, enumerate both Cartesian sum lists, match.
SolveResult solve_ksum(const KSumInstance& inst, const SolverCaps& caps = {});

// Joksch's table over (length used, vertex); works on any digraph via
// per-slice relaxation to fixpoint, YES iff min cost at the sink within
// some length slice <= C.
SolveResult solve_bicriteria_joksch(const BicriteriaInstance& inst, const SolverCaps& caps = {});

// Few-distinct-lengths table indexed by (vertex, count per nonzero length
// value); requires an acyclic graph.
SolveResult solve_bicriteria_distinct_dp(const BicriteriaInstance& inst,
                                         const SolverCaps& caps = {});

// Meet-in-the-middle over the middle layer of a layered graph.
SolveResult solve_exact_kpath_mim(const ExactKPathInstance& inst);

// Corollary-2 composition: threshold pipeline + exact meet-in-the-middle,
// certificate translated back onto the input graph's edges.
SolveResult solve_bicriteria_kpath(const BicriteriaInstance& g, int k,
                                   const PipelineOptions& options = {});

// Sequential evaluation of an OR-bundle with the chosen member solver.
enum class SubsetSumAlgo { Dp, Mim };
struct OrSolveResult {
    bool yes = false;
    int member = -1;  // first YES member
    std::optional<SolutionCertificate> certificate;
};
OrSolveResult solve_or_bundle(const OrBundle& bundle, SubsetSumAlgo algo,
                              const SolverCaps& caps = {});

// Swaps (length, cost) and (L, C); lets a caller run Joksch over the
// cheaper axis.
BicriteriaInstance swap_criteria(const BicriteriaInstance& inst);

Json to_json(const SolveResult& result);

}  // namespace sumpath
