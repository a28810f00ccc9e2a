#pragma once

#include <cstdint>

#include "sumpath/instances.hpp"

namespace sumpath {

// Seeded, reproducible instance generation. Same parameters and seed always
// produce the same instance, on any platform.

CnfFormula gen_random_cnf(int num_vars, int num_clauses, int width, std::uint64_t seed);

// Random structured CSP; tuple counts are trimmed so that the derived
// Theorem-3 Subset Sum instance keeps at most item_budget items (set 0 to
// skip trimming).
CspInstance gen_random_csp(int num_vars, int universe_bits, int num_constraints,
                           std::uint64_t seed, int item_budget = 0);

// Items uniform in [0, max_item]; half the seeds plant a random subset's sum
// as the target, the rest draw a uniform target below the total.
SubsetSumInstance gen_random_subset_sum(int num_items, std::uint64_t max_item, std::uint64_t seed);

KSumInstance gen_random_ksum(int k, int group_size, std::uint64_t max_value, std::uint64_t seed);

// Simple digraph (no self-loops or parallel edges) over n vertices with the
// given edge probability (percent), weights uniform in [0, max_weight];
// budgets drawn around a random s,t-walk so YES and NO both occur.
BicriteriaInstance gen_random_bicriteria(int num_vertices, int edge_percent,
                                         std::uint64_t max_weight, std::uint64_t seed);

// Random layered instance for the exact-path solvers.
ExactKPathInstance gen_random_exact_kpath(int path_size, int layer_width, std::int64_t max_weight,
                                          std::uint64_t seed);

// The worked 3-variable example CSP: x1 = x2, x2 != x3, x1 = 1 -> x3 = 1
// over universe {1, 2}.
CspInstance paper_example_csp();

}  // namespace sumpath
