#pragma once

#include <cstdint>
#include <utility>

#include "sumpath/avgfree.hpp"
#include "sumpath/instances.hpp"
#include "sumpath/json_io.hpp"

namespace sumpath {

// ---------------------------------------------------------------------------
// Bit-block layout of the CSP-to-Subset-Sum encoding. Every constructed item
// is, from the most significant end:
//
//   [count | pad1 | one bit per type | pad2 | var block 0 | ... | var block n-1]
//
// The count block forces picking exactly n_vars + n_constraints items, the
// type bits force one item per type, and each variable block carries
// lambda*B - d(x)*f(alpha) (variable items) resp. f(alpha_i) (constraint
// items), so that a block totals lambda*B exactly iff all picks agree on the
// variable's value.
// ---------------------------------------------------------------------------
struct BlockLayout {
    int count_block_bits = 0;
    int pad1_bits = 0;
    int type_block_bits = 0;  // n_vars + n_constraints
    int pad2_bits = 0;
    int var_block_bits = 0;  // per variable: ceil(log2(2*lambda*B + 1))
    int num_vars = 0;
    int num_constraints = 0;
    int lambda = 0;   // degree/arity bound used
    BigInt avgfree_bound = 0;  // B

    int total_bits() const {
        return count_block_bits + pad1_bits + type_block_bits + pad2_bits +
               num_vars * var_block_bits;
    }
    // Offsets of block least-significant bits, counted from bit 0.
    int var_block_lsb(int var) const { return (num_vars - 1 - var) * var_block_bits; }
    int type_bit_lsb(int type_index) const {
        return num_vars * var_block_bits + pad2_bits + (type_block_bits - 1 - type_index);
    }
    int count_block_lsb() const {
        return num_vars * var_block_bits + pad2_bits + type_block_bits + pad1_bits;
    }

    // count value, one optional type position, and per-variable block values.
    BigInt assemble(int count, int type_index, const std::vector<BigInt>& var_blocks) const;

    std::string render_bits(const BigInt& value) const;          // plain 0/1
    std::string render_bits_grouped(const BigInt& value) const;  // '|' between blocks

    // Violations of the carry-isolation conditions for a given item count.
    std::vector<std::string> carry_safety_report(std::size_t total_items) const;
};

// Provenance of one Subset Sum item.
struct SsItemProvenance {
    bool is_var = false;
    int var = -1;                  // variable index (variable items)
    int value = 0;                 // assigned universe value (variable items)
    int constraint = -1;           // constraint index (constraint items)
    std::vector<int> scope;        // constraint's variable list (constraint items)
    std::vector<int> tuple;        // satisfying tuple (constraint items)
};

struct SsWitnessMap {
    BlockLayout layout;
    std::vector<SsItemProvenance> items;  // aligned with the instance's items
};

enum class LayoutMode {
    Minimal,       // carry-proof minimal widths
    PaperExample,  // widths pinned to (3,3,6,3,4) for the worked 3-variable CSP
};

struct ReductionCaps {
    std::uint64_t tuples_per_constraint = 1ull << 20;
};

// Lemma-2-style grouping: a original variables per super-variable, blocks of
// gamma = a * occurrence_bound clauses per super-constraint (ragged tail
// allowed). Satisfying tuples come from exhaustive enumeration over the
// touched super-variables.
CspInstance group_to_csp(const CnfFormula& phi, int a, const ReductionCaps& caps = {});

// Theorem-3 encoding. S must be lambda-average-free for
// lambda = max(degree_bound, arity_bound) and hold at least 2^a elements; the
// injection f maps the i-th universe value to the i-th smallest element.
// Output items are sorted ascending (canonical form), witness map aligned.
std::pair<SubsetSumInstance, SsWitnessMap> csp_to_subset_sum(
    const CspInstance& psi, const AvgFreeSet& S, LayoutMode mode = LayoutMode::Minimal);

// Reads the assignment off the variable-typed items of a solving subset and
// asserts the constraint-typed items agree with it.
std::vector<int> decode_ss_solution(const SolutionCertificate& cert,
                                    const SubsetSumInstance& inst, const SsWitnessMap& map);

// Theorem-1 split: items partitioned into k near-equal contiguous parts of
// the canonical order; each group is the sorted deduplicated set of the
// part's subset sums that do not exceed the target.
KSumInstance split_to_ksum(const SubsetSumInstance& inst, int k);

// Direct-OR bundle; answer is the disjunction of the members' answers.
struct OrBundle {
    std::vector<SubsetSumInstance> instances;
};

OrBundle or_compose(std::vector<SubsetSumInstance> instances);

Json to_json(const SsWitnessMap& map);
SsWitnessMap witness_map_from_json(const Json& j);

}  // namespace sumpath
