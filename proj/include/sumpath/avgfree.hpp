#pragma once

#include <vector>

#include "sumpath/bigint.hpp"
#include "sumpath/json_io.hpp"

namespace sumpath {

// A k-average-free set: whenever x_1 + ... + x_{k'} = k' * x_{k'+1} for some
// k' <= k with all x_i drawn from the set (repetition allowed), all entries
// are equal. These sets are the anti-carry gadget of the CSP-to-Subset-Sum
// encoding.
struct AvgFreeSet {
    std::vector<BigInt> elements;  // strictly increasing
    int k = 2;                     // average-freeness order
    BigInt bound = 0;              // documented upper bound on max element

    // Construction parameters (0 when the set was not built by
    // build_behrend_set, e.g. a hand-specified set).
    int param_digits = 0;  // D
    int param_digit_cap = 0;  // M, digits range over {0,...,M-1}
    long long param_base = 0;  // b = k*M + 1
};

// Sphere construction: digit vectors d in {0..M-1}^D mapped to sum d_i b^i
// with b = k*M+1, restricted to the squared-norm class holding the most
// vectors. Digitwise sums of up to k elements never carry, and strict
// convexity of the sphere forces average-freeness. D and M are the smallest
// (D-major order) that yield n points within the enumeration budget.
AvgFreeSet build_behrend_set(int k, double epsilon, int n);

// Exhaustive check of the defining predicate; intended for |S|^(k+1) small.
bool verify_average_free(const std::vector<BigInt>& elements, int k);

std::vector<std::string> validate(const AvgFreeSet& s);

Json to_json(const AvgFreeSet& s);
AvgFreeSet avgfree_from_json(const Json& j);

}  // namespace sumpath
