#pragma once

#include <string>
#include <vector>

#include "sumpath/instances.hpp"
#include "sumpath/json_io.hpp"
#include "sumpath/reductions_numeric.hpp"

namespace sumpath {

// Per-edge provenance of a gadget graph, enough to translate a feasible path
// back into a witness for the source instance.
struct EdgeProvenance {
    int instance = -1;  // OR-bundle member (or k-SUM group index)
    int item = -1;      // item/element index within the member
    // take: item edge carrying (z, M-z)   skip: the (0, M) alternative
    // final: the (M-T, T) closing edge    zero: second half of a subdivision
    std::string role;
};

struct GadgetTrace {
    std::vector<EdgeProvenance> edges;   // aligned with the instance's edge list
    std::vector<int> entry_vertices;     // per bundle member, its chain start
};

// Theorem-2 gadget: one take/skip chain per bundle member, all sharing s and
// t, budgets L = M and C = k*M where k is the common (padded) item count.
// Every constructed item edge is subdivided, so the output is simple.
// Requires all items and targets <= M.
std::pair<BicriteriaInstance, GadgetTrace> or_to_bicriteria(const OrBundle& bundle,
                                                            const BigInt& M);

// Lemma-4 chain: element z of Z_i becomes an edge v_{i-1} -> v_i with
// (length, cost) = (z, T-z); budgets L = T, C = T*(k-1). Both inequalities
// are forced tight on any feasible path. Subdivision keeps the graph simple.
std::pair<BicriteriaInstance, GadgetTrace> ksum_to_multigraph(const KSumInstance& inst);

// Digit expansion in base B = ceil(T^(1/tau)): every edge becomes a path
// whose edges carry weights from {0, B^0, ..., B^(tau-1)}, preserving each
// s,t-path's (length, cost) exactly. At most tau+1 distinct lengths and
// costs remain.
BicriteriaInstance digit_expand(const BicriteriaInstance& g, int tau);

// Lemma-11 reverse reduction: edge weight x becomes (length x, cost W-x),
// s/t attached with (0,0) edges, budgets L = T and C = (k-1)W - T, forcing
// weight-T equality. Returns an empty list when T > (k-1)W (trivially NO).
std::vector<BicriteriaInstance> exactpath_to_bicriteria(const ExactKPathInstance& inst);

// Decodes a feasible path on an or_to_bicriteria output into the solved
// member index plus a subset certificate for that member.
std::pair<int, SolutionCertificate> decode_gadget_path(const SolutionCertificate& path_cert,
                                                       const BicriteriaInstance& gadget,
                                                       const GadgetTrace& trace);

Json to_json(const GadgetTrace& trace);
GadgetTrace gadget_trace_from_json(const Json& j);

}  // namespace sumpath
