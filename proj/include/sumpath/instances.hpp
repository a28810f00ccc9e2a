#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumpath/bigint.hpp"

namespace sumpath {

// ---------------------------------------------------------------------------
// Instance types shared by all reductions and solvers. All types are plain
// immutable-by-convention value types; operations on them are pure functions.
// ---------------------------------------------------------------------------

// CNF formula with a tracked per-variable occurrence bound. Literals are
// signed 1-based DIMACS-style integers.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    int occurrence_bound = 0;
};

// One constraint of a structured CSP: an ordered variable list (0-based) and
// the explicit set of satisfying assignment tuples (values 1-based in [1, 2^a]).
struct CspConstraint {
    std::vector<int> vars;
    std::vector<std::vector<int>> tuples;
};

// CSP over universe [2^a] with bounded variable degree and constraint arity.
struct CspInstance {
    int num_vars = 0;
    int universe_bits = 1;  // a
    std::vector<CspConstraint> constraints;
    int degree_bound = 0;  // max constraints any variable appears in
    int arity_bound = 0;   // max variables per constraint
};

struct SubsetSumInstance {
    std::vector<BigInt> items;  // multiset, canonical form is sorted ascending
    BigInt target = 0;
    // Optional bit-level rendering of the target (Theorem-3-style instances).
    std::optional<std::string> target_bits;
};

struct KSumInstance {
    std::vector<std::vector<BigInt>> groups;  // Z_1 .. Z_k
    BigInt target = 0;
    int k() const { return static_cast<int>(groups.size()); }
};

struct BiEdge {
    int tail = 0;
    int head = 0;
    BigInt length = 0;
    BigInt cost = 0;
};

// Directed graph with (length, cost) edge pairs and two budgets.
struct BicriteriaInstance {
    int num_vertices = 0;
    std::vector<BiEdge> edges;  // canonical form is sorted by (tail, head, length, cost)
    int source = 0;
    int sink = 0;
    BigInt budget_length = 0;  // L
    BigInt budget_cost = 0;    // C
};

struct ExactEdge {
    int tail = 0;
    int head = 0;
    std::int64_t weight = 0;
};

// Layered graph: k vertex classes, edges only from layer i to layer i+1.
// A solution is a path on k vertices (one per layer) of weight exactly T.
// A single-vertex path (k = 1) has weight 0 by the empty-sum convention.
struct ExactKPathInstance {
    int path_size = 1;  // k
    std::vector<std::vector<int>> layers;
    std::vector<ExactEdge> edges;
    std::int64_t target = 0;
    std::int64_t weight_bound = 0;  // W
    int num_vertices() const;
    std::vector<int> layer_of() const;  // vertex -> 1-based layer, 0 if absent
};

struct ExactBiEdge {
    int tail = 0;
    int head = 0;
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;
};

// Bicriteria twin of ExactKPathInstance: weights (w1, w2), targets (T1, T2).
struct ExactBicritKPathInstance {
    int path_size = 1;
    std::vector<std::vector<int>> layers;
    std::vector<ExactBiEdge> edges;
    std::int64_t target1 = 0;
    std::int64_t target2 = 0;
    std::int64_t weight_bound = 0;
    int num_vertices() const;
    std::vector<int> layer_of() const;
};

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class CertKind { Subset, KTuple, Path, Assignment };

std::string cert_kind_name(CertKind kind);
CertKind cert_kind_from_name(const std::string& name);

// Replayable witness. Payload meaning by kind:
//   Subset     - item indices into SubsetSumInstance::items
//   KTuple     - one element index per group of a KSumInstance
//   Path       - edge indices, in path order, into the instance's edge list
//   Assignment - one universe value (1-based) per CSP variable
struct SolutionCertificate {
    CertKind kind = CertKind::Subset;
    std::vector<int> indices;
};

// ---------------------------------------------------------------------------
// Structural validation: returns the list of violated invariants (empty means
// valid). Never mutates or throws.
// ---------------------------------------------------------------------------

std::vector<std::string> validate(const CnfFormula& phi);
std::vector<std::string> validate(const CspInstance& psi);
std::vector<std::string> validate(const SubsetSumInstance& inst);
std::vector<std::string> validate(const KSumInstance& inst);
std::vector<std::string> validate(const BicriteriaInstance& inst);
std::vector<std::string> validate(const ExactKPathInstance& inst);
std::vector<std::string> validate(const ExactBicritKPathInstance& inst);

// ---------------------------------------------------------------------------
// Certificate replay: true iff the witness satisfies the instance's defining
// predicate exactly. Throws std::invalid_argument("certificate/instance type
// mismatch") when cert.kind does not fit the instance.
// ---------------------------------------------------------------------------

bool check_certificate(const SubsetSumInstance& inst, const SolutionCertificate& cert);
bool check_certificate(const KSumInstance& inst, const SolutionCertificate& cert);
bool check_certificate(const BicriteriaInstance& inst, const SolutionCertificate& cert);
bool check_certificate(const CspInstance& inst, const SolutionCertificate& cert);
bool check_certificate(const ExactKPathInstance& inst, const SolutionCertificate& cert);

// Canonical orderings used by every construction in the toolkit.
void canonicalize_items(std::vector<BigInt>& items);
void sort_edges_canonical(std::vector<BiEdge>& edges);
bool edge_less(const BiEdge& a, const BiEdge& b);

// True if the constraint's tuple set contains `tuple` (values for the
// constraint's variables, in its variable order).
bool constraint_allows(const CspConstraint& c, const std::vector<int>& tuple);

// Evaluates a full assignment (1-based universe values, one per variable).
bool csp_satisfied_by(const CspInstance& psi, const std::vector<int>& assignment);

}  // namespace sumpath
