#include "sumpath/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace sumpath {

int ExactKPathInstance::num_vertices() const {
    int n = 0;
    for (const auto& layer : layers)
        for (int v : layer) n = std::max(n, v + 1);
    return n;
}

std::vector<int> ExactKPathInstance::layer_of() const {
    std::vector<int> lo(static_cast<std::size_t>(num_vertices()), 0);
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (int v : layers[i]) lo[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    return lo;
}

int ExactBicritKPathInstance::num_vertices() const {
    int n = 0;
    for (const auto& layer : layers)
        for (int v : layer) n = std::max(n, v + 1);
    return n;
}

std::vector<int> ExactBicritKPathInstance::layer_of() const {
    std::vector<int> lo(static_cast<std::size_t>(num_vertices()), 0);
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (int v : layers[i]) lo[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    return lo;
}

std::string cert_kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::Subset: return "subset";
        case CertKind::KTuple: return "k-tuple";
        case CertKind::Path: return "path";
        case CertKind::Assignment: return "assignment";
    }
    return "?";
}

CertKind cert_kind_from_name(const std::string& name) {
    if (name == "subset") return CertKind::Subset;
    if (name == "k-tuple") return CertKind::KTuple;
    if (name == "path") return CertKind::Path;
    if (name == "assignment") return CertKind::Assignment;
    throw std::invalid_argument("unknown certificate kind: " + name);
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

std::vector<std::string> validate(const CnfFormula& phi) {
    std::vector<std::string> report;
    std::vector<int> occ(static_cast<std::size_t>(std::max(phi.num_vars, 0)), 0);
    for (std::size_t ci = 0; ci < phi.clauses.size(); ++ci) {
        const auto& clause = phi.clauses[ci];
        if (clause.empty()) {
            report.push_back("empty clause at index " + std::to_string(ci));
            continue;
        }
        std::set<int> seen_vars;
        for (int lit : clause) {
            int v = std::abs(lit);
            if (lit == 0 || v > phi.num_vars) {
                report.push_back("literal out of range in clause " + std::to_string(ci));
                continue;
            }
            seen_vars.insert(v);
        }
        for (int v : seen_vars) ++occ[static_cast<std::size_t>(v - 1)];
    }
    int actual = 0;
    for (int c : occ) actual = std::max(actual, c);
    if (phi.occurrence_bound != actual)
        report.push_back("occurrence_bound mismatch: declared " + std::to_string(phi.occurrence_bound) +
                         ", actual " + std::to_string(actual));
    return report;
}

std::vector<std::string> validate(const CspInstance& psi) {
    std::vector<std::string> report;
    if (psi.universe_bits < 1 || psi.universe_bits > 30) {
        report.push_back("universe_bits out of supported range [1,30]");
        return report;
    }
    long long universe = 1ll << psi.universe_bits;
    std::vector<int> degree(static_cast<std::size_t>(std::max(psi.num_vars, 0)), 0);
    int arity = 0;
    for (std::size_t ci = 0; ci < psi.constraints.size(); ++ci) {
        const auto& c = psi.constraints[ci];
        std::set<int> scope(c.vars.begin(), c.vars.end());
        if (scope.size() != c.vars.size())
            report.push_back("duplicate variable in constraint " + std::to_string(ci));
        for (int v : c.vars) {
            if (v < 0 || v >= psi.num_vars)
                report.push_back("variable out of range in constraint " + std::to_string(ci));
            else
                ++degree[static_cast<std::size_t>(v)];
        }
        arity = std::max(arity, static_cast<int>(c.vars.size()));
        for (const auto& t : c.tuples) {
            if (t.size() != c.vars.size()) {
                report.push_back("tuple length mismatch in constraint " + std::to_string(ci));
                continue;
            }
            for (int val : t)
                if (val < 1 || val > universe)
                    report.push_back("tuple value out of universe in constraint " + std::to_string(ci));
        }
    }
    int deg = 0;
    for (int d : degree) deg = std::max(deg, d);
    if (psi.degree_bound != deg)
        report.push_back("degree_bound mismatch: declared " + std::to_string(psi.degree_bound) +
                         ", actual " + std::to_string(deg));
    if (psi.arity_bound != arity)
        report.push_back("arity_bound mismatch: declared " + std::to_string(psi.arity_bound) +
                         ", actual " + std::to_string(arity));
    return report;
}

std::vector<std::string> validate(const SubsetSumInstance& inst) {
    std::vector<std::string> report;
    for (const auto& x : inst.items)
        if (x < 0) {
            report.push_back("negative item");
            break;
        }
    if (inst.target < 0) report.push_back("negative target");
    if (inst.target_bits && from_bits(*inst.target_bits) != inst.target)
        report.push_back("target_bits does not encode target");
    return report;
}

std::vector<std::string> validate(const KSumInstance& inst) {
    std::vector<std::string> report;
    if (inst.k() < 2) report.push_back("fewer than 2 groups");
    for (const auto& g : inst.groups)
        for (const auto& x : g)
            if (x < 0) {
                report.push_back("negative element");
                goto done;
            }
done:
    if (inst.target < 0) report.push_back("negative target");
    return report;
}

std::vector<std::string> validate(const BicriteriaInstance& inst) {
    std::vector<std::string> report;
    if (inst.source == inst.sink) report.push_back("source equals sink");
    auto vertex_ok = [&](int v) { return v >= 0 && v < inst.num_vertices; };
    if (!vertex_ok(inst.source)) report.push_back("source out of range");
    if (!vertex_ok(inst.sink)) report.push_back("sink out of range");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : inst.edges) {
        if (!vertex_ok(e.tail) || !vertex_ok(e.head)) {
            report.push_back("edge endpoint out of range");
            continue;
        }
        if (e.tail == e.head) report.push_back("self-loop");
        if (e.length < 0 || e.cost < 0) report.push_back("negative edge weight");
        if (!seen.insert({e.tail, e.head}).second) report.push_back("parallel edges");
    }
    if (inst.budget_length < 0) report.push_back("negative length budget");
    if (inst.budget_cost < 0) report.push_back("negative cost budget");
    return report;
}

namespace {

template <typename Inst, typename EdgeT>
void validate_layered(const Inst& inst, const std::vector<EdgeT>& edges,
                      std::vector<std::string>& report) {
    if (static_cast<int>(inst.layers.size()) != inst.path_size)
        report.push_back("layer count differs from path size");
    std::map<int, int> layer_of;
    for (std::size_t i = 0; i < inst.layers.size(); ++i)
        for (int v : inst.layers[i]) {
            if (v < 0) report.push_back("negative vertex id");
            if (!layer_of.emplace(v, static_cast<int>(i) + 1).second)
                report.push_back("vertex in more than one layer");
        }
    for (const auto& e : edges) {
        auto it_t = layer_of.find(e.tail);
        auto it_h = layer_of.find(e.head);
        if (it_t == layer_of.end() || it_h == layer_of.end()) {
            report.push_back("edge endpoint not in any layer");
            continue;
        }
        if (it_h->second != it_t->second + 1) report.push_back("layering violated");
    }
}

}  // namespace

std::vector<std::string> validate(const ExactKPathInstance& inst) {
    std::vector<std::string> report;
    if (inst.path_size < 1) report.push_back("path size below 1");
    validate_layered(inst, inst.edges, report);
    for (const auto& e : inst.edges)
        if (e.weight < 0 || e.weight > inst.weight_bound) {
            report.push_back("edge weight outside [0, weight_bound]");
            break;
        }
    if (inst.target < 0) report.push_back("negative target");
    return report;
}

std::vector<std::string> validate(const ExactBicritKPathInstance& inst) {
    std::vector<std::string> report;
    if (inst.path_size < 1) report.push_back("path size below 1");
    validate_layered(inst, inst.edges, report);
    for (const auto& e : inst.edges)
        if (e.w1 < 0 || e.w1 > inst.weight_bound || e.w2 < 0 || e.w2 > inst.weight_bound) {
            report.push_back("edge weight outside [0, weight_bound]");
            break;
        }
    if (inst.target1 < 0 || inst.target2 < 0) report.push_back("negative target");
    return report;
}

// ---------------------------------------------------------------------------
// check_certificate
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void kind_mismatch() {
    throw std::invalid_argument("certificate/instance type mismatch");
}

}  // namespace

bool check_certificate(const SubsetSumInstance& inst, const SolutionCertificate& cert) {
    if (cert.kind != CertKind::Subset) kind_mismatch();
    std::set<int> used;
    BigInt sum = 0;
    for (int idx : cert.indices) {
        if (idx < 0 || idx >= static_cast<int>(inst.items.size())) return false;
        if (!used.insert(idx).second) return false;
        sum += inst.items[static_cast<std::size_t>(idx)];
    }
    return sum == inst.target;
}

bool check_certificate(const KSumInstance& inst, const SolutionCertificate& cert) {
    if (cert.kind != CertKind::KTuple) kind_mismatch();
    if (cert.indices.size() != inst.groups.size()) return false;
    BigInt sum = 0;
    for (std::size_t i = 0; i < inst.groups.size(); ++i) {
        int idx = cert.indices[i];
        if (idx < 0 || idx >= static_cast<int>(inst.groups[i].size())) return false;
        sum += inst.groups[i][static_cast<std::size_t>(idx)];
    }
    return sum == inst.target;
}

bool check_certificate(const BicriteriaInstance& inst, const SolutionCertificate& cert) {
    if (cert.kind != CertKind::Path) kind_mismatch();
    if (cert.indices.empty()) return false;
    BigInt len = 0, cost = 0;
    int at = inst.source;
    std::set<int> visited{inst.source};
    for (int idx : cert.indices) {
        if (idx < 0 || idx >= static_cast<int>(inst.edges.size())) return false;
        const BiEdge& e = inst.edges[static_cast<std::size_t>(idx)];
        if (e.tail != at) return false;
        if (!visited.insert(e.head).second) return false;
        at = e.head;
        len += e.length;
        cost += e.cost;
    }
    return at == inst.sink && len <= inst.budget_length && cost <= inst.budget_cost;
}

bool check_certificate(const CspInstance& inst, const SolutionCertificate& cert) {
    if (cert.kind != CertKind::Assignment) kind_mismatch();
    if (static_cast<int>(cert.indices.size()) != inst.num_vars) return false;
    return csp_satisfied_by(inst, cert.indices);
}

bool check_certificate(const ExactKPathInstance& inst, const SolutionCertificate& cert) {
    if (cert.kind != CertKind::Path) kind_mismatch();
    if (inst.path_size == 1)
        return cert.indices.empty() && inst.target == 0 && !inst.layers.empty() &&
               !inst.layers[0].empty();
    if (static_cast<int>(cert.indices.size()) != inst.path_size - 1) return false;
    auto lo = inst.layer_of();
    std::int64_t sum = 0;
    int at = -1;
    for (std::size_t i = 0; i < cert.indices.size(); ++i) {
        int idx = cert.indices[i];
        if (idx < 0 || idx >= static_cast<int>(inst.edges.size())) return false;
        const ExactEdge& e = inst.edges[static_cast<std::size_t>(idx)];
        if (i == 0) {
            if (lo[static_cast<std::size_t>(e.tail)] != 1) return false;
        } else if (e.tail != at) {
            return false;
        }
        at = e.head;
        sum += e.weight;
    }
    return lo[static_cast<std::size_t>(at)] == inst.path_size && sum == inst.target;
}

// ---------------------------------------------------------------------------
// small shared helpers
// ---------------------------------------------------------------------------

void canonicalize_items(std::vector<BigInt>& items) { std::sort(items.begin(), items.end()); }

bool edge_less(const BiEdge& a, const BiEdge& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    if (a.head != b.head) return a.head < b.head;
    if (a.length != b.length) return a.length < b.length;
    return a.cost < b.cost;
}

void sort_edges_canonical(std::vector<BiEdge>& edges) {
    std::sort(edges.begin(), edges.end(), edge_less);
}

bool constraint_allows(const CspConstraint& c, const std::vector<int>& tuple) {
    for (const auto& t : c.tuples)
        if (t == tuple) return true;
    return false;
}

bool csp_satisfied_by(const CspInstance& psi, const std::vector<int>& assignment) {
    long long universe = 1ll << psi.universe_bits;
    for (int val : assignment)
        if (val < 1 || val > universe) return false;
    std::vector<int> tuple;
    for (const auto& c : psi.constraints) {
        tuple.clear();
        for (int v : c.vars) tuple.push_back(assignment[static_cast<std::size_t>(v)]);
        if (!constraint_allows(c, tuple)) return false;
    }
    return true;
}

}  // namespace sumpath
