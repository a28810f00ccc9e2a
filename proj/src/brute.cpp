#include "sumpath/brute.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumpath {

namespace {

[[noreturn]] void cap_exceeded(const char* what) {
    throw std::runtime_error(std::string("brute-force cap exceeded: ") + what);
}

}  // namespace

BruteResult brute_subset_sum(const SubsetSumInstance& inst, const BruteCaps& caps) {
    std::size_t n = inst.items.size();
    if (n < 64 && (1ull << n) > caps.subsets) cap_exceeded("subsets");
    if (n >= 64) cap_exceeded("subsets");
    BruteResult res;
    std::vector<int> chosen;
    // DFS with the sum > target prune; items are non-negative so this is
    // exact. "Take" is explored before "skip" so the reported witness is the
    // lexicographically smallest index set.
    auto rec = [&](auto&& self, std::size_t i, const BigInt& sum) -> void {
        if (sum > inst.target) return;
        if (i == n) {
            if (sum == inst.target) {
                ++res.count;
                if (!res.witness) res.witness = SolutionCertificate{CertKind::Subset, chosen};
            }
            return;
        }
        chosen.push_back(static_cast<int>(i));
        self(self, i + 1, sum + inst.items[i]);
        chosen.pop_back();
        self(self, i + 1, sum);
    };
    rec(rec, 0, BigInt(0));
    res.yes = res.count > 0;
    return res;
}

BruteResult brute_ksum(const KSumInstance& inst, const BruteCaps& caps) {
    std::uint64_t total = 1;
    for (const auto& g : inst.groups) {
        if (g.empty()) return {};  // no tuple can be formed
        total *= g.size();
        if (total > caps.tuples) cap_exceeded("tuples");
    }
    BruteResult res;
    std::vector<int> pick(inst.groups.size(), 0);
    auto rec = [&](auto&& self, std::size_t gi, const BigInt& sum) -> void {
        if (sum > inst.target) return;
        if (gi == inst.groups.size()) {
            if (sum == inst.target) {
                ++res.count;
                if (!res.witness) res.witness = SolutionCertificate{CertKind::KTuple, pick};
            }
            return;
        }
        for (std::size_t i = 0; i < inst.groups[gi].size(); ++i) {
            pick[gi] = static_cast<int>(i);
            self(self, gi + 1, sum + inst.groups[gi][i]);
        }
    };
    rec(rec, 0, BigInt(0));
    res.yes = res.count > 0;
    return res;
}

BruteResult brute_csp_sat(const CspInstance& psi, const BruteCaps& caps) {
    BruteResult res;
    if (psi.num_vars == 0) {
        // no variables: satisfiable iff every constraint accepts the empty tuple
        bool ok = true;
        for (const auto& c : psi.constraints)
            if (!constraint_allows(c, {})) ok = false;
        res.yes = ok;
        res.count = ok ? 1 : 0;
        if (ok) res.witness = SolutionCertificate{CertKind::Assignment, {}};
        return res;
    }
    std::uint64_t universe = 1ull << psi.universe_bits;
    std::uint64_t total = 1;
    for (int i = 0; i < psi.num_vars; ++i) {
        total *= universe;
        if (total > caps.assignments) cap_exceeded("assignments");
    }
    std::vector<int> assignment(static_cast<std::size_t>(psi.num_vars), 1);
    for (;;) {
        if (csp_satisfied_by(psi, assignment)) {
            ++res.count;
            if (!res.witness) res.witness = SolutionCertificate{CertKind::Assignment, assignment};
        }
        int i = psi.num_vars - 1;
        while (i >= 0) {
            if (assignment[static_cast<std::size_t>(i)] < static_cast<int>(universe)) {
                ++assignment[static_cast<std::size_t>(i)];
                break;
            }
            assignment[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
    }
    res.yes = res.count > 0;
    return res;
}

namespace {

template <typename Inst, typename EdgeT, typename SumPred>
BruteResult brute_layered(const Inst& inst, const std::vector<EdgeT>& edges, SumPred&& hit,
                          std::uint64_t cap) {
    BruteResult res;
    if (inst.path_size == 1) {
        if (!inst.layers.empty() && !inst.layers[0].empty() && hit(std::int64_t(0), std::int64_t(0))) {
            res.yes = true;
            res.count = inst.layers[0].size();
            res.witness = SolutionCertificate{CertKind::Path, {}};
        }
        return res;
    }
    auto lo = inst.layer_of();
    std::vector<std::vector<int>> out(lo.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        out[static_cast<std::size_t>(edges[i].tail)].push_back(static_cast<int>(i));
    std::uint64_t explored = 0;
    std::vector<int> path;
    auto rec = [&](auto&& self, int v, int layer, std::int64_t s1, std::int64_t s2) -> void {
        if (++explored > cap) cap_exceeded("paths");
        if (layer == inst.path_size) {
            if (hit(s1, s2)) {
                ++res.count;
                if (!res.witness) res.witness = SolutionCertificate{CertKind::Path, path};
            }
            return;
        }
        for (int ei : out[static_cast<std::size_t>(v)]) {
            const auto& e = edges[static_cast<std::size_t>(ei)];
            path.push_back(ei);
            if constexpr (requires { e.weight; })
                self(self, e.head, layer + 1, s1 + e.weight, s2);
            else
                self(self, e.head, layer + 1, s1 + e.w1, s2 + e.w2);
            path.pop_back();
        }
    };
    if (!inst.layers.empty())
        for (int v : inst.layers[0]) rec(rec, v, 1, 0, 0);
    res.yes = res.count > 0;
    return res;
}

}  // namespace

BruteResult brute_exact_kpath(const ExactKPathInstance& inst, const BruteCaps& caps) {
    return brute_layered(inst, inst.edges,
                         [&](std::int64_t s1, std::int64_t) { return s1 == inst.target; },
                         caps.paths);
}

BruteResult brute_exact_bicrit_kpath(const ExactBicritKPathInstance& inst, const BruteCaps& caps) {
    return brute_layered(
        inst, inst.edges,
        [&](std::int64_t s1, std::int64_t s2) { return s1 == inst.target1 && s2 == inst.target2; },
        caps.paths);
}

namespace {

// Shared simple-path DFS; calls visit(path) at every s,t-path found.
template <typename Visit>
void st_path_dfs(const BicriteriaInstance& inst, int max_len, std::uint64_t cap, Visit&& visit) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(inst.num_vertices));
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
        out[static_cast<std::size_t>(inst.edges[i].tail)].push_back(static_cast<int>(i));
    std::vector<char> visited(static_cast<std::size_t>(inst.num_vertices), 0);
    std::vector<int> path;
    std::uint64_t explored = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (++explored > cap) cap_exceeded("paths");
        if (v == inst.sink) {
            visit(path);
            return;
        }
        if (static_cast<int>(path.size()) >= max_len) return;
        visited[static_cast<std::size_t>(v)] = 1;
        for (int ei : out[static_cast<std::size_t>(v)]) {
            const BiEdge& e = inst.edges[static_cast<std::size_t>(ei)];
            if (visited[static_cast<std::size_t>(e.head)]) continue;
            path.push_back(ei);
            self(self, e.head);
            path.pop_back();
        }
        visited[static_cast<std::size_t>(v)] = 0;
    };
    if (inst.num_vertices > 0) rec(rec, inst.source);
}

}  // namespace

BruteResult brute_bicriteria_paths(const BicriteriaInstance& inst, int max_len,
                                   const BruteCaps& caps) {
    BruteResult res;
    st_path_dfs(inst, max_len, caps.paths, [&](const std::vector<int>& path) {
        BigInt len = 0, cost = 0;
        for (int ei : path) {
            len += inst.edges[static_cast<std::size_t>(ei)].length;
            cost += inst.edges[static_cast<std::size_t>(ei)].cost;
        }
        if (len <= inst.budget_length && cost <= inst.budget_cost) {
            ++res.count;
            if (!res.witness) res.witness = SolutionCertificate{CertKind::Path, path};
        }
    });
    res.yes = res.count > 0;
    return res;
}

std::vector<std::vector<int>> enumerate_st_paths(const BicriteriaInstance& inst, int max_len,
                                                 const BruteCaps& caps) {
    std::vector<std::vector<int>> paths;
    st_path_dfs(inst, max_len, caps.paths,
                [&](const std::vector<int>& path) { paths.push_back(path); });
    return paths;
}

BruteResult brute_bicriteria_k_internal(const BicriteriaInstance& inst, int k,
                                        const BruteCaps& caps) {
    BruteResult res;
    st_path_dfs(inst, k + 1, caps.paths, [&](const std::vector<int>& path) {
        if (static_cast<int>(path.size()) != k + 1) return;  // k internal vertices
        BigInt len = 0, cost = 0;
        for (int ei : path) {
            len += inst.edges[static_cast<std::size_t>(ei)].length;
            cost += inst.edges[static_cast<std::size_t>(ei)].cost;
        }
        if (len <= inst.budget_length && cost <= inst.budget_cost) {
            ++res.count;
            if (!res.witness) res.witness = SolutionCertificate{CertKind::Path, path};
        }
    });
    res.yes = res.count > 0;
    return res;
}

}  // namespace sumpath
