#include "sumpath/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sumpath/json_io.hpp"
#include "sumpath/rng.hpp"

namespace sumpath {

CnfFormula gen_random_cnf(int num_vars, int num_clauses, int width, std::uint64_t seed) {
    if (num_vars < 1 || num_clauses < 0 || width < 1)
        throw std::invalid_argument("bad CNF generator parameters");
    Rng rng(seed);
    CnfFormula phi;
    phi.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
        int w = std::min(width, num_vars);
        std::set<int> vars;
        while (static_cast<int>(vars.size()) < w)
            vars.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars))) + 1);
        std::vector<int> clause;
        for (int v : vars) clause.push_back(rng.coin() ? v : -v);
        phi.clauses.push_back(std::move(clause));
    }
    phi.occurrence_bound = compute_occurrence_bound(phi.num_vars, phi.clauses);
    return phi;
}

CspInstance gen_random_csp(int num_vars, int universe_bits, int num_constraints,
                           std::uint64_t seed, int item_budget) {
    if (num_vars < 1 || universe_bits < 1 || num_constraints < 0)
        throw std::invalid_argument("bad CSP generator parameters");
    Rng rng(seed);
    CspInstance psi;
    psi.num_vars = num_vars;
    psi.universe_bits = universe_bits;
    int universe = 1 << universe_bits;

    int items_used = num_vars * universe;  // variable items are fixed
    for (int c = 0; c < num_constraints; ++c) {
        CspConstraint cc;
        int arity = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars))) + 1;
        std::set<int> scope;
        while (static_cast<int>(scope.size()) < arity)
            scope.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars))));
        cc.vars.assign(scope.begin(), scope.end());

        std::uint64_t joint = 1;
        for (int i = 0; i < arity; ++i) joint *= static_cast<std::uint64_t>(universe);
        int max_tuples = static_cast<int>(std::min<std::uint64_t>(joint, 8));
        if (item_budget > 0)
            max_tuples = std::min(max_tuples, std::max(item_budget - items_used, 0));
        int want = max_tuples > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(max_tuples) + 1)) : 0;

        std::set<std::vector<int>> chosen;
        for (int t = 0; t < want; ++t) {
            std::vector<int> tuple;
            for (int i = 0; i < arity; ++i)
                tuple.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(universe))) + 1);
            chosen.insert(std::move(tuple));
        }
        cc.tuples.assign(chosen.begin(), chosen.end());
        items_used += static_cast<int>(cc.tuples.size());
        psi.constraints.push_back(std::move(cc));
    }

    std::vector<int> degree(static_cast<std::size_t>(num_vars), 0);
    for (const auto& c : psi.constraints) {
        psi.arity_bound = std::max(psi.arity_bound, static_cast<int>(c.vars.size()));
        for (int v : c.vars) ++degree[static_cast<std::size_t>(v)];
    }
    for (int d : degree) psi.degree_bound = std::max(psi.degree_bound, d);
    return psi;
}

SubsetSumInstance gen_random_subset_sum(int num_items, std::uint64_t max_item,
                                        std::uint64_t seed) {
    if (num_items < 0) throw std::invalid_argument("bad subset-sum generator parameters");
    Rng rng(seed);
    SubsetSumInstance inst;
    for (int i = 0; i < num_items; ++i) inst.items.push_back(BigInt(rng.below(max_item + 1)));
    canonicalize_items(inst.items);
    if (rng.coin()) {
        // planted: target is the sum of a random subset
        BigInt t = 0;
        for (const auto& x : inst.items)
            if (rng.coin()) t += x;
        inst.target = t;
    } else {
        BigInt total = std::accumulate(inst.items.begin(), inst.items.end(), BigInt(0));
        inst.target = total > 0 ? BigInt(rng.next_u64()) % (total + 1) : BigInt(0);
    }
    return inst;
}

KSumInstance gen_random_ksum(int k, int group_size, std::uint64_t max_value, std::uint64_t seed) {
    if (k < 2 || group_size < 1) throw std::invalid_argument("bad k-SUM generator parameters");
    Rng rng(seed);
    KSumInstance inst;
    for (int g = 0; g < k; ++g) {
        std::set<BigInt> group;
        for (int i = 0; i < group_size; ++i) group.insert(BigInt(rng.below(max_value + 1)));
        inst.groups.emplace_back(group.begin(), group.end());
    }
    if (rng.coin()) {
        BigInt t = 0;
        for (const auto& g : inst.groups) t += g[rng.below(g.size())];
        inst.target = t;
    } else {
        inst.target = BigInt(rng.below(static_cast<std::uint64_t>(k) * max_value + 1));
    }
    // keep every element usable so the graph reductions apply directly
    for (const auto& g : inst.groups)
        if (!g.empty() && g.back() > inst.target) inst.target = g.back();
    return inst;
}

BicriteriaInstance gen_random_bicriteria(int num_vertices, int edge_percent,
                                         std::uint64_t max_weight, std::uint64_t seed) {
    if (num_vertices < 2) throw std::invalid_argument("need at least 2 vertices");
    Rng rng(seed);
    BicriteriaInstance inst;
    inst.num_vertices = num_vertices;
    inst.source = 0;
    inst.sink = num_vertices - 1;
    for (int u = 0; u < num_vertices; ++u)
        for (int v = 0; v < num_vertices; ++v) {
            if (u == v) continue;
            if (rng.below(100) >= static_cast<std::uint64_t>(edge_percent)) continue;
            inst.edges.push_back({u, v, BigInt(rng.below(max_weight + 1)), BigInt(rng.below(max_weight + 1))});
        }
    sort_edges_canonical(inst.edges);

    // random walk from s; if it reaches t its weight anchors the budgets
    BigInt len = 0, cost = 0;
    int at = inst.source;
    std::set<int> seen{at};
    bool anchored = false;
    for (int step = 0; step < num_vertices; ++step) {
        std::vector<int> outs;
        for (std::size_t i = 0; i < inst.edges.size(); ++i)
            if (inst.edges[i].tail == at && !seen.count(inst.edges[i].head))
                outs.push_back(static_cast<int>(i));
        if (outs.empty()) break;
        int pick = outs[rng.below(outs.size())];
        len += inst.edges[static_cast<std::size_t>(pick)].length;
        cost += inst.edges[static_cast<std::size_t>(pick)].cost;
        at = inst.edges[static_cast<std::size_t>(pick)].head;
        seen.insert(at);
        if (at == inst.sink) {
            anchored = true;
            break;
        }
    }
    if (anchored) {
        // slack in [-W, W] on both budgets
        auto slack = [&]() {
            return BigInt(rng.below(2 * max_weight + 1)) - BigInt(max_weight);
        };
        inst.budget_length = len + slack();
        inst.budget_cost = cost + slack();
        if (inst.budget_length < 0) inst.budget_length = 0;
        if (inst.budget_cost < 0) inst.budget_cost = 0;
    } else {
        inst.budget_length = BigInt(rng.below(max_weight * num_vertices + 1));
        inst.budget_cost = BigInt(rng.below(max_weight * num_vertices + 1));
    }
    return inst;
}

ExactKPathInstance gen_random_exact_kpath(int path_size, int layer_width, std::int64_t max_weight,
                                          std::uint64_t seed) {
    if (path_size < 1 || layer_width < 1 || max_weight < 0)
        throw std::invalid_argument("bad exact-path generator parameters");
    Rng rng(seed);
    ExactKPathInstance inst;
    inst.path_size = path_size;
    inst.weight_bound = max_weight;
    int next = 0;
    for (int layer = 0; layer < path_size; ++layer) {
        std::vector<int> vs;
        int width = static_cast<int>(rng.below(static_cast<std::uint64_t>(layer_width))) + 1;
        for (int i = 0; i < width; ++i) vs.push_back(next++);
        inst.layers.push_back(std::move(vs));
    }
    for (int layer = 0; layer + 1 < path_size; ++layer)
        for (int u : inst.layers[static_cast<std::size_t>(layer)])
            for (int v : inst.layers[static_cast<std::size_t>(layer + 1)]) {
                if (rng.below(100) < 70)
                    inst.edges.push_back({u, v, static_cast<std::int64_t>(rng.below(
                                                    static_cast<std::uint64_t>(max_weight) + 1))});
            }
    if (path_size == 1) {
        inst.target = 0;
        return inst;
    }
    if (rng.coin()) {
        // plant a random layered path's weight when one exists
        auto lo = inst.layer_of();
        std::int64_t total = 0;
        int at = -1;
        bool ok = true;
        for (int layer = 0; ok && layer + 1 < path_size; ++layer) {
            std::vector<int> outs;
            for (std::size_t i = 0; i < inst.edges.size(); ++i) {
                const ExactEdge& e = inst.edges[i];
                if (lo[static_cast<std::size_t>(e.tail)] != layer + 1) continue;
                if (layer > 0 && e.tail != at) continue;
                outs.push_back(static_cast<int>(i));
            }
            if (outs.empty()) {
                ok = false;
                break;
            }
            int pick = outs[rng.below(outs.size())];
            total += inst.edges[static_cast<std::size_t>(pick)].weight;
            at = inst.edges[static_cast<std::size_t>(pick)].head;
        }
        inst.target = ok ? total : static_cast<std::int64_t>(rng.below(
                                       static_cast<std::uint64_t>(max_weight) * path_size + 1));
    } else {
        inst.target = static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(max_weight) * path_size + 1));
    }
    return inst;
}

CspInstance paper_example_csp() {
    CspInstance psi;
    psi.num_vars = 3;
    psi.universe_bits = 1;  // universe {1, 2}
    psi.constraints.push_back({{0, 1}, {{1, 1}, {2, 2}}});          // x1 = x2
    psi.constraints.push_back({{1, 2}, {{1, 2}, {2, 1}}});          // x2 != x3
    psi.constraints.push_back({{0, 2}, {{1, 1}, {2, 1}, {2, 2}}});  // x1 = 1 -> x3 = 1
    psi.degree_bound = 2;
    psi.arity_bound = 2;
    return psi;
}

}  // namespace sumpath
