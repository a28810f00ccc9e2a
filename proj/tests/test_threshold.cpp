#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sumpath/brute.hpp"
#include "sumpath/generators.hpp"
#include "sumpath/rng.hpp"
#include "sumpath/solvers.hpp"
#include "sumpath/threshold.hpp"

using namespace sumpath;

namespace {

// all index subsets of size k from a universe of size n
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::int64_t table_sum(const std::vector<std::int64_t>& w, const std::vector<int>& xs) {
    std::int64_t s = 0;
    for (int i : xs) s += w[static_cast<std::size_t>(i)];
    return s;
}

BicriteriaInstance tiny_graph(std::initializer_list<std::array<int, 4>> edges, int n, int s,
                              int t, int L, int C) {
    BicriteriaInstance g;
    g.num_vertices = n;
    g.source = s;
    g.sink = t;
    g.budget_length = L;
    g.budget_cost = C;
    for (const auto& e : edges) g.edges.push_back({e[0], e[1], BigInt(e[2]), BigInt(e[3])});
    sort_edges_canonical(g.edges);
    return g;
}

}  // namespace

TEST_CASE("prefix operator examples") {
    // W = 8 encodes in 3 bits; [5]_2 = floor(5/2) = 2
    CHECK(msb_prefix(5, 2, 3) == 2);
    CHECK(msb_prefix(5, 3, 3) == 5);
    CHECK(msb_prefix(5, 1, 3) == 1);
    CHECK(msb_prefix(0, 2, 3) == 0);
}

TEST_CASE("carry bound: [sum]_x - k <= sum of prefixes <= [sum]_x") {
    Rng rng(5);
    const int width = 6;  // W = 64
    for (int t = 0; t < 400; ++t) {
        int k = 1 + static_cast<int>(rng.below(4));
        std::vector<std::int64_t> a;
        std::int64_t total = 0;
        for (int i = 0; i < k; ++i) {
            a.push_back(static_cast<std::int64_t>(rng.below(65)));
            total += a.back();
        }
        if (total > 64) continue;  // prefixes defined on {0..W}
        for (int x = 1; x <= width; ++x) {
            std::int64_t lhs = msb_prefix(total, x, width);
            std::int64_t mid = 0;
            for (std::int64_t v : a) mid += msb_prefix(v, x, width);
            CHECK(mid <= lhs);
            CHECK(mid >= lhs - k);
        }
    }
}

TEST_CASE("scale_thresholds worked example: w(X) = L matched by the a = 0 entry") {
    std::vector<std::int64_t> w{3, 1};
    auto family = scale_thresholds(w, 4, 2, 8);
    bool matched = false;
    for (const auto& e : family)
        if (!e.scaled && table_sum(e.weights, {0, 1}) == e.target && e.a == 0) matched = true;
    CHECK(matched);
}

TEST_CASE("scale_thresholds single-dimension property, exhaustive") {
    Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));              // universe size <= 6
        int k = 1 + static_cast<int>(rng.below(std::min(n, 3))); // subset size <= 3
        std::int64_t W = 4 + static_cast<std::int64_t>(rng.below(61));  // <= 64
        std::vector<std::int64_t> w(static_cast<std::size_t>(n));
        for (auto& x : w) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
        std::int64_t L = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));

        auto family = scale_thresholds(w, L, k, W);
        for (const auto& X : k_subsets(n, k)) {
            bool within = table_sum(w, X) <= L;
            bool matched = false;
            for (const auto& e : family)
                if (table_sum(e.weights, X) == e.target) matched = true;
            CAPTURE(trial);
            CAPTURE(L);
            CAPTURE(W);
            CHECK(within == matched);
        }
    }
}

TEST_CASE("scale_thresholds drops negative targets and validates inputs") {
    std::vector<std::int64_t> w{1};
    auto family = scale_thresholds(w, 1, 2, 8);
    for (const auto& e : family) CHECK(e.target >= 0);
    CHECK_THROWS((void)scale_thresholds(w, 9, 2, 8));  // budget above the cap
}

TEST_CASE("cross_family size and 2-D property") {
    std::vector<std::int64_t> w1{2, 3}, w2{1, 4};
    auto f1 = scale_thresholds(w1, 4, 2, 8);
    auto f2 = scale_thresholds(w2, 5, 2, 8);
    ThresholdFamily fam = cross_family(f1, f2);
    CHECK(fam.entries.size() == f1.size() * f2.size());

    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        int k = 1 + static_cast<int>(rng.below(std::min(n, 3)));
        std::int64_t W = 4 + static_cast<std::int64_t>(rng.below(29));  // <= 32
        std::vector<std::int64_t> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& x : a) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
        for (auto& x : b) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
        std::int64_t L = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
        std::int64_t C = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
        ThresholdFamily f = cross_family(scale_thresholds(a, L, k, W), scale_thresholds(b, C, k, W));
        // q stays within the analytic bound (before negative-target drops)
        int width = 0;
        while ((1ll << width) < W) ++width;
        std::size_t bound = static_cast<std::size_t>(4 * k + 1 + width * 2 * k);
        CHECK(f.entries.size() <= bound * bound);
        for (const auto& X : k_subsets(n, k)) {
            bool within = table_sum(a, X) <= L && table_sum(b, X) <= C;
            bool matched = false;
            for (const auto& e : f.entries)
                if (table_sum(e.w1, X) == e.t1 && table_sum(e.w2, X) == e.t2) matched = true;
            CHECK(within == matched);
        }
    }
}

TEST_CASE("both budgets violated matches no entry") {
    std::vector<std::int64_t> w1{8, 8}, w2{8, 8};
    ThresholdFamily f = cross_family(scale_thresholds(w1, 4, 2, 16), scale_thresholds(w2, 4, 2, 16));
    for (const auto& e : f.entries)
        CHECK(!(table_sum(e.w1, {0, 1}) == e.t1 && table_sum(e.w2, {0, 1}) == e.t2));
}

TEST_CASE("pair_to_single worked values") {
    ExactBicritKPathInstance inst;
    inst.path_size = 2;
    inst.layers = {{0}, {1}};
    inst.weight_bound = 3;
    inst.edges.push_back({0, 1, 0, 0});
    inst.target1 = 0;
    inst.target2 = 0;
    ExactKPathInstance flat = pair_to_single(inst, 2, 3);
    CHECK(flat.edges[0].weight == 0);  // f(0,0) = 0
    CHECK(flat.weight_bound == 39);    // 2kW^2 + W

    auto f = [](std::int64_t w1, std::int64_t w2, int k, std::int64_t W) {
        return w2 + w1 * 2 * k * W;
    };
    CHECK(f(1, 2, 2, 3) == 14);
    CHECK(f(2, 1, 2, 3) == 25);
    CHECK(f(1, 2, 2, 3) + f(2, 1, 2, 3) == f(3, 3, 2, 3));
}

TEST_CASE("pair flattening: injectivity and k-sum compatibility, exhaustive") {
    for (int k : {1, 2, 3}) {
        for (std::int64_t W : {1, 2, 5, 8}) {
            auto f = [&](std::int64_t w1, std::int64_t w2) { return w2 + w1 * 2 * k * W; };
            std::set<std::int64_t> seen;
            for (std::int64_t w1 = 0; w1 <= W; ++w1)
                for (std::int64_t w2 = 0; w2 <= W; ++w2) CHECK(seen.insert(f(w1, w2)).second);

            // any k pairs: sums agree in both coordinates iff flattened sums agree
            Rng rng(static_cast<std::uint64_t>(k * 100 + W));
            for (int trial = 0; trial < 200; ++trial) {
                std::int64_t s1 = 0, s2 = 0, sf = 0;
                for (int i = 0; i < k; ++i) {
                    std::int64_t a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
                    std::int64_t b = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
                    s1 += a;
                    s2 += b;
                    sf += f(a, b);
                }
                std::int64_t t1 = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
                std::int64_t t2 = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W) + 1));
                CHECK(((s1 == t1 && s2 == t2) == (sf == f(t1, t2))));
            }
        }
    }
}

TEST_CASE("pair flattening preserves the exact-bicriteria answer") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        int k = 2 + static_cast<int>(rng.below(3));
        ExactBicritKPathInstance inst;
        inst.path_size = k;
        inst.weight_bound = 6;
        int next = 0;
        for (int layer = 0; layer < k; ++layer) {
            std::vector<int> vs;
            int width = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < width; ++i) vs.push_back(next++);
            inst.layers.push_back(std::move(vs));
        }
        for (int layer = 0; layer + 1 < k; ++layer)
            for (int u : inst.layers[static_cast<std::size_t>(layer)])
                for (int v : inst.layers[static_cast<std::size_t>(layer + 1)])
                    if (rng.below(100) < 70)
                        inst.edges.push_back({u, v, static_cast<std::int64_t>(rng.below(7)),
                                              static_cast<std::int64_t>(rng.below(7))});
        inst.target1 = static_cast<std::int64_t>(rng.below(13));
        inst.target2 = static_cast<std::int64_t>(rng.below(13));
        // targets must sit in {0..W} for the flattening contract
        inst.target1 = std::min<std::int64_t>(inst.target1, inst.weight_bound);
        inst.target2 = std::min<std::int64_t>(inst.target2, inst.weight_bound);

        ExactKPathInstance flat = pair_to_single(inst, k, inst.weight_bound);
        CAPTURE(seed);
        CHECK(brute_exact_bicrit_kpath(inst).yes == brute_exact_kpath(flat).yes);
    }
}

TEST_CASE("color_code with k = 1 emits a single complete partition") {
    BicriteriaInstance g = tiny_graph({{0, 1, 1, 1}, {1, 2, 1, 1}}, 3, 0, 2, 5, 5);
    auto copies = color_code(g, 1);
    REQUIRE(copies.size() == 1);
    CHECK(copies[0].graph.edges.size() == 2);
}

TEST_CASE("color_code keeps a 2-internal-vertex path in some ordered copy") {
    // s -> a -> b -> t
    BicriteriaInstance g = tiny_graph({{0, 1, 1, 1}, {1, 2, 2, 2}, {2, 3, 3, 3}}, 4, 0, 3, 9, 9);
    auto copies = color_code(g, 2);
    CHECK(copies.size() == 4);  // 2^2 ordered colorings
    int full = 0;
    for (const auto& copy : copies)
        if (copy.graph.edges.size() == 3) ++full;
    CHECK(full == 1);  // only a in V_1, b in V_2 keeps all three edges
}

TEST_CASE("color_code cap error suggests the randomized strategy") {
    BicriteriaInstance g = gen_random_bicriteria(30, 20, 5, 3);
    ColorStrategy strategy;
    strategy.coloring_cap = 1000;
    CHECK_THROWS_WITH((void)color_code(g, 3, strategy), "use randomized strategy");
}

TEST_CASE("randomized color coding finds planted paths") {
    BicriteriaInstance g = tiny_graph({{0, 1, 1, 1}, {1, 2, 2, 2}, {2, 3, 3, 3}}, 4, 0, 3, 9, 9);
    ColorStrategy strategy;
    strategy.kind = ColorStrategy::Kind::Randomized;
    strategy.trials = 16;
    strategy.seed = 9;
    auto copies = color_code(g, 2, strategy);
    CHECK(copies.size() == 32);  // trials * 2!
    bool full = false;
    for (const auto& copy : copies) full = full || copy.graph.edges.size() == 3;
    CHECK(full);  // 16 trials at success probability 1/2 each
}

TEST_CASE("absorb_endpoints folds a chain into a single edge") {
    BicriteriaInstance g = tiny_graph({{0, 1, 1, 1}, {1, 2, 2, 2}, {2, 3, 3, 3}}, 4, 0, 3, 9, 9);
    auto copies = color_code(g, 2);
    for (const auto& copy : copies) {
        if (copy.graph.edges.size() != 3) continue;
        LayeredBiGraph absorbed = absorb_endpoints(copy, 2);
        REQUIRE(absorbed.edges.size() == 1);
        CHECK(absorbed.edges[0].w1 == 6);
        CHECK(absorbed.edges[0].w2 == 6);
        CHECK(absorbed.edges[0].orig_s_edge >= 0);
        CHECK(absorbed.edges[0].orig_t_edge >= 0);
    }
}

TEST_CASE("absorb_endpoints deletes V_1 vertices with no s-edge") {
    // two V_1 candidates, only one reachable from s
    BicriteriaInstance g =
        tiny_graph({{0, 1, 1, 1}, {1, 3, 1, 1}, {2, 3, 1, 1}, {3, 4, 0, 0}}, 5, 0, 4, 9, 9);
    ColorPartition part;
    part.class_of = {0, 1, 1, 2, 0};
    ColoredCopy copy;
    copy.graph = g;  // already layered under this partition
    copy.partition = part;
    for (std::size_t i = 0; i < g.edges.size(); ++i) copy.orig_edge.push_back(static_cast<int>(i));
    LayeredBiGraph absorbed = absorb_endpoints(copy, 2);
    CHECK(absorbed.layers[0].size() == 1);  // vertex 2 dropped
}

TEST_CASE("absorb_endpoints preserves s,t-path weight multisets") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        BicriteriaInstance g = gen_random_bicriteria(7, 45, 9, rng.next_u64());
        int k = 2 + static_cast<int>(rng.below(2));
        for (const auto& copy : color_code(g, k)) {
            // weights of surviving s,t-paths with exactly k internal vertices
            std::multiset<std::pair<BigInt, BigInt>> before;
            for (const auto& path : enumerate_st_paths(copy.graph, k + 1)) {
                if (static_cast<int>(path.size()) != k + 1) continue;
                BigInt len = 0, cost = 0;
                for (int ei : path) {
                    len += copy.graph.edges[static_cast<std::size_t>(ei)].length;
                    cost += copy.graph.edges[static_cast<std::size_t>(ei)].cost;
                }
                before.insert({len, cost});
            }
            LayeredBiGraph absorbed = absorb_endpoints(copy, k);
            std::multiset<std::pair<BigInt, BigInt>> after;
            ExactKPathInstance skeleton;  // reuse the layered brute force
            skeleton.path_size = absorbed.num_layers();
            skeleton.layers = absorbed.layers;
            for (const auto& e : absorbed.edges) skeleton.edges.push_back({e.tail, e.head, 0});
            // enumerate layered paths directly
            std::vector<std::vector<int>> out(absorbed.source_vertex.size());
            for (std::size_t i = 0; i < absorbed.edges.size(); ++i)
                out[static_cast<std::size_t>(absorbed.edges[i].tail)].push_back(static_cast<int>(i));
            auto rec = [&](auto&& self, int v, int layer, BigInt w1, BigInt w2) -> void {
                if (layer == absorbed.num_layers()) {
                    after.insert({w1, w2});
                    return;
                }
                for (int ei : out[static_cast<std::size_t>(v)]) {
                    const LayeredEdge& e = absorbed.edges[static_cast<std::size_t>(ei)];
                    self(self, e.head, layer + 1, w1 + e.w1, w2 + e.w2);
                }
            };
            if (!absorbed.layers.empty())
                for (int v : absorbed.layers[0]) rec(rec, v, 1, 0, 0);
            CAPTURE(trial);
            CHECK(before == after);
        }
    }
}

TEST_CASE("pipeline worked examples") {
    // single mid-vertex chain within budgets: some exact instance is YES
    BicriteriaInstance g = tiny_graph({{0, 1, 2, 3}, {1, 2, 1, 1}}, 3, 0, 2, 5, 5);
    bool any_yes = false;
    for (const auto& po : bicriteria_to_exact_instances(g, 1))
        any_yes = any_yes || brute_exact_kpath(po.instance).yes;
    CHECK(any_yes);

    // budgets strictly below any path weight: all instances NO
    BicriteriaInstance tight = tiny_graph({{0, 1, 2, 3}, {1, 2, 1, 1}}, 3, 0, 2, 2, 2);
    for (const auto& po : bicriteria_to_exact_instances(tight, 1))
        CHECK(!brute_exact_kpath(po.instance).yes);
}

TEST_CASE("pipeline OR equals brute force on random graphs") {
    Rng rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        BicriteriaInstance g = gen_random_bicriteria(5 + static_cast<int>(rng.below(4)), 40, 16,
                                                     rng.next_u64());
        for (int k = 1; k <= 3; ++k) {
            bool expect = brute_bicriteria_k_internal(g, k).yes;
            bool got = false;
            for (const auto& po : bicriteria_to_exact_instances(g, k))
                got = got || brute_exact_kpath(po.instance).yes;
            CAPTURE(trial);
            CAPTURE(k);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("pipeline instances validate and carry provenance") {
    BicriteriaInstance g = gen_random_bicriteria(6, 50, 8, 17);
    auto outputs = bicriteria_to_exact_instances(g, 2);
    for (const auto& po : outputs) {
        CHECK(validate(po.instance).empty());
        CHECK(po.entry >= 0);
    }
}
