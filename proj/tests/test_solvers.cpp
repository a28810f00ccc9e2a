#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sumpath/brute.hpp"
#include "sumpath/generators.hpp"
#include "sumpath/reductions_graph.hpp"
#include "sumpath/reductions_numeric.hpp"
#include "sumpath/rng.hpp"
#include "sumpath/solvers.hpp"

using namespace sumpath;

namespace {

SubsetSumInstance ss(std::initializer_list<int> items, int target) {
    SubsetSumInstance inst;
    for (int x : items) inst.items.push_back(BigInt(x));
    inst.target = target;
    return inst;
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

TEST_CASE("subset-sum solvers on the worked triple") {
    auto yes = ss({3, 5, 7}, 12);
    auto no = ss({3, 5, 7}, 11);
    SubsetSumInstance empty;
    empty.target = 0;

    for (auto* solver : {&solve_subset_sum_dp, &solve_subset_sum_mim}) {
        auto r1 = (*solver)(yes, SolverCaps{});
        REQUIRE(r1.yes);
        CHECK(check_certificate(yes, *r1.certificate));
        CHECK(!(*solver)(no, SolverCaps{}).yes);
        auto r3 = (*solver)(empty, SolverCaps{});
        CHECK(r3.yes);
        CHECK(r3.certificate->indices.empty());
    }
    // {5, 7} is the solving subset: indices 1, 2
    CHECK(solve_subset_sum_dp(yes).certificate->indices == std::vector<int>{1, 2});
}

TEST_CASE("dp cap error") {
    SubsetSumInstance big;
    big.items = {BigInt(1)};
    big.target = BigInt("100000000000000000000");
    CHECK_THROWS_WITH((void)solve_subset_sum_dp(big), "target too large for DP");
    SolverCaps caps;
    caps.mim_items_cap = 3;
    CHECK_THROWS_WITH((void)solve_subset_sum_mim(ss({1, 2, 3, 4}, 5), caps),
                      "too many items for meet-in-the-middle");
}

TEST_CASE("solver cross-agreement with certificates on random instances") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        SubsetSumInstance inst = gen_random_subset_sum(static_cast<int>(seed % 19), 111, seed);
        auto expect = brute_subset_sum(inst);
        auto dp = solve_subset_sum_dp(inst);
        auto mim = solve_subset_sum_mim(inst);
        CAPTURE(seed);
        CHECK(dp.yes == expect.yes);
        CHECK(mim.yes == expect.yes);
        if (expect.yes) {
            CHECK(check_certificate(inst, *dp.certificate));
            CHECK(check_certificate(inst, *mim.certificate));
        }
        CHECK(dp.stats.states <= inst.target.convert_to<std::uint64_t>() + 1);
    }
}

TEST_CASE("solve_ksum worked examples") {
    KSumInstance a;
    a.groups = {{BigInt(1), BigInt(2)}, {BigInt(3)}};
    a.target = 5;
    auto r = solve_ksum(a);
    REQUIRE(r.yes);
    CHECK(check_certificate(a, *r.certificate));

    KSumInstance b;
    b.groups = {{BigInt(1)}, {BigInt(1)}};
    b.target = 3;
    CHECK(!solve_ksum(b).yes);

    KSumInstance zeros;
    zeros.groups = {{BigInt(0)}, {BigInt(0)}, {BigInt(0)}};
    zeros.target = 0;
    CHECK(solve_ksum(zeros).yes);
}

TEST_CASE("solve_ksum agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        KSumInstance inst = gen_random_ksum(2 + static_cast<int>(seed % 4), 4, 60, seed);
        auto expect = brute_ksum(inst);
        auto got = solve_ksum(inst);
        CAPTURE(seed);
        CHECK(got.yes == expect.yes);
        if (got.yes) CHECK(check_certificate(inst, *got.certificate));
    }
}

TEST_CASE("joksch worked examples") {
    auto single = tiny_graph({{0, 1, 2, 3}}, 2, 0, 1, 2, 3);
    CHECK(solve_bicriteria_joksch(single).yes);
    single.budget_length = 1;
    CHECK(!solve_bicriteria_joksch(single).yes);

    // diamond with arms (1,5) and (5,1)
    auto diamond = tiny_graph({{0, 1, 1, 5}, {1, 3, 0, 0}, {0, 2, 5, 1}, {2, 3, 0, 0}}, 4, 0, 3, 3, 3);
    CHECK(!solve_bicriteria_joksch(diamond).yes);
    diamond.budget_length = 5;
    diamond.budget_cost = 5;
    auto r = solve_bicriteria_joksch(diamond);
    REQUIRE(r.yes);
    CHECK(check_certificate(diamond, *r.certificate));
}

TEST_CASE("joksch handles cycles and zero-length edges") {
    // 0 -> 1 -> 0 cycle of zero length, exit 1 -> 2
    auto g = tiny_graph({{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 2, 1, 1}}, 3, 0, 2, 1, 2);
    auto r = solve_bicriteria_joksch(g);
    REQUIRE(r.yes);
    CHECK(check_certificate(g, *r.certificate));
}

TEST_CASE("joksch agrees with brute force and is monotone in the budgets") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        BicriteriaInstance g = gen_random_bicriteria(7, 40, 12, seed);
        bool expect = brute_bicriteria_paths(g, g.num_vertices).yes;
        auto r = solve_bicriteria_joksch(g);
        CAPTURE(seed);
        CHECK(r.yes == expect);
        if (r.yes) CHECK(check_certificate(g, *r.certificate));
        CHECK(r.stats.states <= (g.budget_length.convert_to<std::uint64_t>() + 1) *
                                    static_cast<std::uint64_t>(g.num_vertices));

        BicriteriaInstance larger = g;
        larger.budget_length += 5;
        larger.budget_cost += 7;
        if (r.yes) CHECK(solve_bicriteria_joksch(larger).yes);
    }
}

TEST_CASE("joksch cap error") {
    auto g = tiny_graph({{0, 1, 1, 1}}, 2, 0, 1, 1, 1);
    g.budget_length = BigInt("123456789123456789");
    CHECK_THROWS_WITH((void)solve_bicriteria_joksch(g), "length budget too large for DP");
}

TEST_CASE("distinct-length DP worked cases") {
    // empty graph, s != t
    BicriteriaInstance empty;
    empty.num_vertices = 2;
    empty.source = 0;
    empty.sink = 1;
    empty.budget_length = 5;
    empty.budget_cost = 5;
    CHECK(!solve_bicriteria_distinct_dp(empty).yes);

    // single length value: agrees with joksch on random DAG-shaped gadgets
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        KSumInstance inst = gen_random_ksum(2 + static_cast<int>(rng.below(3)), 3, 25,
                                            rng.next_u64());
        auto [g, trace] = ksum_to_multigraph(inst);
        for (int tau : {1, 2}) {
            BicriteriaInstance ex = digit_expand(g, tau);
            CAPTURE(seed);
            CAPTURE(tau);
            auto a = solve_bicriteria_distinct_dp(ex);
            auto b = solve_bicriteria_joksch(ex);
            CHECK(a.yes == b.yes);
            CHECK(a.yes == brute_ksum(inst).yes);
            if (a.yes) CHECK(check_certificate(ex, *a.certificate));
        }
    }
}

TEST_CASE("distinct-length DP rejects cyclic graphs and too many lengths") {
    auto cyclic = tiny_graph({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 2, 1, 1}}, 3, 0, 2, 9, 9);
    CHECK_THROWS_WITH((void)solve_bicriteria_distinct_dp(cyclic), "cyclic graph");

    auto many = tiny_graph({{0, 1, 1, 0}, {1, 2, 2, 0}, {2, 3, 3, 0}, {3, 4, 4, 0}}, 5, 0, 4, 99, 99);
    SolverCaps caps;
    caps.distinct_length_cap = 3;
    CHECK_THROWS_WITH((void)solve_bicriteria_distinct_dp(many, caps),
                      "too many distinct edge lengths");
}

TEST_CASE("exact k-path meet-in-the-middle") {
    // degenerate k = 1
    ExactKPathInstance one;
    one.path_size = 1;
    one.layers = {{0, 1}};
    one.weight_bound = 5;
    one.target = 0;
    CHECK(solve_exact_kpath_mim(one).yes);
    one.target = 3;
    CHECK(!solve_exact_kpath_mim(one).yes);

    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        ExactKPathInstance inst = gen_random_exact_kpath(1 + static_cast<int>(seed % 4), 3, 31, seed);
        auto expect = brute_exact_kpath(inst);
        auto got = solve_exact_kpath_mim(inst);
        CAPTURE(seed);
        CHECK(got.yes == expect.yes);
        if (got.yes) CHECK(check_certificate(inst, *got.certificate));
    }

    ExactKPathInstance big;
    big.path_size = 2;
    big.layers = {{0}, {1}};
    big.weight_bound = 4;
    big.edges.push_back({0, 1, 4});
    big.target = 9;  // above k * W
    CHECK(!solve_exact_kpath_mim(big).yes);
}

TEST_CASE("solve_bicriteria_kpath matches brute k-internal search") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        BicriteriaInstance g = gen_random_bicriteria(5 + static_cast<int>(seed % 4), 40, 16, seed);
        for (int k = 1; k <= 3; ++k) {
            auto expect = brute_bicriteria_k_internal(g, k);
            auto got = solve_bicriteria_kpath(g, k);
            CAPTURE(seed);
            CAPTURE(k);
            CHECK(got.yes == expect.yes);
            if (got.yes) {
                REQUIRE(got.certificate.has_value());
                CHECK(got.certificate->indices.size() == static_cast<std::size_t>(k) + 1);
                CHECK(check_certificate(g, *got.certificate));
            }
        }
    }
}

TEST_CASE("kpath answers NO for the wrong internal-vertex count") {
    // the only feasible path has 2 internal vertices
    auto g = tiny_graph({{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}}, 4, 0, 3, 9, 9);
    CHECK(solve_bicriteria_kpath(g, 2).yes);
    CHECK(!solve_bicriteria_kpath(g, 1).yes);
    CHECK(!solve_bicriteria_kpath(g, 3).yes);

    // k = 1 chain within budgets
    auto chain = tiny_graph({{0, 1, 2, 2}, {1, 2, 2, 2}}, 3, 0, 2, 4, 4);
    CHECK(solve_bicriteria_kpath(chain, 1).yes);
}

TEST_CASE("or bundle solved sequentially") {
    OrBundle bundle = or_compose({ss({2}, 5), ss({2, 3}, 5)});
    auto r = solve_or_bundle(bundle, SubsetSumAlgo::Dp);
    CHECK(r.yes);
    CHECK(r.member == 1);
    CHECK(check_certificate(bundle.instances[1], *r.certificate));
    OrBundle no = or_compose({ss({2}, 5), ss({4}, 5)});
    CHECK(!solve_or_bundle(no, SubsetSumAlgo::Mim).yes);
}

TEST_CASE("brute oracle caps throw") {
    SubsetSumInstance big;
    for (int i = 0; i < 30; ++i) big.items.push_back(BigInt(i));
    big.target = 1;
    BruteCaps caps;
    caps.subsets = 1000;
    CHECK_THROWS((void)brute_subset_sum(big, caps));
}

TEST_CASE("yes certificates imply every solver answers yes") {
    for (std::uint64_t seed = 500; seed <= 560; ++seed) {
        SubsetSumInstance inst = gen_random_subset_sum(static_cast<int>(seed % 12), 60, seed);
        auto brute = brute_subset_sum(inst);
        if (!brute.yes) continue;
        REQUIRE(check_certificate(inst, *brute.witness));
        CHECK(solve_subset_sum_dp(inst).yes);
        CHECK(solve_subset_sum_mim(inst).yes);
    }
}
