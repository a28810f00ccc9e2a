#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "sumpath/brute.hpp"
#include "sumpath/generators.hpp"
#include "sumpath/reductions_graph.hpp"
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

// (length, cost) totals per simple s,t-path
std::vector<std::pair<BigInt, BigInt>> path_weights(const BicriteriaInstance& g) {
    std::vector<std::pair<BigInt, BigInt>> out;
    for (const auto& path : enumerate_st_paths(g, g.num_vertices)) {
        BigInt len = 0, cost = 0;
        for (int ei : path) {
            len += g.edges[static_cast<std::size_t>(ei)].length;
            cost += g.edges[static_cast<std::size_t>(ei)].cost;
        }
        out.push_back({len, cost});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("or_to_bicriteria single instance worked example") {
    auto [g, trace] = or_to_bicriteria(or_compose({ss({1, 2}, 3)}), BigInt(3));
    CHECK(g.budget_length == 3);
    CHECK(g.budget_cost == 6);
    CHECK(validate(g).empty());  // simple graph, no parallels

    auto weights = path_weights(g);
    REQUIRE(weights.size() == 4);  // take/skip per item
    // take-take: (1+2+0, 2+1+3) = (3, 6) is the only feasible one
    CHECK(weights.back() == std::pair<BigInt, BigInt>(BigInt(3), BigInt(6)));
    auto feasible = brute_bicriteria_paths(g, g.num_vertices);
    CHECK(feasible.count == 1);
    CHECK(solve_bicriteria_joksch(g).yes);
}

TEST_CASE("or_to_bicriteria infeasible member") {
    auto [g, trace] = or_to_bicriteria(or_compose({ss({1}, 3)}), BigInt(3));
    auto weights = path_weights(g);
    REQUIRE(weights.size() == 2);
    CHECK(!brute_bicriteria_paths(g, g.num_vertices).yes);
    CHECK(!solve_bicriteria_joksch(g).yes);
}

TEST_CASE("or_to_bicriteria decodes the YES member") {
    auto no = ss({2}, 5);       // 2 != 5
    auto yes = ss({2, 3}, 5);   // 2 + 3
    auto [g, trace] = or_to_bicriteria(or_compose({no, yes}), BigInt(5));
    auto r = solve_bicriteria_joksch(g);
    REQUIRE(r.yes);
    auto [member, subset] = decode_gadget_path(*r.certificate, g, trace);
    CHECK(member == 1);
    CHECK(check_certificate(yes, subset));
}

TEST_CASE("or_to_bicriteria rejects undersized bounds") {
    CHECK_THROWS_WITH((void)or_to_bicriteria(or_compose({ss({7}, 3)}), BigInt(3)),
                      "bound too small");
    CHECK_THROWS_WITH((void)or_to_bicriteria(or_compose({ss({1}, 9)}), BigInt(3)),
                      "bound too small");
}

TEST_CASE("or_to_bicriteria matches the member-wise OR on random bundles") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        std::vector<SubsetSumInstance> members;
        bool expect = false;
        BigInt M = 0;
        int count = 1 + static_cast<int>(rng.below(8));
        for (int i = 0; i < count; ++i) {
            auto m = gen_random_subset_sum(static_cast<int>(rng.below(7)), 50, rng.next_u64());
            expect = expect || brute_subset_sum(m).yes;
            if (m.target > M) M = m.target;
            for (const auto& z : m.items)
                if (z > M) M = z;
            members.push_back(std::move(m));
        }
        auto [g, trace] = or_to_bicriteria(or_compose(members), M);
        CAPTURE(t);
        CHECK(solve_bicriteria_joksch(g).yes == expect);
        CHECK(brute_bicriteria_paths(g, g.num_vertices).yes == expect);
    }
}

TEST_CASE("ksum_to_multigraph worked examples") {
    KSumInstance yes;
    yes.groups = {{BigInt(2)}, {BigInt(3)}};
    yes.target = 5;
    auto [g1, t1] = ksum_to_multigraph(yes);
    CHECK(g1.budget_length == 5);
    CHECK(g1.budget_cost == 5);
    CHECK(brute_bicriteria_paths(g1, g1.num_vertices).yes);

    KSumInstance no;
    no.groups = {{BigInt(2)}, {BigInt(2)}};
    no.target = 5;
    auto [g2, t2] = ksum_to_multigraph(no);
    CHECK(!brute_bicriteria_paths(g2, g2.num_vertices).yes);  // cost 6 > 5
    CHECK(!brute_ksum(no).yes);

    KSumInstance zeros;
    zeros.groups = {{BigInt(0)}, {BigInt(0)}, {BigInt(0)}};
    zeros.target = 0;
    auto [g3, t3] = ksum_to_multigraph(zeros);
    CHECK(brute_bicriteria_paths(g3, g3.num_vertices).yes);

    KSumInstance bad;
    bad.groups = {{BigInt(9)}, {BigInt(0)}};
    bad.target = 5;
    CHECK_THROWS_WITH((void)ksum_to_multigraph(bad), "element exceeds target");
}

TEST_CASE("ksum gadget forces both budgets tight on every feasible path") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        KSumInstance inst = gen_random_ksum(2 + static_cast<int>(rng.below(3)), 3, 30,
                                            rng.next_u64());
        auto [g, trace] = ksum_to_multigraph(inst);
        CHECK(validate(g).empty());
        for (const auto& path : enumerate_st_paths(g, g.num_vertices)) {
            BigInt len = 0, cost = 0;
            for (int ei : path) {
                len += g.edges[static_cast<std::size_t>(ei)].length;
                cost += g.edges[static_cast<std::size_t>(ei)].cost;
            }
            if (len <= g.budget_length && cost <= g.budget_cost) {
                CHECK(len == g.budget_length);
                CHECK(cost == g.budget_cost);
            }
        }
    }
}

TEST_CASE("digit_expand worked examples") {
    // a single (2,3) edge under T=5, tau=1: base 5, five unit edges
    BicriteriaInstance g;
    g.num_vertices = 2;
    g.source = 0;
    g.sink = 1;
    g.budget_length = 5;
    g.budget_cost = 5;
    g.edges.push_back({0, 1, BigInt(2), BigInt(3)});
    BicriteriaInstance ex = digit_expand(g, 1);
    CHECK(ex.edges.size() == 5);
    int ones_len = 0, ones_cost = 0;
    for (const auto& e : ex.edges) {
        if (e.length == 1 && e.cost == 0) ++ones_len;
        if (e.length == 0 && e.cost == 1) ++ones_cost;
    }
    CHECK(ones_len == 2);
    CHECK(ones_cost == 3);

    // zero edge stays a single (0,0) edge
    BicriteriaInstance z = g;
    z.edges = {{0, 1, BigInt(0), BigInt(0)}};
    BicriteriaInstance ez = digit_expand(z, 3);
    REQUIRE(ez.edges.size() == 1);
    CHECK(ez.edges[0].length == 0);
    CHECK(ez.edges[0].cost == 0);
}

TEST_CASE("digit_expand preserves the path weight multiset") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        KSumInstance inst = gen_random_ksum(2 + static_cast<int>(rng.below(2)), 3, 25,
                                            rng.next_u64());
        auto [g, trace] = ksum_to_multigraph(inst);
        for (int tau : {1, 2, 3}) {
            BicriteriaInstance ex = digit_expand(g, tau);
            CAPTURE(t);
            CAPTURE(tau);
            CHECK(path_weights(ex) == path_weights(g));
            CHECK(validate(ex).empty());

            std::set<BigInt> lens, costs;
            for (const auto& e : ex.edges) {
                lens.insert(e.length);
                costs.insert(e.cost);
            }
            CHECK(lens.size() <= static_cast<std::size_t>(tau) + 1);
            CHECK(costs.size() <= static_cast<std::size_t>(tau) + 1);
        }
    }
}

TEST_CASE("digit_expand keeps feasibility, including the B^tau = T corner") {
    // T = 4, tau = 2 gives B = 2 and a weight equal to B^tau
    KSumInstance inst;
    inst.groups = {{BigInt(0), BigInt(4)}, {BigInt(0)}};
    inst.target = 4;
    auto [g, trace] = ksum_to_multigraph(inst);
    for (int tau : {1, 2, 3}) {
        BicriteriaInstance ex = digit_expand(g, tau);
        CHECK(solve_bicriteria_joksch(ex).yes == brute_ksum(inst).yes);
    }
}

TEST_CASE("exactpath_to_bicriteria single-edge examples") {
    ExactKPathInstance inst;
    inst.path_size = 2;
    inst.layers = {{0}, {1}};
    inst.weight_bound = 5;
    inst.edges.push_back({0, 1, 4});
    inst.target = 4;
    auto list = exactpath_to_bicriteria(inst);
    REQUIRE(list.size() == 1);
    // budgets force weight-T equality: L = T, C = (k-1)W - T
    CHECK(list[0].budget_length == 4);
    CHECK(list[0].budget_cost == 1);
    CHECK(brute_bicriteria_paths(list[0], list[0].num_vertices).yes);

    inst.target = 3;
    auto list2 = exactpath_to_bicriteria(inst);
    REQUIRE(list2.size() == 1);
    CHECK(!brute_bicriteria_paths(list2[0], list2[0].num_vertices).yes);
}

TEST_CASE("exactpath_to_bicriteria forces tight budgets on three layers") {
    ExactKPathInstance inst;
    inst.path_size = 3;
    inst.layers = {{0}, {1}, {2}};
    inst.weight_bound = 7;
    inst.edges.push_back({0, 1, 3});
    inst.edges.push_back({1, 2, 2});
    inst.target = 5;  // exactly the path sum
    auto list = exactpath_to_bicriteria(inst);
    REQUIRE(list.size() == 1);
    const auto& g = list[0];
    auto paths = enumerate_st_paths(g, g.num_vertices);
    REQUIRE(paths.size() == 1);
    BigInt len = 0, cost = 0;
    for (int ei : paths[0]) {
        len += g.edges[static_cast<std::size_t>(ei)].length;
        cost += g.edges[static_cast<std::size_t>(ei)].cost;
    }
    CHECK(len == g.budget_length);
    CHECK(cost == g.budget_cost);
}

TEST_CASE("exactpath_to_bicriteria equals the exact answer on random layered graphs") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        ExactKPathInstance inst = gen_random_exact_kpath(1 + static_cast<int>(seed % 4), 3, 9, seed);
        bool expect = brute_exact_kpath(inst).yes;
        bool got = false;
        for (const auto& g : exactpath_to_bicriteria(inst))
            got = got || brute_bicriteria_paths(g, g.num_vertices).yes;
        CAPTURE(seed);
        CHECK(got == expect);
    }
}

TEST_CASE("gadget outputs are DAGs") {
    // canonical sortedness plus acyclicity, via the distinct-length solver's
    // topological sort (it throws on cycles)
    auto [g, trace] = or_to_bicriteria(or_compose({ss({1, 2}, 3), ss({2}, 2)}), BigInt(3));
    CHECK_NOTHROW((void)solve_bicriteria_distinct_dp(g, [] {
        SolverCaps caps;
        caps.distinct_length_cap = 8;
        return caps;
    }()));
}

TEST_CASE("trace serialization round-trips") {
    auto [g, trace] = or_to_bicriteria(or_compose({ss({1, 2}, 3)}), BigInt(3));
    std::string once = to_json(trace).dump();
    GadgetTrace back = gadget_trace_from_json(Json::parse(once));
    CHECK(once == to_json(back).dump());
    CHECK(back.edges.size() == g.edges.size());
}
