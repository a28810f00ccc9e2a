#include "sumpath/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sumpath {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::uint64_t nanos() const {
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                              std::chrono::steady_clock::now() - start_)
                                              .count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// fixed-width bit rows for the subset-sum table
struct BitRow {
    std::vector<std::uint64_t> words;
    explicit BitRow(std::size_t bits) : words((bits + 63) / 64, 0) {}
    bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words[i >> 6] |= 1ull << (i & 63); }
    // this |= other << shift, truncated to the row width
    void or_shifted(const BitRow& other, std::size_t shift) {
        std::size_t word_shift = shift >> 6;
        unsigned bit_shift = static_cast<unsigned>(shift & 63);
        for (std::size_t i = words.size(); i-- > word_shift;) {
            std::uint64_t v = other.words[i - word_shift] << bit_shift;
            if (bit_shift && i - word_shift > 0)
                v |= other.words[i - word_shift - 1] >> (64 - bit_shift);
            words[i] |= v;
        }
    }
    void or_rows(const BitRow& other) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Subset Sum
// ---------------------------------------------------------------------------

SolveResult solve_subset_sum_dp(const SubsetSumInstance& inst, const SolverCaps& caps) {
    Stopwatch watch;
    if (inst.target < 0) return {};
    if (inst.target > caps.dp_target_cap) throw std::runtime_error("target too large for DP");
    std::size_t width = inst.target.convert_to<std::size_t>() + 1;
    std::size_t n = inst.items.size();
    if (static_cast<double>(width) * static_cast<double>(n + 1) > 6e9)
        throw std::runtime_error("target too large for DP");

    // reach[i] = sums formable from items[i..n); kept per suffix so the
    // witness can be rebuilt toward the lexicographically smallest index set
    std::vector<BitRow> reach(n + 1, BitRow(width));
    reach[n].set(0);
    for (std::size_t i = n; i-- > 0;) {
        reach[i] = reach[i + 1];
        if (inst.items[i] <= inst.target)
            reach[i].or_shifted(reach[i + 1], inst.items[i].convert_to<std::size_t>());
    }

    SolveResult res;
    res.stats.states = width;
    res.yes = reach[0].get(width - 1);
    if (res.yes) {
        SolutionCertificate cert{CertKind::Subset, {}};
        std::size_t remaining = width - 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (inst.items[i] > inst.target) continue;
            std::size_t x = inst.items[i].convert_to<std::size_t>();
            if (x <= remaining && reach[i + 1].get(remaining - x)) {
                cert.indices.push_back(static_cast<int>(i));
                remaining -= x;
            }
        }
        res.certificate = std::move(cert);
    }
    res.stats.nanos = watch.nanos();
    return res;
}

namespace {

struct SumEntry {
    BigInt sum;
    std::uint64_t mask;
    bool operator<(const SumEntry& o) const {
        if (sum != o.sum) return sum < o.sum;
        return mask < o.mask;
    }
};

std::vector<SumEntry> half_sums(const std::vector<BigInt>& items, std::size_t begin,
                                std::size_t end, const BigInt& limit) {
    std::vector<SumEntry> out{{BigInt(0), 0}};
    for (std::size_t i = begin; i < end; ++i) {
        std::size_t sz = out.size();
        for (std::size_t j = 0; j < sz; ++j) {
            BigInt s = out[j].sum + items[i];
            if (s <= limit) out.push_back({std::move(s), out[j].mask | (1ull << (i - begin))});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SolveResult solve_subset_sum_mim(const SubsetSumInstance& inst, const SolverCaps& caps) {
    Stopwatch watch;
    if (static_cast<int>(inst.items.size()) > caps.mim_items_cap)
        throw std::runtime_error("too many items for meet-in-the-middle");
    if (inst.target < 0) return {};
    std::size_t n = inst.items.size();
    std::size_t half = n / 2;
    auto low = half_sums(inst.items, 0, half, inst.target);
    auto high = half_sums(inst.items, half, n, inst.target);

    SolveResult res;
    res.stats.states = low.size() + high.size();
    std::size_t i = 0;
    std::size_t j = high.size();
    while (i < low.size() && j > 0) {
        BigInt s = low[i].sum + high[j - 1].sum;
        if (s == inst.target) {
            // smallest masks within the equal-sum runs: low[i] is minimal
            // already; walk the high run to its first element
            std::size_t j0 = j - 1;
            while (j0 > 0 && high[j0 - 1].sum == high[j - 1].sum) --j0;
            SolutionCertificate cert{CertKind::Subset, {}};
            for (std::size_t b = 0; b < half; ++b)
                if (low[i].mask & (1ull << b)) cert.indices.push_back(static_cast<int>(b));
            for (std::size_t b = 0; b < n - half; ++b)
                if (high[j0].mask & (1ull << b)) cert.indices.push_back(static_cast<int>(half + b));
            res.yes = true;
            res.certificate = std::move(cert);
            break;
        }
        if (s < inst.target)
            ++i;
        else
            --j;
    }
    res.stats.nanos = watch.nanos();
    return res;
}

// ---------------------------------------------------------------------------
// k-SUM
// ---------------------------------------------------------------------------

namespace {

struct TupleEntry {
    BigInt sum;
    std::vector<int> picks;
    bool operator<(const TupleEntry& o) const {
        if (sum != o.sum) return sum < o.sum;
        return picks < o.picks;
    }
};

std::vector<TupleEntry> cartesian_sums(const std::vector<std::vector<BigInt>>& groups,
                                       std::size_t begin, std::size_t end, const BigInt& limit,
                                       std::uint64_t cap) {
    std::vector<TupleEntry> out{{BigInt(0), {}}};
    for (std::size_t g = begin; g < end; ++g) {
        std::vector<TupleEntry> next;
        if (out.size() * std::max<std::size_t>(groups[g].size(), 1) > cap)
            throw std::runtime_error("enumeration cap exceeded");
        for (const auto& e : out)
            for (std::size_t i = 0; i < groups[g].size(); ++i) {
                BigInt s = e.sum + groups[g][i];
                if (s > limit) continue;
                TupleEntry t{std::move(s), e.picks};
                t.picks.push_back(static_cast<int>(i));
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SolveResult solve_ksum(const KSumInstance& inst, const SolverCaps& caps) {
    Stopwatch watch;
    SolveResult res;
    if (inst.target < 0) return res;
    std::size_t k = inst.groups.size();
    for (const auto& g : inst.groups)
        if (g.empty()) {
            res.stats.nanos = watch.nanos();
            return res;
        }
    std::size_t h = (k + 1) / 2;
    auto left = cartesian_sums(inst.groups, 0, h, inst.target, caps.enumeration_cap);
    auto right = cartesian_sums(inst.groups, h, k, inst.target, caps.enumeration_cap);
    res.stats.states = left.size() + right.size();

    std::size_t i = 0, j = right.size();
    while (i < left.size() && j > 0) {
        BigInt s = left[i].sum + right[j - 1].sum;
        if (s == inst.target) {
            std::size_t j0 = j - 1;
            while (j0 > 0 && right[j0 - 1].sum == right[j - 1].sum) --j0;
            SolutionCertificate cert{CertKind::KTuple, left[i].picks};
            cert.indices.insert(cert.indices.end(), right[j0].picks.begin(), right[j0].picks.end());
            res.yes = true;
            res.certificate = std::move(cert);
            break;
        }
        if (s < inst.target)
            ++i;
        else
            --j;
    }
    res.stats.nanos = watch.nanos();
    return res;
}

// ---------------------------------------------------------------------------
// Joksch DP
// ---------------------------------------------------------------------------

SolveResult solve_bicriteria_joksch(const BicriteriaInstance& inst, const SolverCaps& caps) {
    Stopwatch watch;
    if (inst.budget_length < 0 || inst.budget_cost < 0) return {};
    BigInt states = (inst.budget_length + 1) * inst.num_vertices;
    if (states > caps.joksch_state_cap)
        throw std::runtime_error("length budget too large for DP");
    std::size_t slices = inst.budget_length.convert_to<std::size_t>() + 1;
    std::size_t n = static_cast<std::size_t>(inst.num_vertices);

    const BigInt INF = -1;
    auto better = [&](const BigInt& a, const BigInt& b) {  // a beats b
        if (b < 0) return a >= 0;
        return a >= 0 && a < b;
    };

    // cost[l][v] = min cost over s,v-walks of total length exactly l
    std::vector<std::vector<BigInt>> cost(slices, std::vector<BigInt>(n, INF));
    struct Pred {
        int edge = -1;
        std::uint32_t slice = 0;
    };
    std::vector<std::vector<Pred>> pred(slices, std::vector<Pred>(n));
    cost[0][static_cast<std::size_t>(inst.source)] = 0;

    std::vector<int> zero_edges, pos_edges;
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
        (inst.edges[i].length == 0 ? zero_edges : pos_edges).push_back(static_cast<int>(i));

    for (std::size_t l = 0; l < slices; ++l) {
        // zero-length edges within the slice: relax to fixpoint
        for (std::size_t pass = 0; pass < n; ++pass) {
            bool changed = false;
            for (int ei : zero_edges) {
                const BiEdge& e = inst.edges[static_cast<std::size_t>(ei)];
                const BigInt& cu = cost[l][static_cast<std::size_t>(e.tail)];
                if (cu < 0) continue;
                BigInt cand = cu + e.cost;
                if (better(cand, cost[l][static_cast<std::size_t>(e.head)])) {
                    cost[l][static_cast<std::size_t>(e.head)] = std::move(cand);
                    pred[l][static_cast<std::size_t>(e.head)] = {ei, static_cast<std::uint32_t>(l)};
                    changed = true;
                }
            }
            if (!changed) break;
        }
        for (int ei : pos_edges) {
            const BiEdge& e = inst.edges[static_cast<std::size_t>(ei)];
            const BigInt& cu = cost[l][static_cast<std::size_t>(e.tail)];
            if (cu < 0) continue;
            BigInt nl = BigInt(static_cast<std::uint64_t>(l)) + e.length;
            if (nl > inst.budget_length) continue;
            std::size_t l2 = nl.convert_to<std::size_t>();
            BigInt cand = cu + e.cost;
            if (better(cand, cost[l2][static_cast<std::size_t>(e.head)])) {
                cost[l2][static_cast<std::size_t>(e.head)] = std::move(cand);
                pred[l2][static_cast<std::size_t>(e.head)] = {ei, static_cast<std::uint32_t>(l)};
            }
        }
    }

    SolveResult res;
    res.stats.states = static_cast<std::uint64_t>(slices) * n;
    for (std::size_t l = 0; l < slices && !res.yes; ++l) {
        const BigInt& ct = cost[l][static_cast<std::size_t>(inst.sink)];
        if (ct < 0 || ct > inst.budget_cost) continue;
        res.yes = true;
        SolutionCertificate cert{CertKind::Path, {}};
        std::size_t at_l = l;
        int at_v = inst.sink;
        while (at_v != inst.source || at_l != 0) {
            const Pred& p = pred[at_l][static_cast<std::size_t>(at_v)];
            if (p.edge < 0) break;  // source reached through zero-length slice
            cert.indices.push_back(p.edge);
            at_v = inst.edges[static_cast<std::size_t>(p.edge)].tail;
            at_l = p.slice;
        }
        std::reverse(cert.indices.begin(), cert.indices.end());
        res.certificate = std::move(cert);
    }
    res.stats.nanos = watch.nanos();
    return res;
}

BicriteriaInstance swap_criteria(const BicriteriaInstance& inst) {
    BicriteriaInstance out = inst;
    std::swap(out.budget_length, out.budget_cost);
    for (auto& e : out.edges) std::swap(e.length, e.cost);
    sort_edges_canonical(out.edges);
    return out;
}

// ---------------------------------------------------------------------------
// few-distinct-lengths DP (acyclic inputs)
// ---------------------------------------------------------------------------

namespace {

// Kahn topological order; empty when the graph has a cycle.
std::vector<int> topo_order(int n, const std::vector<BiEdge>& edges) {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        ++indeg[static_cast<std::size_t>(e.head)];
        out[static_cast<std::size_t>(e.tail)].push_back(e.head);
    }
    std::vector<int> order;
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return {};
    return order;
}

}  // namespace

SolveResult solve_bicriteria_distinct_dp(const BicriteriaInstance& inst, const SolverCaps& caps) {
    Stopwatch watch;
    auto order = topo_order(inst.num_vertices, inst.edges);
    if (order.empty() && inst.num_vertices > 0) throw std::runtime_error("cyclic graph");

    // nonzero distinct lengths; zero-length edges need no table dimension
    std::vector<BigInt> lengths;
    for (const auto& e : inst.edges)
        if (e.length != 0) lengths.push_back(e.length);
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    int p = static_cast<int>(lengths.size());
    if (p > caps.distinct_length_cap)
        throw std::runtime_error("too many distinct edge lengths");

    // count vectors with sum(i_j * len_j) <= L, in lexicographic order so a
    // vector's predecessors (one count lower somewhere) come first
    std::vector<std::vector<int>> tuples;
    std::vector<int> bounds(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) {
        BigInt b = inst.budget_length / lengths[static_cast<std::size_t>(j)];
        BigInt cap_edges = std::max(inst.num_vertices - 1, 0);
        if (b > cap_edges) b = cap_edges;
        bounds[static_cast<std::size_t>(j)] = b.convert_to<int>();
    }
    std::vector<int> cur(static_cast<std::size_t>(p), 0);
    auto gen = [&](auto&& self, int j, const BigInt& used) -> void {
        if (j == p) {
            tuples.push_back(cur);
            return;
        }
        for (int c = 0; c <= bounds[static_cast<std::size_t>(j)]; ++c) {
            BigInt next_used = used + c * lengths[static_cast<std::size_t>(j)];
            if (next_used > inst.budget_length) break;
            cur[static_cast<std::size_t>(j)] = c;
            self(self, j + 1, next_used);
        }
        cur[static_cast<std::size_t>(j)] = 0;
    };
    gen(gen, 0, BigInt(0));

    std::size_t n = static_cast<std::size_t>(inst.num_vertices);
    if (tuples.size() * std::max<std::size_t>(n, 1) > caps.distinct_state_cap)
        throw std::runtime_error("distinct-length DP state cap exceeded");

    std::map<std::vector<int>, int> tuple_index;
    for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index[tuples[i]] = static_cast<int>(i);

    // successor tuple when one more edge of length index j is used
    std::vector<std::vector<int>> succ(tuples.size(), std::vector<int>(static_cast<std::size_t>(p), -1));
    for (std::size_t ti = 0; ti < tuples.size(); ++ti)
        for (int j = 0; j < p; ++j) {
            std::vector<int> t = tuples[ti];
            ++t[static_cast<std::size_t>(j)];
            auto it = tuple_index.find(t);
            if (it != tuple_index.end()) succ[ti][static_cast<std::size_t>(j)] = it->second;
        }

    auto len_index = [&](const BigInt& len) {
        return static_cast<int>(std::lower_bound(lengths.begin(), lengths.end(), len) -
                                lengths.begin());
    };

    const BigInt INF = -1;
    std::vector<std::vector<BigInt>> cost(n, std::vector<BigInt>(tuples.size(), INF));
    struct Pred {
        int edge = -1;
        int tuple = -1;
    };
    std::vector<std::vector<Pred>> pred(n, std::vector<Pred>(tuples.size()));
    if (!tuples.empty()) cost[static_cast<std::size_t>(inst.source)][0] = 0;

    std::vector<std::vector<int>> out_edges(n);
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
        out_edges[static_cast<std::size_t>(inst.edges[i].tail)].push_back(static_cast<int>(i));

    auto better = [&](const BigInt& a, const BigInt& b) {
        if (b < 0) return a >= 0;
        return a >= 0 && a < b;
    };

    for (int v : order) {
        for (int ei : out_edges[static_cast<std::size_t>(v)]) {
            const BiEdge& e = inst.edges[static_cast<std::size_t>(ei)];
            int j = e.length == 0 ? -1 : len_index(e.length);
            for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
                const BigInt& cu = cost[static_cast<std::size_t>(v)][ti];
                if (cu < 0) continue;
                int ti2 = j < 0 ? static_cast<int>(ti) : succ[ti][static_cast<std::size_t>(j)];
                if (ti2 < 0) continue;
                BigInt cand = cu + e.cost;
                if (better(cand, cost[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(ti2)])) {
                    cost[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(ti2)] = std::move(cand);
                    pred[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(ti2)] =
                        {ei, static_cast<int>(ti)};
                }
            }
        }
    }

    SolveResult res;
    res.stats.states = tuples.size() * n;
    for (std::size_t ti = 0; ti < tuples.size() && !res.yes; ++ti) {
        const BigInt& ct = cost[static_cast<std::size_t>(inst.sink)][ti];
        if (ct < 0 || ct > inst.budget_cost) continue;
        res.yes = true;
        SolutionCertificate cert{CertKind::Path, {}};
        int at_v = inst.sink;
        int at_t = static_cast<int>(ti);
        while (at_v != inst.source || at_t != 0) {
            const Pred& pr = pred[static_cast<std::size_t>(at_v)][static_cast<std::size_t>(at_t)];
            if (pr.edge < 0) break;
            cert.indices.push_back(pr.edge);
            at_v = inst.edges[static_cast<std::size_t>(pr.edge)].tail;
            at_t = pr.tuple;
        }
        std::reverse(cert.indices.begin(), cert.indices.end());
        res.certificate = std::move(cert);
    }
    res.stats.nanos = watch.nanos();
    return res;
}

// ---------------------------------------------------------------------------
// exact k-path meet-in-the-middle
// ---------------------------------------------------------------------------

SolveResult solve_exact_kpath_mim(const ExactKPathInstance& inst) {
    Stopwatch watch;
    SolveResult res;
    int k = inst.path_size;
    if (k == 1) {
        if (!inst.layers.empty() && !inst.layers[0].empty() && inst.target == 0) {
            res.yes = true;
            res.certificate = SolutionCertificate{CertKind::Path, {}};
        }
        res.stats.nanos = watch.nanos();
        return res;
    }

    auto lo = inst.layer_of();
    std::size_t n = lo.size();
    std::vector<std::vector<int>> out_edges(n), in_edges(n);
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
        out_edges[static_cast<std::size_t>(inst.edges[i].tail)].push_back(static_cast<int>(i));
        in_edges[static_cast<std::size_t>(inst.edges[i].head)].push_back(static_cast<int>(i));
    }

    int middle = (k + 1) / 2;  // 1-based middle layer

    struct Back {
        int edge = -1;
    };
    // prefix sums: layer 1 .. middle
    std::vector<std::map<std::int64_t, Back>> fwd(n);
    for (int v : inst.layers[0]) fwd[static_cast<std::size_t>(v)].emplace(0, Back{});
    for (int layer = 1; layer < middle; ++layer)
        for (int v : inst.layers[static_cast<std::size_t>(layer)])
            for (int ei : in_edges[static_cast<std::size_t>(v)]) {
                const ExactEdge& e = inst.edges[static_cast<std::size_t>(ei)];
                for (const auto& [sum, back] : fwd[static_cast<std::size_t>(e.tail)])
                    fwd[static_cast<std::size_t>(v)].emplace(sum + e.weight, Back{ei});
            }

    // suffix sums: layer k .. middle
    std::vector<std::map<std::int64_t, Back>> bwd(n);
    for (int v : inst.layers[static_cast<std::size_t>(k - 1)])
        bwd[static_cast<std::size_t>(v)].emplace(0, Back{});
    for (int layer = k - 2; layer >= middle - 1; --layer)
        for (int v : inst.layers[static_cast<std::size_t>(layer)])
            for (int ei : out_edges[static_cast<std::size_t>(v)]) {
                const ExactEdge& e = inst.edges[static_cast<std::size_t>(ei)];
                for (const auto& [sum, back] : bwd[static_cast<std::size_t>(e.head)])
                    bwd[static_cast<std::size_t>(v)].emplace(sum + e.weight, Back{ei});
            }

    for (int v : inst.layers[static_cast<std::size_t>(middle - 1)]) {
        res.stats.states += fwd[static_cast<std::size_t>(v)].size() + bwd[static_cast<std::size_t>(v)].size();
        for (const auto& [sum, back] : fwd[static_cast<std::size_t>(v)]) {
            auto it = bwd[static_cast<std::size_t>(v)].find(inst.target - sum);
            if (it == bwd[static_cast<std::size_t>(v)].end()) continue;
            // reconstruct: prefix edges walked backward, suffix edges forward
            SolutionCertificate cert{CertKind::Path, {}};
            int at = v;
            std::int64_t s = sum;
            while (true) {
                auto f = fwd[static_cast<std::size_t>(at)].find(s);
                if (f == fwd[static_cast<std::size_t>(at)].end() || f->second.edge < 0) break;
                int ei = f->second.edge;
                cert.indices.push_back(ei);
                s -= inst.edges[static_cast<std::size_t>(ei)].weight;
                at = inst.edges[static_cast<std::size_t>(ei)].tail;
            }
            std::reverse(cert.indices.begin(), cert.indices.end());
            at = v;
            s = it->first;
            while (true) {
                auto b = bwd[static_cast<std::size_t>(at)].find(s);
                if (b == bwd[static_cast<std::size_t>(at)].end() || b->second.edge < 0) break;
                int ei = b->second.edge;
                cert.indices.push_back(ei);
                s -= inst.edges[static_cast<std::size_t>(ei)].weight;
                at = inst.edges[static_cast<std::size_t>(ei)].head;
            }
            res.yes = true;
            res.certificate = std::move(cert);
            res.stats.nanos = watch.nanos();
            return res;
        }
    }
    res.stats.nanos = watch.nanos();
    return res;
}

// ---------------------------------------------------------------------------
// Corollary-2 composed solver
// ---------------------------------------------------------------------------

SolveResult solve_bicriteria_kpath(const BicriteriaInstance& g, int k,
                                   const PipelineOptions& options) {
    Stopwatch watch;
    SolveResult res;
    auto batches = pipeline_batches(g, k, options);
    for (const auto& batch : batches) {
        for (std::size_t entry = 0; entry < batch.family.entries.size(); ++entry) {
            ExactKPathInstance exact = materialize_exact_instance(batch, static_cast<int>(entry));
            SolveResult sub = solve_exact_kpath_mim(exact);
            res.stats.states += sub.stats.states;
            if (!sub.yes) continue;

            // translate the exact path back to input-graph edges
            SolutionCertificate cert{CertKind::Path, {}};
            const auto& exact_path = sub.certificate->indices;
            for (std::size_t i = 0; i < exact_path.size(); ++i) {
                const LayeredEdge& le = batch.absorbed.edges[static_cast<std::size_t>(exact_path[i])];
                if (le.orig_s_edge >= 0) cert.indices.push_back(le.orig_s_edge);
                if (le.orig_edge >= 0) cert.indices.push_back(le.orig_edge);
                if (le.orig_t_edge >= 0) cert.indices.push_back(le.orig_t_edge);
            }
            if (!check_certificate(g, cert))
                throw std::logic_error("pipeline certificate failed replay");
            res.yes = true;
            res.certificate = std::move(cert);
            res.stats.nanos = watch.nanos();
            return res;
        }
    }
    res.stats.nanos = watch.nanos();
    return res;
}

OrSolveResult solve_or_bundle(const OrBundle& bundle, SubsetSumAlgo algo, const SolverCaps& caps) {
    for (std::size_t i = 0; i < bundle.instances.size(); ++i) {
        SolveResult r = algo == SubsetSumAlgo::Dp ? solve_subset_sum_dp(bundle.instances[i], caps)
                                                  : solve_subset_sum_mim(bundle.instances[i], caps);
        if (r.yes) return {true, static_cast<int>(i), std::move(r.certificate)};
    }
    return {};
}

Json to_json(const SolveResult& result) {
    Json j{{"answer", result.yes ? "yes" : "no"},
           {"stats", Json{{"states", result.stats.states}, {"nanos", result.stats.nanos}}}};
    if (result.certificate) j["certificate"] = to_json(*result.certificate);
    return j;
}

}  // namespace sumpath
