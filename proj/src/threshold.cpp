#include "sumpath/threshold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sumpath/rng.hpp"

namespace sumpath {

// ---------------------------------------------------------------------------
// color_code
// ---------------------------------------------------------------------------

namespace {

ColoredCopy make_copy(const BicriteriaInstance& g, std::vector<int> class_of, int k, int tag) {
    ColoredCopy copy;
    copy.partition = ColorPartition{std::move(class_of), tag};
    copy.graph.num_vertices = g.num_vertices;
    copy.graph.source = g.source;
    copy.graph.sink = g.sink;
    copy.graph.budget_length = g.budget_length;
    copy.graph.budget_cost = g.budget_cost;
    const auto& cls = copy.partition.class_of;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const BiEdge& e = g.edges[i];
        bool keep = false;
        if (e.tail == g.source && e.head != g.sink)
            keep = cls[static_cast<std::size_t>(e.head)] == 1;
        else if (e.head == g.sink && e.tail != g.source)
            keep = cls[static_cast<std::size_t>(e.tail)] == k;
        else if (e.tail != g.source && e.head != g.sink && e.tail != g.sink && e.head != g.source)
            keep = cls[static_cast<std::size_t>(e.head)] == cls[static_cast<std::size_t>(e.tail)] + 1;
        if (keep) {
            copy.graph.edges.push_back(e);
            copy.orig_edge.push_back(static_cast<int>(i));
        }
    }
    return copy;
}

}  // namespace

std::vector<ColoredCopy> color_code(const BicriteriaInstance& g, int k,
                                    const ColorStrategy& strategy) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<int> internal;
    for (int v = 0; v < g.num_vertices; ++v)
        if (v != g.source && v != g.sink) internal.push_back(v);

    std::vector<ColoredCopy> out;
    int tag = 0;

    if (strategy.kind == ColorStrategy::Kind::DeterministicExhaustive) {
        double total = 1;
        for (std::size_t i = 0; i < internal.size(); ++i) {
            total *= k;
            if (total > static_cast<double>(strategy.coloring_cap))
                throw std::runtime_error("use randomized strategy");
        }
        std::vector<int> pick(internal.size(), 1);
        std::vector<int> cls(static_cast<std::size_t>(g.num_vertices), 0);
        for (;;) {
            for (std::size_t i = 0; i < internal.size(); ++i)
                cls[static_cast<std::size_t>(internal[i])] = pick[i];
            out.push_back(make_copy(g, cls, k, tag++));
            std::size_t i = internal.size();
            while (i > 0) {
                --i;
                if (pick[i] < k) {
                    ++pick[i];
                    break;
                }
                pick[i] = 1;
                if (i == 0) return out;
            }
            if (internal.empty()) return out;
        }
    }

    // randomized: each trial draws a partition and emits all k! orderings,
    // so a solution path survives a trial iff its vertices get distinct colors
    std::uint64_t factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= static_cast<std::uint64_t>(i);
    if (static_cast<std::uint64_t>(strategy.trials) * factorial > strategy.coloring_cap)
        throw std::runtime_error("trials * k! exceeds the coloring cap");
    Rng rng(strategy.seed);
    std::vector<int> cls(static_cast<std::size_t>(g.num_vertices), 0);
    for (int trial = 0; trial < strategy.trials; ++trial) {
        std::vector<int> base(internal.size());
        for (auto& b : base) b = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (std::size_t i = 0; i < internal.size(); ++i)
                cls[static_cast<std::size_t>(internal[i])] = perm[static_cast<std::size_t>(base[i] - 1)];
            out.push_back(make_copy(g, cls, k, tag++));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// absorb_endpoints
// ---------------------------------------------------------------------------

namespace {

std::int64_t weight_to_i64(const BigInt& w, std::int64_t limit) {
    if (w > limit) throw std::runtime_error("weights too large for the threshold pipeline");
    return w.convert_to<std::int64_t>();
}

}  // namespace

LayeredBiGraph absorb_endpoints(const ColoredCopy& copy, int k, std::int64_t weight_limit) {
    const BicriteriaInstance& g = copy.graph;
    const auto& cls = copy.partition.class_of;
    LayeredBiGraph out;

    // unique s-edge / t-edge per vertex (the copy is simple)
    std::vector<int> s_edge(static_cast<std::size_t>(g.num_vertices), -1);
    std::vector<int> t_edge(static_cast<std::size_t>(g.num_vertices), -1);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const BiEdge& e = g.edges[i];
        if (e.tail == g.source) s_edge[static_cast<std::size_t>(e.head)] = static_cast<int>(i);
        if (e.head == g.sink) t_edge[static_cast<std::size_t>(e.tail)] = static_cast<int>(i);
    }

    if (k == 1) {
        out.layers.assign(2, {});
        for (int v = 0; v < g.num_vertices; ++v) {
            if (v == g.source || v == g.sink || cls[static_cast<std::size_t>(v)] != 1) continue;
            int se = s_edge[static_cast<std::size_t>(v)];
            int te = t_edge[static_cast<std::size_t>(v)];
            if (se < 0 || te < 0) continue;
            int vin = static_cast<int>(out.source_vertex.size());
            out.source_vertex.push_back(v);
            int vout = static_cast<int>(out.source_vertex.size());
            out.source_vertex.push_back(v);
            out.layers[0].push_back(vin);
            out.layers[1].push_back(vout);
            const BiEdge& es = g.edges[static_cast<std::size_t>(se)];
            const BiEdge& et = g.edges[static_cast<std::size_t>(te)];
            LayeredEdge le;
            le.tail = vin;
            le.head = vout;
            le.w1 = weight_to_i64(es.length + et.length, weight_limit);
            le.w2 = weight_to_i64(es.cost + et.cost, weight_limit);
            le.orig_s_edge = copy.orig_edge[static_cast<std::size_t>(se)];
            le.orig_t_edge = copy.orig_edge[static_cast<std::size_t>(te)];
            out.edges.push_back(le);
        }
        return out;
    }

    // delete V_1 vertices without an s-edge and V_k vertices without a t-edge
    std::vector<int> compact(static_cast<std::size_t>(g.num_vertices), -1);
    out.layers.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < g.num_vertices; ++v) {
        if (v == g.source || v == g.sink) continue;
        int c = cls[static_cast<std::size_t>(v)];
        if (c < 1 || c > k) continue;
        if (c == 1 && s_edge[static_cast<std::size_t>(v)] < 0) continue;
        if (c == k && t_edge[static_cast<std::size_t>(v)] < 0) continue;
        compact[static_cast<std::size_t>(v)] = static_cast<int>(out.source_vertex.size());
        out.source_vertex.push_back(v);
        out.layers[static_cast<std::size_t>(c - 1)].push_back(compact[static_cast<std::size_t>(v)]);
    }

    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const BiEdge& e = g.edges[i];
        if (e.tail == g.source || e.head == g.sink) continue;
        int cu = compact[static_cast<std::size_t>(e.tail)];
        int cv = compact[static_cast<std::size_t>(e.head)];
        if (cu < 0 || cv < 0) continue;
        LayeredEdge le;
        le.tail = cu;
        le.head = cv;
        BigInt w1 = e.length, w2 = e.cost;
        le.orig_edge = copy.orig_edge[i];
        if (cls[static_cast<std::size_t>(e.tail)] == 1) {
            const BiEdge& es = g.edges[static_cast<std::size_t>(s_edge[static_cast<std::size_t>(e.tail)])];
            w1 += es.length;
            w2 += es.cost;
            le.orig_s_edge = copy.orig_edge[static_cast<std::size_t>(s_edge[static_cast<std::size_t>(e.tail)])];
        }
        if (cls[static_cast<std::size_t>(e.head)] == k) {
            const BiEdge& et = g.edges[static_cast<std::size_t>(t_edge[static_cast<std::size_t>(e.head)])];
            w1 += et.length;
            w2 += et.cost;
            le.orig_t_edge = copy.orig_edge[static_cast<std::size_t>(t_edge[static_cast<std::size_t>(e.head)])];
        }
        le.w1 = weight_to_i64(w1, weight_limit);
        le.w2 = weight_to_i64(w2, weight_limit);
        out.edges.push_back(le);
    }
    return out;
}

// ---------------------------------------------------------------------------
// scale_thresholds / cross_family
// ---------------------------------------------------------------------------

std::int64_t msb_prefix(std::int64_t a, int x, int width) {
    int shift = width - x;
    if (shift < 0) throw std::invalid_argument("prefix width exceeds encoding width");
    return a >> shift;
}

std::vector<ThresholdEntry1D> scale_thresholds(const std::vector<std::int64_t>& weights,
                                               std::int64_t budget, int k,
                                               std::int64_t weight_cap) {
    if (budget > weight_cap) throw std::invalid_argument("budget exceeds the weight cap");
    if (budget < 0 || weight_cap < 0) throw std::invalid_argument("negative budget or cap");
    for (std::int64_t w : weights)
        if (w < 0 || w > weight_cap) throw std::invalid_argument("weight outside [0, cap]");

    // width of the binary encoding after rounding the cap to a power of two
    int width = 0;
    while ((1ll << width) < weight_cap) ++width;

    std::vector<ThresholdEntry1D> family;
    for (int a = 0; a <= 4 * k; ++a) {
        if (budget - a < 0) break;
        family.push_back({weights, budget - a, 0, a, false});
    }
    for (int x = 1; x <= width; ++x) {
        std::vector<std::int64_t> scaled(weights.size());
        for (std::size_t i = 0; i < weights.size(); ++i) scaled[i] = msb_prefix(weights[i], x, width);
        std::int64_t budget_prefix = msb_prefix(budget, x, width);
        for (int a = 1; a <= 2 * k; ++a) {
            std::int64_t target = budget_prefix - k - a;
            if (target < 0) continue;
            family.push_back({scaled, target, x, a, true});
        }
    }
    return family;
}

ThresholdFamily cross_family(const std::vector<ThresholdEntry1D>& f1,
                             const std::vector<ThresholdEntry1D>& f2) {
    ThresholdFamily fam;
    for (const auto& e1 : f1)
        for (const auto& e2 : f2) {
            if (e1.weights.size() != e2.weights.size())
                throw std::invalid_argument("families disagree on the universe");
            ThresholdEntry2D e;
            e.w1 = e1.weights;
            e.w2 = e2.weights;
            e.t1 = e1.target;
            e.t2 = e2.target;
            e.x1 = e1.x;
            e.a1 = e1.a;
            e.x2 = e2.x;
            e.a2 = e2.a;
            e.scaled1 = e1.scaled;
            e.scaled2 = e2.scaled;
            fam.entries.push_back(std::move(e));
        }
    return fam;
}

// ---------------------------------------------------------------------------
// pair_to_single
// ---------------------------------------------------------------------------

ExactKPathInstance pair_to_single(const ExactBicritKPathInstance& inst, int k, std::int64_t W) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (W < 0) throw std::invalid_argument("negative weight cap");
    if (W > (1ll << 30)) throw std::invalid_argument("weight cap too large for flattening");
    std::int64_t scale = 2ll * k * W;
    auto flatten = [&](std::int64_t w1, std::int64_t w2) {
        if (w1 < 0 || w1 > W || w2 < 0 || w2 > W)
            throw std::invalid_argument("weight outside [0, W]");
        return w2 + w1 * scale;
    };
    ExactKPathInstance out;
    out.path_size = inst.path_size;
    out.layers = inst.layers;
    out.weight_bound = 2ll * k * W * W + W;
    out.target = flatten(inst.target1, inst.target2);
    for (const auto& e : inst.edges) out.edges.push_back({e.tail, e.head, flatten(e.w1, e.w2)});
    return out;
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

namespace {

// True when a path across all layers exists.
bool has_full_layer_path(const LayeredBiGraph& g) {
    if (g.layers.empty() || g.layers[0].empty()) return false;
    std::size_t n = g.source_vertex.size();
    std::vector<char> reach(n, 0);
    for (int v : g.layers[0]) reach[static_cast<std::size_t>(v)] = 1;
    for (std::size_t layer = 1; layer < g.layers.size(); ++layer) {
        bool any = false;
        std::vector<char> next(n, 0);
        for (const auto& e : g.edges)
            if (reach[static_cast<std::size_t>(e.tail)]) next[static_cast<std::size_t>(e.head)] = 1;
        for (int v : g.layers[layer])
            if (next[static_cast<std::size_t>(v)]) any = true;
        reach = std::move(next);
        if (!any) return false;
    }
    for (int v : g.layers.back())
        if (reach[static_cast<std::size_t>(v)]) return true;
    return false;
}

std::string absorbed_key(const LayeredBiGraph& g) {
    std::string key;
    key += std::to_string(g.layers.size());
    for (const auto& layer : g.layers) {
        key += '|';
        for (int v : layer) key += std::to_string(v) + ",";
    }
    for (const auto& e : g.edges) {
        key += ';';
        key += std::to_string(e.tail) + "," + std::to_string(e.head) + "," +
               std::to_string(e.w1) + "," + std::to_string(e.w2);
    }
    return key;
}

}  // namespace

std::vector<PipelineBatch> pipeline_batches(const BicriteriaInstance& g, int k,
                                            const PipelineOptions& options) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.budget_length > options.weight_cap_limit || g.budget_cost > options.weight_cap_limit)
        throw std::runtime_error("budgets too large for the threshold pipeline");
    std::int64_t L = g.budget_length.convert_to<std::int64_t>();
    std::int64_t C = g.budget_cost.convert_to<std::int64_t>();

    auto copies = color_code(g, k, options.strategy);
    std::vector<PipelineBatch> batches;
    std::map<std::string, int> seen;
    for (const auto& copy : copies) {
        LayeredBiGraph absorbed = absorb_endpoints(copy, k, options.weight_cap_limit);
        if (!has_full_layer_path(absorbed)) continue;
        if (options.dedupe_copies) {
            auto [it, inserted] = seen.emplace(absorbed_key(absorbed), copy.partition.tag);
            if (!inserted) continue;
        }

        std::int64_t cap = std::max(L, C);
        for (const auto& e : absorbed.edges) cap = std::max({cap, e.w1, e.w2});
        if (cap > options.weight_cap_limit)
            throw std::runtime_error("weights too large for the threshold pipeline");

        int subset_size = k >= 2 ? k + 1 : 1;
        std::vector<std::int64_t> w1, w2;
        for (const auto& e : absorbed.edges) {
            w1.push_back(e.w1);
            w2.push_back(e.w2);
        }
        auto f1 = scale_thresholds(w1, L, subset_size, cap);
        auto f2 = scale_thresholds(w2, C, subset_size, cap);

        PipelineBatch batch;
        batch.absorbed = std::move(absorbed);
        batch.coloring = copy.partition.tag;
        batch.family = cross_family(f1, f2);
        batch.family.k = subset_size;
        batch.family.weight_cap = cap;
        batch.subset_size = subset_size;
        batch.weight_cap = cap;
        batches.push_back(std::move(batch));
    }
    return batches;
}

ExactKPathInstance materialize_exact_instance(const PipelineBatch& batch, int entry) {
    const ThresholdEntry2D& e = batch.family.entries[static_cast<std::size_t>(entry)];
    ExactBicritKPathInstance bi;
    bi.path_size = batch.absorbed.num_layers();
    bi.layers = batch.absorbed.layers;
    bi.target1 = e.t1;
    bi.target2 = e.t2;
    bi.weight_bound = batch.weight_cap;
    for (std::size_t i = 0; i < batch.absorbed.edges.size(); ++i) {
        const LayeredEdge& le = batch.absorbed.edges[i];
        bi.edges.push_back({le.tail, le.head, e.w1[i], e.w2[i]});
    }
    return pair_to_single(bi, batch.subset_size, batch.weight_cap);
}

std::vector<PipelineOutput> bicriteria_to_exact_instances(const BicriteriaInstance& g, int k,
                                                          const PipelineOptions& options) {
    std::vector<PipelineOutput> out;
    for (const auto& batch : pipeline_batches(g, k, options))
        for (std::size_t e = 0; e < batch.family.entries.size(); ++e)
            out.push_back({materialize_exact_instance(batch, static_cast<int>(e)),
                           batch.coloring, static_cast<int>(e)});
    return out;
}

Json to_json(const ThresholdFamily& family) {
    Json entries = Json::array();
    for (const auto& e : family.entries)
        entries.push_back(Json{{"w1", e.w1},
                               {"w2", e.w2},
                               {"t1", e.t1},
                               {"t2", e.t2},
                               {"x1", e.x1},
                               {"a1", e.a1},
                               {"x2", e.x2},
                               {"a2", e.a2}});
    return Json{{"k", family.k}, {"weight_cap", family.weight_cap}, {"entries", entries}};
}

}  // namespace sumpath
