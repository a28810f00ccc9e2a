#pragma once

#include <cstdint>
#include <vector>

#include "sumpath/instances.hpp"
#include "sumpath/json_io.hpp"

namespace sumpath {

// ---------------------------------------------------------------------------
// Color coding
// ---------------------------------------------------------------------------

// Ordered partition of the non-s,t vertices into classes 1..k.
struct ColorPartition {
    std::vector<int> class_of;  // per vertex id; 0 on s and t
    int tag = 0;                // index within the emitted list
};

struct ColoredCopy {
    BicriteriaInstance graph;   // only s->V1, Vi->Vi+1 and Vk->t edges survive
    ColorPartition partition;
    std::vector<int> orig_edge;  // copy edge index -> input edge index
};

struct ColorStrategy {
    enum class Kind { DeterministicExhaustive, Randomized };
    Kind kind = Kind::DeterministicExhaustive;
    int trials = 128;            // randomized: random partitions drawn
    std::uint64_t seed = 1;
    std::uint64_t coloring_cap = 1ull << 20;  // outputs allowed before erroring
};

// Emits layered copies such that every s,t-path with exactly k internal
// vertices survives, correctly ordered, in at least one copy. Exhaustive
// enumeration of all k^(n-2) ordered colorings is certain; the randomized
// strategy keeps a solution path with probability >= 1-(1-k!/k^k)^trials
// (each trial expands into the k! orderings of a random partition).
std::vector<ColoredCopy> color_code(const BicriteriaInstance& g, int k,
                                    const ColorStrategy& strategy = {});

// ---------------------------------------------------------------------------
// Endpoint absorption
// ---------------------------------------------------------------------------

struct LayeredEdge {
    int tail = 0;
    int head = 0;
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;
    int orig_edge = -1;    // inner edge in the input graph
    int orig_s_edge = -1;  // absorbed s-edge, when tail sits in V_1
    int orig_t_edge = -1;  // absorbed t-edge, when head sits in V_k
};

// Bicriteria-weighted layered graph without s and t; vertex ids are
// compacted to 0..V-1.
struct LayeredBiGraph {
    std::vector<std::vector<int>> layers;
    std::vector<LayeredEdge> edges;
    std::vector<int> source_vertex;  // compact id -> vertex id in the colored copy
    int num_layers() const { return static_cast<int>(layers.size()); }
};

// Folds the s- and t-edges into the first/last inner layer. For k = 1 every
// surviving vertex v becomes a single edge v_in -> v_out carrying the
// combined s->v->t weight, so the output always has >= 2 layers and paths
// across all layers correspond to s,t-paths with k internal vertices.
LayeredBiGraph absorb_endpoints(const ColoredCopy& copy, int k,
                                std::int64_t weight_limit = 1ll << 40);

// ---------------------------------------------------------------------------
// Lemma-9 threshold family
// ---------------------------------------------------------------------------

struct ThresholdEntry1D {
    std::vector<std::int64_t> weights;  // per universe element
    std::int64_t target = 0;
    int x = 0;      // prefix width; 0 for the unscaled initial entries
    int a = 0;      // offset used in the target
    bool scaled = false;
};

// Family of (weight function, target) pairs such that for every subset X of
// at most k elements: w(X) <= budget iff some entry has w_i(X) = target_i.
// The initial entries use offsets a in {0,...,4k} (the a = 0 entry repairs
// the w(X) = budget boundary); the scaled entries take the x most
// significant bits of every weight, with targets [budget]_x - k - a for
// a in {1,...,2k}. Entries with negative targets are dropped. The weight cap
// is rounded up to a power of two for the prefix operator.
std::vector<ThresholdEntry1D> scale_thresholds(const std::vector<std::int64_t>& weights,
                                               std::int64_t budget, int k,
                                               std::int64_t weight_cap);

// The x most significant bits of a, for values in {0,...,2^width}.
std::int64_t msb_prefix(std::int64_t a, int x, int width);

struct ThresholdEntry2D {
    std::vector<std::int64_t> w1, w2;
    std::int64_t t1 = 0, t2 = 0;
    int x1 = 0, a1 = 0, x2 = 0, a2 = 0;
    bool scaled1 = false, scaled2 = false;
};

struct ThresholdFamily {
    std::vector<ThresholdEntry2D> entries;
    int k = 0;
    std::int64_t weight_cap = 0;
};

// Cartesian product of two single-dimension families over the same universe.
ThresholdFamily cross_family(const std::vector<ThresholdEntry1D>& f1,
                             const std::vector<ThresholdEntry1D>& f2);

// ---------------------------------------------------------------------------
// Pair flattening and the full pipeline
// ---------------------------------------------------------------------------

// f(w1, w2) = w2 + w1 * 2kW, injective on {0,...,W}^2 and compatible with
// sums of up to k pairs; the result asks for weight exactly f(T1, T2) with
// weights bounded by 2kW^2 + W.
ExactKPathInstance pair_to_single(const ExactBicritKPathInstance& inst, int k, std::int64_t W);

struct PipelineOptions {
    ColorStrategy strategy;
    std::int64_t weight_cap_limit = 1ll << 30;
    bool dedupe_copies = true;  // identical absorbed graphs are emitted once
};

// One deduplicated absorbed graph together with its threshold family; the
// exact instances share the graph and differ only in weights and target.
struct PipelineBatch {
    LayeredBiGraph absorbed;
    int coloring = 0;  // representative coloring tag
    ThresholdFamily family;
    int subset_size = 0;   // k-parameter handed to the family
    std::int64_t weight_cap = 0;
};

std::vector<PipelineBatch> pipeline_batches(const BicriteriaInstance& g, int k,
                                            const PipelineOptions& options = {});

ExactKPathInstance materialize_exact_instance(const PipelineBatch& batch, int entry);

struct PipelineOutput {
    ExactKPathInstance instance;
    int coloring = 0;
    int entry = 0;
};

// Full orchestration: color coding, endpoint absorption, threshold family
// over the edges of each copy, pair flattening. The OR of the outputs'
// answers equals "g has a feasible s,t-path with exactly k internal
// vertices".
std::vector<PipelineOutput> bicriteria_to_exact_instances(const BicriteriaInstance& g, int k,
                                                          const PipelineOptions& options = {});

Json to_json(const ThresholdFamily& family);

}  // namespace sumpath
