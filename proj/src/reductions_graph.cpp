#include "sumpath/reductions_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumpath {

namespace {

constexpr std::uint64_t kExpansionEdgeBudget = 10'000'000;

struct EdgeBuilder {
    std::vector<std::pair<BiEdge, EdgeProvenance>> entries;

    void add(int tail, int head, BigInt length, BigInt cost, EdgeProvenance prov) {
        entries.push_back({BiEdge{tail, head, std::move(length), std::move(cost)}, std::move(prov)});
    }

    // Canonical edge order, provenance kept aligned.
    void finish(BicriteriaInstance& inst, GadgetTrace& trace) {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return edge_less(a.first, b.first); });
        for (auto& [edge, prov] : entries) {
            inst.edges.push_back(std::move(edge));
            trace.edges.push_back(std::move(prov));
        }
    }
};

// Smallest B with B^tau >= x.
BigInt int_root_ceil(const BigInt& x, int tau) {
    if (x <= 1) return x;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(tau)) < x) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(tau)) >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace

// ---------------------------------------------------------------------------
// or_to_bicriteria
// ---------------------------------------------------------------------------

std::pair<BicriteriaInstance, GadgetTrace> or_to_bicriteria(const OrBundle& bundle,
                                                            const BigInt& M) {
    std::size_t k = 0;
    for (const auto& inst : bundle.instances) {
        if (inst.target > M) throw std::invalid_argument("bound too small");
        for (const auto& z : inst.items)
            if (z > M) throw std::invalid_argument("bound too small");
        k = std::max(k, inst.items.size());
    }

    BicriteriaInstance out;
    GadgetTrace trace;
    EdgeBuilder builder;

    int next = 0;
    int s = next++;
    // chains: per member, per item slot, a take midpoint, a skip midpoint and
    // the slot's end vertex
    std::vector<std::vector<std::array<int, 3>>> chain(bundle.instances.size());
    for (std::size_t i = 0; i < bundle.instances.size(); ++i) {
        chain[i].resize(k);
        for (std::size_t j = 0; j < k; ++j)
            chain[i][j] = {next++, next++, next++};  // midT, midS, v_{j+1}
    }
    int t = next++;
    out.num_vertices = next;
    out.source = s;
    out.sink = t;
    out.budget_length = M;
    out.budget_cost = M * static_cast<std::uint64_t>(k);

    for (std::size_t i = 0; i < bundle.instances.size(); ++i) {
        const auto& member = bundle.instances[i];
        int at = s;
        for (std::size_t j = 0; j < k; ++j) {
            BigInt z = j < member.items.size() ? member.items[j] : BigInt(0);  // 0-padding
            auto [mid_take, mid_skip, v] = chain[i][j];
            int ii = static_cast<int>(i), jj = static_cast<int>(j);
            builder.add(at, mid_take, z, M - z, {ii, jj, "take"});
            builder.add(mid_take, v, 0, 0, {ii, jj, "take-zero"});
            builder.add(at, mid_skip, 0, M, {ii, jj, "skip"});
            builder.add(mid_skip, v, 0, 0, {ii, jj, "skip-zero"});
            at = v;
        }
        trace.entry_vertices.push_back(k > 0 ? chain[i][0][2] : t);
        builder.add(at, t, M - member.target, member.target, {static_cast<int>(i), -1, "final"});
    }
    builder.finish(out, trace);
    return {std::move(out), std::move(trace)};
}

// ---------------------------------------------------------------------------
// ksum_to_multigraph
// ---------------------------------------------------------------------------

std::pair<BicriteriaInstance, GadgetTrace> ksum_to_multigraph(const KSumInstance& inst) {
    int k = inst.k();
    if (k < 2) throw std::invalid_argument("k-SUM instance needs at least 2 groups");
    for (const auto& g : inst.groups)
        for (const auto& z : g)
            if (z > inst.target) throw std::invalid_argument("element exceeds target");

    BicriteriaInstance out;
    GadgetTrace trace;
    EdgeBuilder builder;

    out.source = 0;
    out.sink = k;
    out.budget_length = inst.target;
    out.budget_cost = inst.target * (k - 1);

    int next = k + 1;
    for (int i = 0; i < k; ++i) {
        const auto& group = inst.groups[static_cast<std::size_t>(i)];
        trace.entry_vertices.push_back(i);
        for (std::size_t j = 0; j < group.size(); ++j) {
            int mid = next++;
            builder.add(i, mid, group[j], inst.target - group[j], {i, static_cast<int>(j), "element"});
            builder.add(mid, i + 1, 0, 0, {i, static_cast<int>(j), "zero"});
        }
    }
    out.num_vertices = next;
    builder.finish(out, trace);
    return {std::move(out), std::move(trace)};
}

// ---------------------------------------------------------------------------
// digit_expand
// ---------------------------------------------------------------------------

BicriteriaInstance digit_expand(const BicriteriaInstance& g, int tau) {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");
    const BigInt& T = g.budget_length;
    for (const auto& e : g.edges)
        if (e.length > T || e.cost > T)
            throw std::invalid_argument("edge weight exceeds the digit-expansion bound");

    BigInt B = int_root_ceil(T, tau);
    if (B < 1) B = 1;
    std::vector<BigInt> powers(static_cast<std::size_t>(tau));
    powers[0] = 1;
    for (int i = 1; i < tau; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i - 1)] * B;

    // Digit counts, most significant position absorbing the B^tau = T corner
    // case (that digit may equal B; all lower digits are < B).
    auto digits_of = [&](BigInt w) {
        std::vector<BigInt> d(static_cast<std::size_t>(tau));
        for (int i = tau - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = w / powers[static_cast<std::size_t>(i)];
            w %= powers[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < tau - 1; ++i)
            if (d[static_cast<std::size_t>(i)] >= B) throw std::logic_error("digit overflow");
        return d;
    };

    BicriteriaInstance out;
    out.num_vertices = g.num_vertices;
    out.source = g.source;
    out.sink = g.sink;
    out.budget_length = g.budget_length;
    out.budget_cost = g.budget_cost;

    std::uint64_t emitted = 0;
    int next = g.num_vertices;
    for (const auto& e : g.edges) {
        auto a = digits_of(e.length);
        auto b = digits_of(e.cost);
        // unit steps: lengths first, high positions first, then costs
        std::vector<std::pair<BigInt, BigInt>> steps;
        for (int i = tau - 1; i >= 0; --i)
            for (BigInt c = 0; c < a[static_cast<std::size_t>(i)]; ++c)
                steps.push_back({powers[static_cast<std::size_t>(i)], BigInt(0)});
        for (int i = tau - 1; i >= 0; --i)
            for (BigInt c = 0; c < b[static_cast<std::size_t>(i)]; ++c)
                steps.push_back({BigInt(0), powers[static_cast<std::size_t>(i)]});
        if (steps.empty()) steps.push_back({BigInt(0), BigInt(0)});

        emitted += steps.size();
        if (emitted > kExpansionEdgeBudget)
            throw std::runtime_error("digit expansion exceeds edge budget");

        int at = e.tail;
        for (std::size_t si = 0; si < steps.size(); ++si) {
            int to = (si + 1 == steps.size()) ? e.head : next++;
            out.edges.push_back({at, to, steps[si].first, steps[si].second});
            at = to;
        }
    }
    out.num_vertices = next;
    sort_edges_canonical(out.edges);
    return out;
}

// ---------------------------------------------------------------------------
// exactpath_to_bicriteria
// ---------------------------------------------------------------------------

std::vector<BicriteriaInstance> exactpath_to_bicriteria(const ExactKPathInstance& inst) {
    int k = inst.path_size;
    BigInt W(inst.weight_bound);
    BigInt budget_cost = (k - 1) * W - inst.target;
    if (budget_cost < 0) return {};  // no k-path can weigh that much: OR over nothing

    BicriteriaInstance out;
    int shift = 1;  // s takes id 0, exact vertex v becomes v+1
    int t = inst.num_vertices() + 1;
    out.num_vertices = t + 1;
    out.source = 0;
    out.sink = t;
    out.budget_length = inst.target;
    out.budget_cost = budget_cost;

    for (int v : inst.layers.front()) out.edges.push_back({0, v + shift, 0, 0});
    for (const auto& e : inst.edges)
        out.edges.push_back({e.tail + shift, e.head + shift, BigInt(e.weight), W - e.weight});
    for (int v : inst.layers.back()) out.edges.push_back({v + shift, t, 0, 0});
    sort_edges_canonical(out.edges);
    return {std::move(out)};
}

// ---------------------------------------------------------------------------
// decoding and trace serialization
// ---------------------------------------------------------------------------

std::pair<int, SolutionCertificate> decode_gadget_path(const SolutionCertificate& path_cert,
                                                       const BicriteriaInstance& gadget,
                                                       const GadgetTrace& trace) {
    if (path_cert.kind != CertKind::Path)
        throw std::invalid_argument("certificate/instance type mismatch");
    if (!check_certificate(gadget, path_cert)) throw std::invalid_argument("not a solution");
    int member = -1;
    std::vector<int> taken;
    for (int ei : path_cert.indices) {
        const EdgeProvenance& p = trace.edges[static_cast<std::size_t>(ei)];
        if (p.instance < 0) continue;
        if (member < 0) member = p.instance;
        if (p.instance != member) throw std::logic_error("path crosses gadget chains");
        if (p.role == "take" || p.role == "element") taken.push_back(p.item);
    }
    return {member, SolutionCertificate{CertKind::Subset, std::move(taken)}};
}

Json to_json(const GadgetTrace& trace) {
    Json edges = Json::array();
    for (const auto& p : trace.edges)
        edges.push_back(Json{{"instance", p.instance}, {"item", p.item}, {"role", p.role}});
    return Json{{"entry_vertices", trace.entry_vertices}, {"edges", edges}};
}

GadgetTrace gadget_trace_from_json(const Json& j) {
    GadgetTrace trace;
    trace.entry_vertices = j.at("entry_vertices").get<std::vector<int>>();
    for (const auto& e : j.at("edges"))
        trace.edges.push_back({e.at("instance").get<int>(), e.at("item").get<int>(),
                               e.at("role").get<std::string>()});
    return trace;
}

}  // namespace sumpath
