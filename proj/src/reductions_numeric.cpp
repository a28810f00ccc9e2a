#include "sumpath/reductions_numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sumpath {

// ---------------------------------------------------------------------------
// BlockLayout
// ---------------------------------------------------------------------------

BigInt BlockLayout::assemble(int count, int type_index, const std::vector<BigInt>& var_blocks) const {
    BigInt v = 0;
    if (count > 0) {
        BigInt c = count;
        if (bit_length(c) > count_block_bits)
            throw std::invalid_argument("count does not fit count block");
        v |= c << count_block_lsb();
    }
    if (type_index >= 0) {
        if (type_index >= type_block_bits) throw std::invalid_argument("type index out of range");
        v |= BigInt(1) << type_bit_lsb(type_index);
    }
    if (static_cast<int>(var_blocks.size()) != num_vars)
        throw std::invalid_argument("wrong number of variable blocks");
    for (int x = 0; x < num_vars; ++x) {
        const BigInt& b = var_blocks[static_cast<std::size_t>(x)];
        if (b < 0 || bit_length(b) > var_block_bits)
            throw std::invalid_argument("block value does not fit variable block");
        v |= b << var_block_lsb(x);
    }
    return v;
}

std::string BlockLayout::render_bits(const BigInt& value) const {
    return to_bits(value, total_bits());
}

std::string BlockLayout::render_bits_grouped(const BigInt& value) const {
    std::string plain = render_bits(value);
    std::vector<int> widths{count_block_bits, pad1_bits, type_block_bits, pad2_bits};
    for (int x = 0; x < num_vars; ++x) widths.push_back(var_block_bits);
    std::string out;
    std::size_t at = 0;
    for (int w : widths) {
        out += plain.substr(at, static_cast<std::size_t>(w));
        out += '|';
        at += static_cast<std::size_t>(w);
    }
    return out;
}

std::vector<std::string> BlockLayout::carry_safety_report(std::size_t total_items) const {
    std::vector<std::string> report;
    BigInt items(static_cast<std::uint64_t>(total_items));
    if (BigInt(num_vars + num_constraints) >= (BigInt(1) << count_block_bits))
        report.push_back("count block cannot hold the required item count");
    if (items >= (BigInt(1) << pad1_bits))
        report.push_back("pad1 too narrow for worst-case type-block carry");
    if (items >= (BigInt(1) << pad2_bits))
        report.push_back("pad2 too narrow for worst-case variable-block carry");
    // per variable block: lambda*B from constraints plus lambda*B from the
    // variable item must fit without carrying out
    if (2 * lambda * avgfree_bound >= (BigInt(1) << var_block_bits))
        report.push_back("variable block too narrow for 2*lambda*B");
    return report;
}

// ---------------------------------------------------------------------------
// group_to_csp
// ---------------------------------------------------------------------------

namespace {

bool clause_satisfied(const std::vector<int>& clause, const std::vector<char>& values) {
    for (int lit : clause) {
        bool v = values[static_cast<std::size_t>(std::abs(lit) - 1)] != 0;
        if ((lit > 0) == v) return true;
    }
    return false;
}

}  // namespace

CspInstance group_to_csp(const CnfFormula& phi, int a, const ReductionCaps& caps) {
    if (a < 1) throw std::invalid_argument("block size must be >= 1");
    if (a > 20) throw std::invalid_argument("block size too large for explicit universe");
    CspInstance psi;
    psi.universe_bits = a;
    psi.num_vars = (phi.num_vars + a - 1) / a;

    // variable v (1-based) lives in super-variable (v-1)/a, bit (v-1)%a; a
    // universe value u encodes the bits of u-1
    int gamma = a * std::max(phi.occurrence_bound, 1);
    std::vector<char> values(static_cast<std::size_t>(phi.num_vars), 0);

    for (std::size_t begin = 0; begin < phi.clauses.size(); begin += static_cast<std::size_t>(gamma)) {
        std::size_t end = std::min(begin + static_cast<std::size_t>(gamma), phi.clauses.size());
        CspConstraint c;
        std::set<int> touched;
        for (std::size_t ci = begin; ci < end; ++ci)
            for (int lit : phi.clauses[ci]) touched.insert((std::abs(lit) - 1) / a);
        c.vars.assign(touched.begin(), touched.end());

        std::uint64_t joint = 1;
        for (std::size_t i = 0; i < c.vars.size(); ++i) {
            joint *= 1ull << a;
            if (joint > caps.tuples_per_constraint) throw std::runtime_error("constraint blow-up");
        }

        std::vector<int> tuple(c.vars.size(), 1);
        for (;;) {
            // decode the tuple into the underlying boolean variables
            for (std::size_t i = 0; i < c.vars.size(); ++i) {
                int sv = c.vars[i];
                int bits = tuple[i] - 1;
                for (int bit = 0; bit < a; ++bit) {
                    int v = sv * a + bit;  // 0-based original variable
                    if (v < phi.num_vars)
                        values[static_cast<std::size_t>(v)] = static_cast<char>((bits >> bit) & 1);
                }
            }
            bool ok = true;
            for (std::size_t ci = begin; ci < end && ok; ++ci)
                ok = clause_satisfied(phi.clauses[ci], values);
            if (ok) c.tuples.push_back(tuple);

            std::size_t i = c.vars.size();
            while (i > 0) {
                --i;
                if (tuple[i] < (1 << a)) {
                    ++tuple[i];
                    break;
                }
                tuple[i] = 1;
                if (i == 0) goto done;
            }
            if (c.vars.empty()) break;
        }
    done:
        psi.constraints.push_back(std::move(c));
    }

    std::vector<int> degree(static_cast<std::size_t>(psi.num_vars), 0);
    for (const auto& c : psi.constraints) {
        psi.arity_bound = std::max(psi.arity_bound, static_cast<int>(c.vars.size()));
        for (int v : c.vars) ++degree[static_cast<std::size_t>(v)];
    }
    for (int d : degree) psi.degree_bound = std::max(psi.degree_bound, d);
    return psi;
}

// ---------------------------------------------------------------------------
// csp_to_subset_sum
// ---------------------------------------------------------------------------

std::pair<SubsetSumInstance, SsWitnessMap> csp_to_subset_sum(const CspInstance& psi,
                                                             const AvgFreeSet& S,
                                                             LayoutMode mode) {
    std::int64_t universe = 1ll << psi.universe_bits;
    if (static_cast<std::int64_t>(S.elements.size()) < universe)
        throw std::invalid_argument("average-free set too small");
    int lambda = std::max({psi.degree_bound, psi.arity_bound, 1});
    if (S.k < lambda)
        throw std::invalid_argument("average-free set order below required lambda");

    int n_vars = psi.num_vars;
    int n_cons = static_cast<int>(psi.constraints.size());

    auto f = [&](int value) -> const BigInt& {  // order-preserving injection
        return S.elements[static_cast<std::size_t>(value - 1)];
    };
    const BigInt& B = S.bound;

    std::vector<int> degree(static_cast<std::size_t>(n_vars), 0);
    for (const auto& c : psi.constraints)
        for (int v : c.vars) ++degree[static_cast<std::size_t>(v)];

    std::size_t total_items = static_cast<std::size_t>(n_vars) * static_cast<std::size_t>(universe);
    for (const auto& c : psi.constraints) total_items += c.tuples.size();

    BlockLayout layout;
    layout.num_vars = n_vars;
    layout.num_constraints = n_cons;
    layout.type_block_bits = n_vars + n_cons;
    layout.lambda = lambda;
    layout.avgfree_bound = B;
    if (mode == LayoutMode::PaperExample) {
        layout.count_block_bits = 3;
        layout.pad1_bits = 3;
        layout.pad2_bits = 3;
        layout.var_block_bits = 4;
    } else {
        layout.count_block_bits = bits_for(BigInt(n_vars + n_cons));
        layout.pad1_bits = bits_for(BigInt(static_cast<std::uint64_t>(total_items)));
        layout.pad2_bits = layout.pad1_bits;
        layout.var_block_bits = bits_for(2 * lambda * B);
    }

    BigInt lambdaB = lambda * B;
    std::vector<std::pair<BigInt, SsItemProvenance>> entries;
    entries.reserve(total_items);

    std::vector<BigInt> blocks(static_cast<std::size_t>(n_vars), BigInt(0));
    for (int x = 0; x < n_vars; ++x) {
        for (int alpha = 1; alpha <= universe; ++alpha) {
            std::fill(blocks.begin(), blocks.end(), BigInt(0));
            blocks[static_cast<std::size_t>(x)] = lambdaB - degree[static_cast<std::size_t>(x)] * f(alpha);
            if (blocks[static_cast<std::size_t>(x)] < 0)
                throw std::logic_error("variable block went negative; bound below max element?");
            SsItemProvenance p;
            p.is_var = true;
            p.var = x;
            p.value = alpha;
            entries.emplace_back(layout.assemble(1, x, blocks), std::move(p));
        }
    }
    for (int ci = 0; ci < n_cons; ++ci) {
        const auto& c = psi.constraints[static_cast<std::size_t>(ci)];
        for (const auto& tuple : c.tuples) {
            std::fill(blocks.begin(), blocks.end(), BigInt(0));
            for (std::size_t i = 0; i < c.vars.size(); ++i)
                blocks[static_cast<std::size_t>(c.vars[i])] = f(tuple[i]);
            SsItemProvenance p;
            p.constraint = ci;
            p.scope = c.vars;
            p.tuple = tuple;
            entries.emplace_back(layout.assemble(1, n_vars + ci, blocks), std::move(p));
        }
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    SubsetSumInstance inst;
    SsWitnessMap map;
    map.layout = layout;
    for (auto& [value, prov] : entries) {
        inst.items.push_back(std::move(value));
        map.items.push_back(std::move(prov));
    }
    std::fill(blocks.begin(), blocks.end(), lambdaB);
    inst.target = layout.assemble(n_vars + n_cons, -1, blocks);
    // target has every type bit set
    for (int t = 0; t < layout.type_block_bits; ++t)
        inst.target |= BigInt(1) << layout.type_bit_lsb(t);
    inst.target_bits = layout.render_bits(inst.target);
    return {std::move(inst), std::move(map)};
}

std::vector<int> decode_ss_solution(const SolutionCertificate& cert,
                                    const SubsetSumInstance& inst, const SsWitnessMap& map) {
    if (cert.kind != CertKind::Subset)
        throw std::invalid_argument("certificate/instance type mismatch");
    if (!check_certificate(inst, cert)) throw std::invalid_argument("not a solution");

    std::vector<int> assignment(static_cast<std::size_t>(map.layout.num_vars), 0);
    for (int idx : cert.indices) {
        const SsItemProvenance& p = map.items[static_cast<std::size_t>(idx)];
        if (!p.is_var) continue;
        if (assignment[static_cast<std::size_t>(p.var)] != 0)
            throw std::logic_error("two items of the same variable type in a solution");
        assignment[static_cast<std::size_t>(p.var)] = p.value;
    }
    for (int v : assignment)
        if (v == 0) throw std::logic_error("solution misses a variable type");
    // constraint items must be consistent with the read-off assignment
    for (int idx : cert.indices) {
        const SsItemProvenance& p = map.items[static_cast<std::size_t>(idx)];
        if (p.is_var) continue;
        for (std::size_t i = 0; i < p.scope.size(); ++i)
            if (assignment[static_cast<std::size_t>(p.scope[i])] != p.tuple[i])
                throw std::logic_error("constraint item inconsistent with assignment");
    }
    return assignment;
}

// ---------------------------------------------------------------------------
// split_to_ksum / or_compose
// ---------------------------------------------------------------------------

KSumInstance split_to_ksum(const SubsetSumInstance& inst, int k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    std::vector<BigInt> items = inst.items;
    canonicalize_items(items);

    KSumInstance out;
    out.target = inst.target;
    std::size_t n = items.size();
    std::size_t base = n / static_cast<std::size_t>(k);
    std::size_t extra = n % static_cast<std::size_t>(k);
    std::size_t at = 0;
    for (int gi = 0; gi < k; ++gi) {
        std::size_t len = base + (static_cast<std::size_t>(gi) < extra ? 1 : 0);
        std::set<BigInt> sums;
        // all subset sums of this part, filtered to <= target
        std::vector<BigInt> part(items.begin() + static_cast<std::ptrdiff_t>(at),
                                 items.begin() + static_cast<std::ptrdiff_t>(at + len));
        at += len;
        std::vector<BigInt> acc{BigInt(0)};
        for (const auto& x : part) {
            std::size_t sz = acc.size();
            for (std::size_t i = 0; i < sz; ++i) {
                BigInt s = acc[i] + x;
                if (s <= inst.target) acc.push_back(std::move(s));
            }
        }
        sums.insert(acc.begin(), acc.end());
        out.groups.emplace_back(sums.begin(), sums.end());
    }
    return out;
}

OrBundle or_compose(std::vector<SubsetSumInstance> instances) {
    if (instances.empty()) throw std::invalid_argument("empty OR bundle");
    return OrBundle{std::move(instances)};
}

// ---------------------------------------------------------------------------
// witness map serialization
// ---------------------------------------------------------------------------

Json to_json(const SsWitnessMap& map) {
    const BlockLayout& l = map.layout;
    Json layout{{"count_block_bits", l.count_block_bits},
                {"pad1_bits", l.pad1_bits},
                {"type_block_bits", l.type_block_bits},
                {"pad2_bits", l.pad2_bits},
                {"var_block_bits", l.var_block_bits},
                {"vars", l.num_vars},
                {"constraints", l.num_constraints},
                {"lambda", l.lambda},
                {"avgfree_bound", to_decimal(l.avgfree_bound)}};
    Json items = Json::array();
    for (const auto& p : map.items) {
        if (p.is_var)
            items.push_back(Json{{"type", "var"}, {"var", p.var}, {"value", p.value}});
        else
            items.push_back(Json{{"type", "constraint"},
                                 {"constraint", p.constraint},
                                 {"scope", p.scope},
                                 {"tuple", p.tuple}});
    }
    return Json{{"layout", layout}, {"items", items}};
}

SsWitnessMap witness_map_from_json(const Json& j) {
    SsWitnessMap map;
    const Json& l = j.at("layout");
    map.layout.count_block_bits = l.at("count_block_bits").get<int>();
    map.layout.pad1_bits = l.at("pad1_bits").get<int>();
    map.layout.type_block_bits = l.at("type_block_bits").get<int>();
    map.layout.pad2_bits = l.at("pad2_bits").get<int>();
    map.layout.var_block_bits = l.at("var_block_bits").get<int>();
    map.layout.num_vars = l.at("vars").get<int>();
    map.layout.num_constraints = l.at("constraints").get<int>();
    map.layout.lambda = l.at("lambda").get<int>();
    map.layout.avgfree_bound = from_decimal(l.at("avgfree_bound").get<std::string>());
    for (const auto& it : j.at("items")) {
        SsItemProvenance p;
        if (it.at("type") == "var") {
            p.is_var = true;
            p.var = it.at("var").get<int>();
            p.value = it.at("value").get<int>();
        } else {
            p.constraint = it.at("constraint").get<int>();
            p.scope = it.at("scope").get<std::vector<int>>();
            p.tuple = it.at("tuple").get<std::vector<int>>();
        }
        map.items.push_back(std::move(p));
    }
    return map;
}

}  // namespace sumpath
