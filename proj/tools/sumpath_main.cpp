// sumpath: instance transformations and exact solvers for subset-sum-family
// and bicriteria-path problems, exposed as composable subcommands.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sumpath/avgfree.hpp"
#include "sumpath/brute.hpp"
#include "sumpath/generators.hpp"
#include "sumpath/json_io.hpp"
#include "sumpath/reductions_graph.hpp"
#include "sumpath/reductions_numeric.hpp"
#include "sumpath/rng.hpp"
#include "sumpath/solvers.hpp"
#include "sumpath/threshold.hpp"

namespace {

using namespace sumpath;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct ManifestBuilder {
    std::string command;
    std::map<std::string, std::string> inputs;  // path -> digest
    std::uint64_t seed = 0;
    Json config = Json::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void input(const std::string& path) {
        std::ostringstream hex;
        hex << std::hex << fnv1a64(read_text_file(path));
        inputs[path] = hex.str();
    }
    void output(const std::string& path) { outputs.push_back(path); }
    void write(const std::string& path) const {
        if (path.empty()) return;
        auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        Json j{{"command", command}, {"inputs", inputs},   {"seed", seed},
               {"config", config},   {"outputs", outputs}, {"timings", Json{{"total_nanos", nanos}}}};
        write_json_file(path, j);
    }
};

enum class InstKind { SubsetSum, KSum, Bicriteria, Csp, ExactKPath, Cnf, Bundle };

InstKind sniff_kind(const std::string& path) {
    std::string text = read_text_file(path);
    std::size_t at = text.find_first_not_of(" \t\r\n");
    if (at == std::string::npos) throw std::runtime_error("empty input file");
    if (text[at] != '{') return InstKind::Cnf;
    std::size_t first_nl = text.find('\n', at);
    if (first_nl != std::string::npos && text.find('{', first_nl) != std::string::npos)
        return InstKind::Bundle;  // several JSON lines form an OR bundle
    Json j = Json::parse(first_nl == std::string::npos ? text.substr(at)
                                                       : text.substr(at, first_nl - at));
    if (j.contains("items")) return InstKind::SubsetSum;
    if (j.contains("groups")) return InstKind::KSum;
    if (j.contains("layers")) return InstKind::ExactKPath;
    if (j.contains("edges")) return InstKind::Bicriteria;
    if (j.contains("constraints")) return InstKind::Csp;
    throw std::runtime_error("cannot determine instance type of " + path);
}

OrBundle load_bundle(const std::string& path) {
    std::vector<SubsetSumInstance> members;
    for (const auto& doc : read_jsonl(path)) members.push_back(subset_sum_from_json(doc));
    return or_compose(std::move(members));
}

void emit(const std::string& out, const Json& j) {
    if (out.empty())
        std::cout << j.dump() << "\n";
    else
        write_json_file(out, j);
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(const std::string& kind, std::uint64_t seed, const std::string& out,
            ManifestBuilder& manifest, int n, int m, int width, int universe_bits,
            int constraints, int k, double eps, std::uint64_t max_value, int edge_percent,
            bool paper_example, const std::string& from_cnf, int a) {
    manifest.config = Json{{"kind", kind}, {"n", n}, {"seed", seed}};
    if (kind == "cnf") {
        CnfFormula phi = gen_random_cnf(n, m, width, seed);
        if (out.empty())
            std::cout << to_dimacs(phi);
        else
            write_dimacs_file(out, phi);
    } else if (kind == "csp") {
        CspInstance psi =
            paper_example ? paper_example_csp() : gen_random_csp(n, universe_bits, constraints, seed);
        emit(out, to_json(psi));
    } else if (kind == "subset-sum") {
        if (!from_cnf.empty()) {
            // the hard-instance chain: CNF -> structured CSP -> Subset Sum
            manifest.input(from_cnf);
            CnfFormula phi = read_dimacs_file(from_cnf);
            CspInstance psi = group_to_csp(phi, a);
            int lambda = std::max({psi.degree_bound, psi.arity_bound, 2});
            AvgFreeSet S = build_behrend_set(lambda, eps, 1 << psi.universe_bits);
            auto [inst, map] = csp_to_subset_sum(psi, S);
            emit(out, to_json(inst));
            if (!out.empty()) {
                write_json_file(out + ".witness.json", to_json(map));
                manifest.output(out + ".witness.json");
            }
        } else {
            emit(out, to_json(gen_random_subset_sum(n, max_value, seed)));
        }
    } else if (kind == "ksum") {
        emit(out, to_json(gen_random_ksum(k, n, max_value, seed)));
    } else if (kind == "bicriteria") {
        emit(out, to_json(gen_random_bicriteria(n, edge_percent, max_value, seed)));
    } else if (kind == "avgfree") {
        AvgFreeSet S = build_behrend_set(k, eps, n);
        // achieved density exponent, reported against the requested epsilon
        double c0 = 0.0;
        if (S.bound > 1 && n > 1) {
            double log_bound = static_cast<double>(bit_length(S.bound)) * 0.6931;
            c0 = eps * (log_bound - (1.0 + eps) * std::log(static_cast<double>(n))) /
                 std::log(static_cast<double>(k));
        }
        std::cerr << "avgfree: D=" << S.param_digits << " M=" << S.param_digit_cap
                  << " base=" << S.param_base << " achieved-C0=" << c0 << "\n";
        emit(out, to_json(S));
    } else {
        std::cerr << "unknown kind: " << kind << "\n";
        return kExitError;
    }
    if (!out.empty()) manifest.output(out);
    return 0;
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

int run_reduce(const std::string& step, const std::string& in, const std::string& out,
               ManifestBuilder& manifest, int a, int k, int tau, const std::string& layout,
               const std::string& M_str, const std::string& witness_out,
               const std::string& trace_out, double eps) {
    manifest.input(in);
    manifest.config = Json{{"step", step}, {"a", a}, {"k", k}, {"tau", tau}, {"layout", layout}};

    if (step == "sat2csp") {
        CnfFormula phi = read_dimacs_file(in);
        emit(out, to_json(group_to_csp(phi, a)));
    } else if (step == "csp2ss") {
        CspInstance psi = csp_from_json(read_json_file(in));
        int lambda = std::max({psi.degree_bound, psi.arity_bound, 2});
        AvgFreeSet S;
        LayoutMode mode = LayoutMode::Minimal;
        if (layout == "paper-example") {
            mode = LayoutMode::PaperExample;
            S.elements = {BigInt(1), BigInt(2)};
            S.k = 2;
            S.bound = 2;
        } else {
            S = build_behrend_set(lambda, eps, 1 << psi.universe_bits);
        }
        auto [inst, map] = csp_to_subset_sum(psi, S, mode);
        emit(out, to_json(inst));
        if (!witness_out.empty()) {
            write_json_file(witness_out, to_json(map));
            manifest.output(witness_out);
        }
    } else if (step == "ss2ksum") {
        SubsetSumInstance inst = subset_sum_from_json(read_json_file(in));
        emit(out, to_json(split_to_ksum(inst, k)));
    } else if (step == "or2path") {
        OrBundle bundle = load_bundle(in);
        BigInt M = 0;
        for (const auto& member : bundle.instances) {
            if (member.target > M) M = member.target;
            for (const auto& z : member.items)
                if (z > M) M = z;
        }
        if (!M_str.empty()) M = from_decimal(M_str);
        auto [g, trace] = or_to_bicriteria(bundle, M);
        emit(out, to_json(g));
        if (!trace_out.empty()) {
            write_json_file(trace_out, to_json(trace));
            manifest.output(trace_out);
        }
    } else if (step == "ksum2path") {
        KSumInstance inst = ksum_from_json(read_json_file(in));
        auto [g, trace] = ksum_to_multigraph(inst);
        emit(out, to_json(g));
        if (!trace_out.empty()) {
            write_json_file(trace_out, to_json(trace));
            manifest.output(trace_out);
        }
    } else if (step == "digit-expand") {
        BicriteriaInstance g = bicriteria_from_json(read_json_file(in));
        emit(out, to_json(digit_expand(g, tau)));
    } else if (step == "exact2bicrit") {
        ExactKPathInstance inst = exact_kpath_from_json(read_json_file(in));
        std::vector<Json> docs;
        for (const auto& g : exactpath_to_bicriteria(inst)) docs.push_back(to_json(g));
        if (out.empty())
            for (const auto& d : docs) std::cout << d.dump() << "\n";
        else
            write_jsonl(out, docs);
    } else if (step == "bicrit2exact") {
        BicriteriaInstance g = bicriteria_from_json(read_json_file(in));
        auto outputs = bicriteria_to_exact_instances(g, k);
        std::vector<Json> docs;
        Json index = Json::array();
        for (const auto& po : outputs) {
            docs.push_back(to_json(po.instance));
            index.push_back(Json{{"coloring", po.coloring}, {"entry", po.entry}});
        }
        if (out.empty())
            for (const auto& d : docs) std::cout << d.dump() << "\n";
        else
            write_jsonl(out, docs);
        if (!trace_out.empty()) {
            write_json_file(trace_out, Json{{"instances", index}});
            manifest.output(trace_out);
        }
    } else {
        std::cerr << "unknown step: " << step << "\n";
        return kExitError;
    }
    if (!out.empty()) manifest.output(out);
    return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int run_solve(const std::string& algo, const std::string& in, const std::string& out,
              ManifestBuilder& manifest, int k, const SolverCaps& caps, const std::string& axis) {
    manifest.input(in);
    manifest.config = Json{{"algo", algo}, {"k", k}};
    InstKind kind = sniff_kind(in);
    SolveResult result;

    if (kind == InstKind::Bundle) {
        OrBundle bundle = load_bundle(in);
        if (algo == "brute") {
            for (const auto& member : bundle.instances) {
                auto r = brute_subset_sum(member);
                if (r.yes) {
                    result.yes = true;
                    result.certificate = r.witness;
                    break;
                }
            }
        } else {
            auto r = solve_or_bundle(bundle, algo == "mim" ? SubsetSumAlgo::Mim : SubsetSumAlgo::Dp,
                                     caps);
            result.yes = r.yes;
            result.certificate = r.certificate;
        }
    } else if (kind == InstKind::SubsetSum) {
        SubsetSumInstance inst = subset_sum_from_json(read_json_file(in));
        if (algo == "dp")
            result = solve_subset_sum_dp(inst, caps);
        else if (algo == "mim")
            result = solve_subset_sum_mim(inst, caps);
        else if (algo == "brute") {
            auto r = brute_subset_sum(inst);
            result.yes = r.yes;
            result.certificate = r.witness;
        } else
            throw std::runtime_error("algo " + algo + " does not apply to subset-sum");
    } else if (kind == InstKind::KSum) {
        KSumInstance inst = ksum_from_json(read_json_file(in));
        if (algo == "ksum" || algo == "mim")
            result = solve_ksum(inst, caps);
        else if (algo == "brute") {
            auto r = brute_ksum(inst);
            result.yes = r.yes;
            result.certificate = r.witness;
        } else
            throw std::runtime_error("algo " + algo + " does not apply to k-sum");
    } else if (kind == InstKind::Bicriteria) {
        BicriteriaInstance inst = bicriteria_from_json(read_json_file(in));
        if (algo == "joksch") {
            // run the table over the smaller budget axis
            bool swap = axis == "cost" || (axis == "auto" && inst.budget_cost < inst.budget_length);
            if (!swap) {
                result = solve_bicriteria_joksch(inst, caps);
            } else {
                BicriteriaInstance swapped = swap_criteria(inst);
                result = solve_bicriteria_joksch(swapped, caps);
                if (result.certificate) {
                    // map edge indices back onto the original edge list
                    SolutionCertificate translated{CertKind::Path, {}};
                    std::vector<char> used(inst.edges.size(), 0);
                    for (int ei : result.certificate->indices) {
                        const BiEdge& e = swapped.edges[static_cast<std::size_t>(ei)];
                        for (std::size_t i = 0; i < inst.edges.size(); ++i) {
                            const BiEdge& cand = inst.edges[i];
                            if (!used[i] && cand.tail == e.tail && cand.head == e.head &&
                                cand.length == e.cost && cand.cost == e.length) {
                                translated.indices.push_back(static_cast<int>(i));
                                used[i] = 1;
                                break;
                            }
                        }
                    }
                    result.certificate = translated;
                }
            }
        } else if (algo == "distinct")
            result = solve_bicriteria_distinct_dp(inst, caps);
        else if (algo == "kpath")
            result = solve_bicriteria_kpath(inst, k);
        else if (algo == "brute") {
            auto r = brute_bicriteria_paths(inst, inst.num_vertices);
            result.yes = r.yes;
            result.certificate = r.witness;
        } else
            throw std::runtime_error("algo " + algo + " does not apply to bicriteria");
    } else if (kind == InstKind::ExactKPath) {
        ExactKPathInstance inst = exact_kpath_from_json(read_json_file(in));
        if (algo == "exact-mim" || algo == "mim")
            result = solve_exact_kpath_mim(inst);
        else if (algo == "brute") {
            auto r = brute_exact_kpath(inst);
            result.yes = r.yes;
            result.certificate = r.witness;
        } else
            throw std::runtime_error("algo " + algo + " does not apply to exact k-path");
    } else if (kind == InstKind::Csp) {
        CspInstance inst = csp_from_json(read_json_file(in));
        if (algo == "brute") {
            auto r = brute_csp_sat(inst);
            result.yes = r.yes;
            result.certificate = r.witness;
        } else
            throw std::runtime_error("algo " + algo + " does not apply to csp");
    } else {
        throw std::runtime_error("cannot solve this input kind");
    }

    emit(out, to_json(result));
    if (!out.empty()) manifest.output(out);
    return result.yes ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int verify_equivalence(const std::string& step, int trials, std::uint64_t seed, int max_vars,
                       int k, int tau) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        if (step == "csp2ss") {
            Rng rng(s);
            int vars = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars)));
            int bits = 1 + static_cast<int>(rng.below(2));
            int cons = static_cast<int>(rng.below(4));
            CspInstance psi = gen_random_csp(vars, bits, cons, s, 17);
            int lambda = std::max({psi.degree_bound, psi.arity_bound, 2});
            AvgFreeSet S = build_behrend_set(lambda, 0.5, 1 << bits);
            auto [inst, map] = csp_to_subset_sum(psi, S);
            auto lhs = brute_csp_sat(psi);
            auto rhs = brute_subset_sum(inst);
            if (lhs.yes != rhs.yes || lhs.count != rhs.count) ++failures;
        } else if (step == "ss2ksum") {
            SubsetSumInstance inst = gen_random_subset_sum(static_cast<int>(s % 13), 40, s);
            auto lhs = brute_subset_sum(inst);
            auto rhs = solve_ksum(split_to_ksum(inst, k));
            if (lhs.yes != rhs.yes) ++failures;
        } else if (step == "or2path") {
            Rng rng(s);
            int members = 1 + static_cast<int>(rng.below(8));
            std::vector<SubsetSumInstance> list;
            bool expect = false;
            BigInt M = 0;
            for (int i = 0; i < members; ++i) {
                auto member = gen_random_subset_sum(static_cast<int>(rng.below(7)), 50,
                                                    s * 131 + static_cast<std::uint64_t>(i));
                expect = expect || brute_subset_sum(member).yes;
                if (member.target > M) M = member.target;
                for (const auto& z : member.items)
                    if (z > M) M = z;
                list.push_back(std::move(member));
            }
            auto [g, trace] = or_to_bicriteria(or_compose(list), M);
            if (solve_bicriteria_joksch(g).yes != expect) ++failures;
        } else if (step == "ksum2path") {
            KSumInstance inst = gen_random_ksum(2 + static_cast<int>(s % 3), 3, 40, s);
            auto [g, trace] = ksum_to_multigraph(inst);
            if (solve_bicriteria_joksch(g).yes != brute_ksum(inst).yes) ++failures;
        } else if (step == "digit-expand") {
            KSumInstance inst = gen_random_ksum(2 + static_cast<int>(s % 3), 3, 40, s);
            auto [g, trace] = ksum_to_multigraph(inst);
            BicriteriaInstance ex = digit_expand(g, tau);
            bool expect = brute_ksum(inst).yes;
            if (solve_bicriteria_joksch(ex).yes != expect) ++failures;
            if (solve_bicriteria_distinct_dp(ex).yes != expect) ++failures;
        } else if (step == "bicrit2exact") {
            BicriteriaInstance g =
                gen_random_bicriteria(5 + static_cast<int>(s % 4), 40, 16, s);
            int kk = 1 + static_cast<int>(s % 3);
            if (solve_bicriteria_kpath(g, kk).yes != brute_bicriteria_k_internal(g, kk).yes)
                ++failures;
        } else {
            std::cerr << "unknown equivalence step: " << step << "\n";
            return kExitError;
        }
    }
    if (failures == 0) {
        std::cout << "PASS " << step << " (" << trials << " trials)\n";
        return 0;
    }
    std::cout << "FAIL " << step << " (" << failures << "/" << trials << " mismatches)\n";
    return 1;
}

int run_verify(const std::string& mode, const std::string& in, const std::string& result_path,
               const std::string& step, int trials, std::uint64_t seed, int max_vars, int k,
               int tau) {
    if (mode == "equivalence") return verify_equivalence(step, trials, seed, max_vars, k, tau);
    if (mode == "avgfree") {
        AvgFreeSet S = avgfree_from_json(read_json_file(in));
        int order = k > 0 ? k : S.k;
        auto structural = validate(S);
        bool ok = verify_average_free(S.elements, order);
        for (const auto& v : structural) std::cout << "violation: " << v << "\n";
        std::cout << (ok ? "PASS" : "FAIL") << " avgfree order " << order << "\n";
        return ok && structural.empty() ? 0 : 1;
    }
    if (mode == "certificate") {
        Json rj = read_json_file(result_path);
        if (!rj.contains("certificate")) {
            std::cout << "FAIL no certificate in result\n";
            return 1;
        }
        SolutionCertificate cert = certificate_from_json(rj.at("certificate"));
        InstKind kind = sniff_kind(in);
        bool ok = false;
        if (kind == InstKind::SubsetSum)
            ok = check_certificate(subset_sum_from_json(read_json_file(in)), cert);
        else if (kind == InstKind::KSum)
            ok = check_certificate(ksum_from_json(read_json_file(in)), cert);
        else if (kind == InstKind::Bicriteria)
            ok = check_certificate(bicriteria_from_json(read_json_file(in)), cert);
        else if (kind == InstKind::ExactKPath)
            ok = check_certificate(exact_kpath_from_json(read_json_file(in)), cert);
        else if (kind == InstKind::Csp)
            ok = check_certificate(csp_from_json(read_json_file(in)), cert);
        std::cout << (ok ? "PASS" : "FAIL") << " certificate replay\n";
        return ok ? 0 : 1;
    }
    std::cerr << "unknown verify mode: " << mode << "\n";
    return kExitError;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

int run_bench(const std::string& suite, const std::string& out, std::uint64_t seed,
              ManifestBuilder& manifest) {
    std::ostringstream csv;
    manifest.config = Json{{"suite", suite}, {"seed", seed}};
    if (suite == "joksch") {
        // L-doubling grid on a fixed graph: wall time should scale ~linearly
        BicriteriaInstance base = gen_random_bicriteria(24, 28, 255, seed);
        csv << "L,n,m,millis,states\n";
        for (int exp = 10; exp <= 14; ++exp) {
            BicriteriaInstance g = base;
            g.budget_length = (BigInt(1) << exp);
            g.budget_cost = g.budget_length * 4;
            auto r = solve_bicriteria_joksch(g);
            csv << (1ll << exp) << "," << g.num_vertices << "," << g.edges.size() << ","
                << r.stats.nanos / 1000000.0 << "," << r.stats.states << "\n";
        }
    } else if (suite == "dp-vs-mim") {
        csv << "n,target,dp_millis,mim_millis\n";
        for (int n = 10; n <= 18; n += 2) {
            SubsetSumInstance inst =
                gen_random_subset_sum(n, 1500, seed + static_cast<std::uint64_t>(n));
            auto dp = solve_subset_sum_dp(inst);
            auto mim = solve_subset_sum_mim(inst);
            csv << n << "," << to_decimal(inst.target) << "," << dp.stats.nanos / 1000000.0 << ","
                << mim.stats.nanos / 1000000.0 << "\n";
        }
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitError;
    }
    if (out.empty())
        std::cout << csv.str();
    else {
        write_text_file(out, csv.str());
        manifest.output(out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "instance transformations and exact solvers for subset-sum and bicriteria-path problems"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 1;
    std::string manifest_path;
    app.add_option("--seed", seed, "global RNG seed");
    app.add_option("--manifest", manifest_path, "write a run manifest to this path");

    SolverCaps caps;
    std::string cap_dp;
    app.add_option("--cap-dp-target", cap_dp, "max DP target (decimal)");
    app.add_option("--cap-joksch-states", caps.joksch_state_cap, "max (L+1)*n states");
    app.add_option("--cap-mim-items", caps.mim_items_cap, "max meet-in-the-middle items");
    app.add_option("--cap-distinct-lengths", caps.distinct_length_cap,
                   "max nonzero distinct lengths");

    auto* gen = app.add_subcommand("gen", "generate instances");
    std::string gen_kind, gen_out, gen_from_cnf;
    int gen_n = 8, gen_m = 12, gen_width = 3, gen_ub = 1, gen_cons = 3, gen_k = 2, gen_a = 1;
    int gen_edgepct = 30;
    double gen_eps = 0.5;
    std::uint64_t gen_max = 100;
    bool gen_paper = false;
    gen->add_option("kind", gen_kind, "cnf|csp|subset-sum|ksum|bicriteria|avgfree")->required();
    gen->add_option("--out", gen_out, "output file (stdout otherwise)");
    gen->add_option("--n", gen_n, "size (vars, items, group size, vertices)");
    gen->add_option("--clauses", gen_m, "clause count (cnf)");
    gen->add_option("--width", gen_width, "clause width (cnf)");
    gen->add_option("--universe-bits", gen_ub, "universe bits (csp)");
    gen->add_option("--constraints", gen_cons, "constraint count (csp)");
    gen->add_option("--k", gen_k, "order (avgfree) or group count (ksum)");
    gen->add_option("--eps", gen_eps, "density parameter (avgfree)");
    gen->add_option("--max", gen_max, "max value (subset-sum, ksum, bicriteria weights)");
    gen->add_option("--edge-percent", gen_edgepct, "edge probability percent (bicriteria)");
    gen->add_flag("--paper-example", gen_paper, "emit the worked example CSP");
    gen->add_option("--from-cnf", gen_from_cnf, "chain sat2csp + csp2ss from this DIMACS file");
    gen->add_option("--a", gen_a, "super-variable block size for --from-cnf");

    auto* reduce = app.add_subcommand("reduce", "run one reduction step");
    std::string red_step, red_in, red_out, red_layout = "default", red_M, red_witness, red_trace;
    int red_a = 1, red_k = 2, red_tau = 1;
    double red_eps = 0.5;
    reduce
        ->add_option("--step", red_step,
                     "sat2csp|csp2ss|ss2ksum|or2path|ksum2path|digit-expand|exact2bicrit|bicrit2exact")
        ->required();
    reduce->add_option("--in", red_in)->required();
    reduce->add_option("--out", red_out);
    reduce->add_option("--a", red_a, "super-variable block size (sat2csp)");
    reduce->add_option("--k", red_k, "parts (ss2ksum) or internal vertices (bicrit2exact)");
    reduce->add_option("--tau", red_tau, "digit count (digit-expand)");
    reduce->add_option("--layout", red_layout, "default|paper-example (csp2ss)");
    reduce->add_option("--M", red_M, "common bound (or2path), decimal");
    reduce->add_option("--witness", red_witness, "witness-map sidecar path (csp2ss)");
    reduce->add_option("--trace", red_trace, "gadget-trace sidecar path");
    reduce->add_option("--eps", red_eps, "avgfree density parameter (csp2ss)");

    auto* solve = app.add_subcommand("solve", "run a solver; exit 0=YES 1=NO 2=error");
    std::string solve_algo, solve_in, solve_out, solve_axis = "auto";
    int solve_k = 2;
    solve->add_option("--algo", solve_algo, "dp|mim|ksum|joksch|distinct|exact-mim|kpath|brute")
        ->required();
    solve->add_option("--in", solve_in)->required();
    solve->add_option("--out", solve_out, "write the SolveResult JSON here");
    solve->add_option("--k", solve_k, "internal vertices (kpath)");
    solve->add_option("--axis", solve_axis, "length|cost|auto (joksch table axis)");

    auto* verify = app.add_subcommand("verify", "verify certificates, sets or reductions");
    std::string ver_mode, ver_in, ver_result, ver_step;
    int ver_trials = 100, ver_maxvars = 3, ver_k = 2, ver_tau = 1;
    verify->add_option("--mode", ver_mode, "certificate|avgfree|equivalence")->required();
    verify->add_option("--in", ver_in, "instance or set file");
    verify->add_option("--result", ver_result, "SolveResult file (certificate mode)");
    verify->add_option("--step", ver_step, "reduction step (equivalence mode)");
    verify->add_option("--trials", ver_trials);
    verify->add_option("--max-vars", ver_maxvars);
    verify->add_option("--k", ver_k);
    verify->add_option("--tau", ver_tau);

    auto* bench = app.add_subcommand("bench", "timing grids, CSV output");
    std::string bench_suite, bench_out;
    bench->add_option("--suite", bench_suite, "joksch|dp-vs-mim")->required();
    bench->add_option("--out", bench_out, "CSV path (stdout otherwise)");

    CLI11_PARSE(app, argc, argv);

    if (!cap_dp.empty()) caps.dp_target_cap = from_decimal(cap_dp);

    ManifestBuilder manifest;
    for (int i = 0; i < argc; ++i) manifest.command += std::string(i ? " " : "") + argv[i];
    manifest.seed = seed;

    try {
        int code = 0;
        if (gen->parsed())
            code = run_gen(gen_kind, seed, gen_out, manifest, gen_n, gen_m, gen_width, gen_ub,
                           gen_cons, gen_k, gen_eps, gen_max, gen_edgepct, gen_paper, gen_from_cnf,
                           gen_a);
        else if (reduce->parsed())
            code = run_reduce(red_step, red_in, red_out, manifest, red_a, red_k, red_tau,
                              red_layout, red_M, red_witness, red_trace, red_eps);
        else if (solve->parsed())
            code = run_solve(solve_algo, solve_in, solve_out, manifest, solve_k, caps, solve_axis);
        else if (verify->parsed())
            code = run_verify(ver_mode, ver_in, ver_result, ver_step, ver_trials, seed,
                              ver_maxvars, ver_k, ver_tau);
        else if (bench->parsed())
            code = run_bench(bench_suite, bench_out, seed, manifest);
        manifest.write(manifest_path);
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
