#include "sumpath/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sumpath {

namespace {

Json dec(const BigInt& x) { return to_decimal(x); }

BigInt undec(const Json& j) {
    if (j.is_string()) return from_decimal(j.get<std::string>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    throw std::invalid_argument("expected decimal string or integer");
}

std::int64_t undec_i64(const Json& j) {
    BigInt v = undec(j);
    if (v < 0 || v > BigInt(INT64_MAX)) throw std::invalid_argument("value out of int64 range");
    return v.convert_to<std::int64_t>();
}

}  // namespace

Json to_json(const SubsetSumInstance& inst) {
    Json items = Json::array();
    for (const auto& x : inst.items) items.push_back(dec(x));
    Json j{{"items", items}, {"target", dec(inst.target)}};
    if (inst.target_bits) j["target_bits"] = *inst.target_bits;
    return j;
}

SubsetSumInstance subset_sum_from_json(const Json& j) {
    SubsetSumInstance inst;
    for (const auto& x : j.at("items")) inst.items.push_back(undec(x));
    inst.target = undec(j.at("target"));
    if (j.contains("target_bits")) inst.target_bits = j.at("target_bits").get<std::string>();
    return inst;
}

Json to_json(const KSumInstance& inst) {
    Json groups = Json::array();
    for (const auto& g : inst.groups) {
        Json group = Json::array();
        for (const auto& x : g) group.push_back(dec(x));
        groups.push_back(group);
    }
    return Json{{"groups", groups}, {"target", dec(inst.target)}};
}

KSumInstance ksum_from_json(const Json& j) {
    KSumInstance inst;
    for (const auto& g : j.at("groups")) {
        std::vector<BigInt> group;
        for (const auto& x : g) group.push_back(undec(x));
        inst.groups.push_back(std::move(group));
    }
    inst.target = undec(j.at("target"));
    return inst;
}

Json to_json(const BicriteriaInstance& inst) {
    Json edges = Json::array();
    for (const auto& e : inst.edges)
        edges.push_back(Json::array({e.tail, e.head, dec(e.length), dec(e.cost)}));
    return Json{{"n", inst.num_vertices}, {"edges", edges},          {"s", inst.source},
                {"t", inst.sink},         {"L", dec(inst.budget_length)}, {"C", dec(inst.budget_cost)}};
}

BicriteriaInstance bicriteria_from_json(const Json& j) {
    BicriteriaInstance inst;
    inst.num_vertices = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        if (e.size() != 4) throw std::invalid_argument("edge must be [u,v,len,cost]");
        inst.edges.push_back({e[0].get<int>(), e[1].get<int>(), undec(e[2]), undec(e[3])});
    }
    inst.source = j.at("s").get<int>();
    inst.sink = j.at("t").get<int>();
    inst.budget_length = undec(j.at("L"));
    inst.budget_cost = undec(j.at("C"));
    return inst;
}

Json to_json(const CspInstance& inst) {
    Json constraints = Json::array();
    for (const auto& c : inst.constraints)
        constraints.push_back(Json{{"vars", c.vars}, {"tuples", c.tuples}});
    return Json{{"universe_bits", inst.universe_bits},
                {"vars", inst.num_vars},
                {"constraints", constraints}};
}

CspInstance csp_from_json(const Json& j) {
    CspInstance inst;
    inst.universe_bits = j.at("universe_bits").get<int>();
    inst.num_vars = j.at("vars").get<int>();
    for (const auto& c : j.at("constraints")) {
        CspConstraint cc;
        cc.vars = c.at("vars").get<std::vector<int>>();
        cc.tuples = c.at("tuples").get<std::vector<std::vector<int>>>();
        inst.constraints.push_back(std::move(cc));
    }
    // degree/arity bounds are derived, not trusted from the wire
    std::vector<int> degree(static_cast<std::size_t>(std::max(inst.num_vars, 0)), 0);
    for (const auto& c : inst.constraints) {
        inst.arity_bound = std::max(inst.arity_bound, static_cast<int>(c.vars.size()));
        for (int v : c.vars)
            if (v >= 0 && v < inst.num_vars) ++degree[static_cast<std::size_t>(v)];
    }
    for (int d : degree) inst.degree_bound = std::max(inst.degree_bound, d);
    return inst;
}

namespace {

template <typename Inst>
Json layered_to_json(const Inst& inst) {
    Json j{{"k", inst.path_size},
           {"layers", inst.layers},
           {"weight_bound", dec(BigInt(inst.weight_bound))}};
    return j;
}

template <typename Inst>
void layered_from_json(const Json& j, Inst& inst) {
    inst.path_size = j.at("k").get<int>();
    inst.layers = j.at("layers").get<std::vector<std::vector<int>>>();
    inst.weight_bound = undec_i64(j.at("weight_bound"));
}

}  // namespace

Json to_json(const ExactKPathInstance& inst) {
    Json j = layered_to_json(inst);
    Json edges = Json::array();
    for (const auto& e : inst.edges)
        edges.push_back(Json::array({e.tail, e.head, dec(BigInt(e.weight))}));
    j["edges"] = edges;
    j["target"] = dec(BigInt(inst.target));
    return j;
}

ExactKPathInstance exact_kpath_from_json(const Json& j) {
    ExactKPathInstance inst;
    layered_from_json(j, inst);
    for (const auto& e : j.at("edges"))
        inst.edges.push_back({e[0].get<int>(), e[1].get<int>(), undec_i64(e[2])});
    inst.target = undec_i64(j.at("target"));
    return inst;
}

Json to_json(const ExactBicritKPathInstance& inst) {
    Json j = layered_to_json(inst);
    Json edges = Json::array();
    for (const auto& e : inst.edges)
        edges.push_back(Json::array({e.tail, e.head, dec(BigInt(e.w1)), dec(BigInt(e.w2))}));
    j["edges"] = edges;
    j["targets"] = Json::array({dec(BigInt(inst.target1)), dec(BigInt(inst.target2))});
    return j;
}

ExactBicritKPathInstance exact_bicrit_from_json(const Json& j) {
    ExactBicritKPathInstance inst;
    layered_from_json(j, inst);
    for (const auto& e : j.at("edges"))
        inst.edges.push_back({e[0].get<int>(), e[1].get<int>(), undec_i64(e[2]), undec_i64(e[3])});
    inst.target1 = undec_i64(j.at("targets").at(0));
    inst.target2 = undec_i64(j.at("targets").at(1));
    return inst;
}

Json to_json(const SolutionCertificate& cert) {
    return Json{{"kind", cert_kind_name(cert.kind)}, {"indices", cert.indices}};
}

SolutionCertificate certificate_from_json(const Json& j) {
    SolutionCertificate cert;
    cert.kind = cert_kind_from_name(j.at("kind").get<std::string>());
    cert.indices = j.at("indices").get<std::vector<int>>();
    return cert;
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Json read_json_file(const std::string& path) { return Json::parse(read_text_file(path)); }

void write_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump() + "\n");
}

std::vector<Json> read_jsonl(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<Json> docs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        docs.push_back(Json::parse(line));
    }
    return docs;
}

void write_jsonl(const std::string& path, const std::vector<Json>& docs) {
    std::ostringstream out;
    for (const auto& d : docs) out << d.dump() << "\n";
    write_text_file(path, out.str());
}

// ---------------------------------------------------------------------------
// DIMACS
// ---------------------------------------------------------------------------

int compute_occurrence_bound(int num_vars, const std::vector<std::vector<int>>& clauses) {
    std::vector<int> occ(static_cast<std::size_t>(std::max(num_vars, 0)), 0);
    for (const auto& clause : clauses) {
        std::set<int> vars;
        for (int lit : clause) vars.insert(std::abs(lit));
        for (int v : vars)
            if (v >= 1 && v <= num_vars) ++occ[static_cast<std::size_t>(v - 1)];
    }
    int bound = 0;
    for (int c : occ) bound = std::max(bound, c);
    return bound;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    CnfFormula phi;
    bool header_seen = false;
    int declared_clauses = 0;
    std::string line;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            hs >> p >> fmt >> phi.num_vars >> declared_clauses;
            if (fmt != "cnf") throw std::invalid_argument("not a DIMACS cnf header");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                phi.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!header_seen) throw std::invalid_argument("missing DIMACS header");
    if (!current.empty()) phi.clauses.push_back(current);  // tolerate missing final 0
    phi.occurrence_bound = compute_occurrence_bound(phi.num_vars, phi.clauses);
    return phi;
}

std::string to_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << " " << phi.clauses.size() << "\n";
    for (const auto& clause : phi.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

CnfFormula read_dimacs_file(const std::string& path) { return parse_dimacs(read_text_file(path)); }

void write_dimacs_file(const std::string& path, const CnfFormula& phi) {
    write_text_file(path, to_dimacs(phi));
}

}  // namespace sumpath
