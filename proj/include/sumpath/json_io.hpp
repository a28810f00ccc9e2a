#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sumpath/instances.hpp"

namespace sumpath {

using Json = nlohmann::json;

// JSON wire formats. Big integers travel as decimal strings so that values
// beyond 2^53 survive any JSON tooling. Graph vertices are 0-based.
//
//   Subset Sum : {"items":["3","5"],"target":"8","target_bits":"1000"?}
//   k-SUM      : {"groups":[["1","2"],["3"]],"target":"5"}
//   Bicriteria : {"n":4,"edges":[[0,1,"2","3"],...],"s":0,"t":3,"L":"9","C":"7"}
//   CSP        : {"universe_bits":1,"vars":3,"constraints":[{"vars":[0,1],"tuples":[[1,1],[2,2]]}]}
//   Exact path : {"k":2,"layers":[[0],[1]],"edges":[[0,1,"4"]],"target":"4","weight_bound":"5"}
//   Avg-free   : {"k":2,"elements":["0","1"],"bound":"4","params":{"D":2,"M":2,"base":5}}

Json to_json(const SubsetSumInstance& inst);
Json to_json(const KSumInstance& inst);
Json to_json(const BicriteriaInstance& inst);
Json to_json(const CspInstance& inst);
Json to_json(const ExactKPathInstance& inst);
Json to_json(const ExactBicritKPathInstance& inst);
Json to_json(const SolutionCertificate& cert);

SubsetSumInstance subset_sum_from_json(const Json& j);
KSumInstance ksum_from_json(const Json& j);
BicriteriaInstance bicriteria_from_json(const Json& j);
CspInstance csp_from_json(const Json& j);
ExactKPathInstance exact_kpath_from_json(const Json& j);
ExactBicritKPathInstance exact_bicrit_from_json(const Json& j);
SolutionCertificate certificate_from_json(const Json& j);

// One JSON document per line; used for OR-bundles and instance batches.
std::vector<Json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<Json>& docs);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// DIMACS .cnf
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& phi);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const CnfFormula& phi);

// Recomputes the tracked occurrence bound from the clause list.
int compute_occurrence_bound(int num_vars, const std::vector<std::vector<int>>& clauses);

}  // namespace sumpath
