#pragma once

// JSON file formats:
//   relation  {"variant":"finite-partition","blocks":[["a","b"],["c"]]}
//             {"variant":"identity"} | {"variant":"e0"}
//   tree      {"nodes":[[0],[0,1],[2]],"branches":[{"prefix":[0],"period":[1]}]}
//   vec       {"prefixes":["01","1"]}
//   assembly  the FiberAssembly fields; rationals as "num/den" strings.
// Malformed documents raise Error("InvalidJson").

#include <string>
#include <vector>

#include "json.hpp"
#include "wildpi/archipelago.hpp"
#include "wildpi/becker.hpp"
#include "wildpi/relcalc.hpp"

namespace wildpi {

using Json = nlohmann::ordered_json;

Json relation_to_json(const EquivRelation &E);
EquivRelation relation_from_json(const Json &j);

Json tree_to_json(const TreeDesc &t);
TreeDesc tree_from_json(const Json &j);

Json vec_to_json(const std::vector<BranchPrefix> &vec);
std::vector<BranchPrefix> vec_from_json(const Json &j);

std::string rational_to_string(const Rational &r);
Rational rational_from_string(const std::string &s);

Json assembly_to_json(const FiberAssembly &a);
FiberAssembly assembly_from_json(const Json &j);

/// Parses text, mapping syntax errors to Error("InvalidJson").
Json parse_json(const std::string &text);
/// Reads and parses a file; Error("IOError") when it cannot be read.
Json load_json_file(const std::string &path);

} // namespace wildpi
