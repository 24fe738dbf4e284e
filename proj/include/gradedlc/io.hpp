#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gradedlc/lattice.hpp"
#include "gradedlc/rigidity.hpp"
#include "gradedlc/structure.hpp"

namespace gradedlc {

/// Malformed or invalid user input (exit code 2 at the command line).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ideal files:
//   {"d": 2, "base": "field" | "graded_pid",
//    "generators": [{"y": 0, "x": [1, 0]}, ...]}
// "y" defaults to 0 and must be 0 over the field.
CMonomialIdeal ideal_from_json(const nlohmann::json& j);
CMonomialIdeal read_ideal_file(const std::string& path);
nlohmann::json to_json(const CMonomialIdeal& ideal);

/// FNV-1a 64 of the canonical JSON form, as 16 hex digits.
std::string ideal_hash(const CMonomialIdeal& ideal);

/// "a,b,c" -> MultiDegree; surrounding parentheses or brackets are allowed.
MultiDegree parse_degree(std::string_view text);

nlohmann::json to_json(const MultiDegree& u);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const BlockTable& t);
/// One row per sign pattern: membership vector, corner, dim.
std::string to_text(const BlockTable& t);

nlohmann::json to_json(const StructureTriple& t);
nlohmann::json to_json(const BassTable& b);
nlohmann::json to_json(const YProfile& p);
nlohmann::json to_json(const BlockStructure& b);
std::string structure_csv(const std::vector<BlockStructure>& blocks);
std::string structure_text(const std::vector<BlockStructure>& blocks);

}  // namespace gradedlc
