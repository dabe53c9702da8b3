#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equirank/rank.hpp"
#include "equirank/shift.hpp"
#include "equirank/verify.hpp"

namespace equirank {

using Json = nlohmann::ordered_json;

// Every payload starts with "schema": 1 and the command name. Key order is
// fixed, so identical inputs give byte-identical output.
Json envelope(const std::string& command);

Json group_json(const FiniteGroup& g);
Json subgroup_json(const SubgroupLattice& lat, SubgroupId h);
Json lattice_json(const SubgroupLattice& lat);
Json boxes_json(const BoxDecomposition& boxes);
Json rank_json(const BoxDecomposition& boxes, const RankReport& report);
Json properties_json(const std::vector<PropertyResult>& results);
Json criteria_json(const std::vector<CriterionResult>& results);

// Box tables in the layout of the printed examples: one block per box,
// orbits as columns, sub-boxes listed separately when a class has several
// members. Shift-space points print as their integer encodings.
std::string paper_layout(const BoxDecomposition& boxes);

std::string lattice_table(const SubgroupLattice& lat);
std::string rank_table(const BoxDecomposition& boxes, const RankReport& report);
std::string properties_table(const std::vector<PropertyResult>& results);

}  // namespace equirank
