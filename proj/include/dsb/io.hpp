#pragma once

#include <string>

#include "dsb/branching.hpp"
#include "dsb/oracle.hpp"

namespace dsb {

// {family, ranks, order_word, roots:[{coords:["p/q"], color}]}; with psi the
// roots listed are its positives.
std::string root_system_json(const RootSystem& rs, const PositiveSystem* psi = nullptr);
// returns the listed roots (positives if the document came from a system)
RootSystem root_system_from_json(const std::string& text, std::string* order_word = nullptr);

std::string measure_json(const DiscreteMeasure& m);
std::string table_json(const BranchingTable& t);
std::string table_csv(const BranchingTable& t);
BranchingTable table_from_json(const std::string& text);

std::string rows_json(const std::vector<PairTableRow>& rows);
std::string rows_csv(const std::vector<PairTableRow>& rows);

}  // namespace dsb
