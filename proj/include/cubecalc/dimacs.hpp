#pragma once

#include "cubecalc/cnf.hpp"

#include <string>
#include <string_view>

namespace cubecalc {

// Parses DIMACS CNF text: a "p cnf <vars> <clauses>" header, comment lines
// starting with 'c', and clauses as literal lists terminated by 0. Parse
// errors carry the offending line number.
CnfFormula parse_dimacs(std::string_view text);

std::string to_dimacs(const CnfFormula& f);

} // namespace cubecalc
