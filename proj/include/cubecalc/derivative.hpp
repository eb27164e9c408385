#pragma once

#include "cubecalc/limits.hpp"
#include "cubecalc/prodmulti.hpp"

#include <vector>

namespace cubecalc {

// Coefficient of the product of all listed variables in the expansion of p,
// which equals the mixed derivative over those variables at the origin.
// Computed by left-to-right factor multiplication, discarding after each
// step every term with an exponent >= 2 (such terms can never reach a
// multilinear monomial). vars must list every variable occurring in p
// exactly once.
Rat multilinear_coefficient(const ProdMulti& p, const std::vector<VarId>& vars,
                            const Limits& limits = Limits::defaults());

// Same quantity read off the full unpruned expansion. Desk-scale oracle.
Rat derivative_at_origin_oracle(const ProdMulti& p, const std::vector<VarId>& vars,
                                const Limits& limits = Limits::defaults());

// True iff some multilinear monomial (any variable subset, the empty
// monomial included) survives in the expansion with a nonzero coefficient.
bool has_multilinear_term(const ProdMulti& p, const Limits& limits = Limits::defaults());

} // namespace cubecalc
