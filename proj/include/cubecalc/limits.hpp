#pragma once

#include <cstddef>

namespace cubecalc {

// Resource caps for the exponential-cost engines. The library never guesses:
// exceeding a cap raises ResourceError instead of thrashing.
//
// Environment overrides (read once): CUBECALC_TERM_CAP,
// CUBECALC_DP_FACTOR_CAP, CUBECALC_TT_VAR_CAP.
struct Limits {
    std::size_t term_cap = 2000000;  // max terms held by any expansion
    std::size_t dp_factor_cap = 20;  // max factors for the subset DP
    std::size_t tt_var_cap = 24;     // max variables for truth-table search

    static Limits defaults();
};

} // namespace cubecalc
