#pragma once

#include "cubecalc/errors.hpp"
#include "cubecalc/rat.hpp"

namespace cubecalc {

// Interval contract between a functor's true value and an algorithm's
// output: r is the multiplicative factor (>= 1), s the additive slack (>= 0).
struct ApproxCheck {
    Rat true_value;
    Rat approx_value;
    Rat r{1};
    Rat s{0};
};

// True iff approx lies within the r-factor interval of the true value:
// [F/r, rF] for F >= 0 and [rF, F/r] for F < 0. s is ignored.
inline bool check_r_factor(const ApproxCheck& c) {
    if (c.r < Rat(1)) {
        throw PreconditionError("check_r_factor: r must be >= 1");
    }
    const Rat& f = c.true_value;
    const Rat& a = c.approx_value;
    if (f >= Rat(0)) {
        return f / c.r <= a && a <= c.r * f;
    }
    return c.r * f <= a && a <= f / c.r;
}

// The (r, s)-factor analogue with the interval widened by s on both sides.
inline bool check_rs_factor(const ApproxCheck& c) {
    if (c.r < Rat(1)) {
        throw PreconditionError("check_rs_factor: r must be >= 1");
    }
    if (c.s < Rat(0)) {
        throw PreconditionError("check_rs_factor: s must be >= 0");
    }
    const Rat& f = c.true_value;
    const Rat& a = c.approx_value;
    if (f >= Rat(0)) {
        return f / c.r - c.s <= a && a <= c.r * f + c.s;
    }
    return c.r * f - c.s <= a && a <= f / c.r + c.s;
}

} // namespace cubecalc
