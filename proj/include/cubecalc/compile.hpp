#pragma once

#include "cubecalc/cnf.hpp"
#include "cubecalc/gadgets.hpp"
#include "cubecalc/limits.hpp"
#include "cubecalc/prodmulti.hpp"
#include "cubecalc/prodsum.hpp"

#include <vector>

namespace cubecalc {

// Compiles a (3,3)-shaped formula into a product of sums: one factor per
// clause, mapping each variable's first positive occurrence to g1(y), the
// second positive to g2(y), and the negative to f(y), counting occurrences
// globally in clause then literal order. The whole product carries the
// multiplier 3*scale^2, folded into the first factor. The unit-cube integral
// of the result is zero iff the formula is unsatisfiable, and otherwise a
// positive integer of at least 3*scale^2.
ProdSumUni compile_integration_instance(const CnfFormula& f, const GadgetSet& g,
                                        unsigned scale);

struct DerivativeInstance {
    ProdMulti poly;
    std::vector<VarId> vars;  // every variable, in bit order
};

// Compiles a (3,3)-shaped formula into a degree-2 product whose multilinear
// coefficient over all variables is zero iff the formula is unsatisfiable.
// Each formula variable gets four product variables (two z, two u); literal
// occurrences map to z1*u1 / z2*u2 / z1*z2; padding factors sum x*v_j over
// every z/u variable x so the target monomial can always be completed.
// The multiplier 3*scale^2 is folded into the first factor.
DerivativeInstance compile_derivative_instance(const CnfFormula& f, unsigned scale);

// Full decision pipelines: preprocess, reduce to (3,3) shape when needed,
// compile with scale 1, and test the compiled quantity against zero.
bool decide_sat_via_integration(const CnfFormula& f, const Limits& limits = Limits::defaults());
bool decide_sat_via_derivative(const CnfFormula& f, const Limits& limits = Limits::defaults());

} // namespace cubecalc
