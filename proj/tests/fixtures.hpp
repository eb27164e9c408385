#pragma once

// Shared worked instances used across the test suites.

#include "cubecalc/cnf.hpp"
#include "cubecalc/gadgets.hpp"
#include "cubecalc/multipoly.hpp"
#include "cubecalc/prodsum.hpp"

namespace fixtures {

using namespace cubecalc;

// (x1+x2)(x1+~x2)(~x1+x2): satisfiable, already (3,3)-shaped.
inline CnfFormula example1_formula() {
    return CnfFormula(2, {Clause{{pos(0), pos(1)}},
                          Clause{{pos(0), neg(1)}},
                          Clause{{neg(0), pos(1)}}});
}

// (x1+x2)(~x1)(~x2): unsatisfiable.
inline CnfFormula example2_formula() {
    return CnfFormula(2, {Clause{{pos(0), pos(1)}},
                          Clause{{neg(0)}},
                          Clause{{neg(1)}}});
}

// (x1+x2+x3)(~x1+~x2)(~x1+x2): not (3,3)-shaped, ~x1 appears twice.
inline CnfFormula non_33_formula() {
    return CnfFormula(3, {Clause{{pos(0), pos(1), pos(2)}},
                          Clause{{neg(0), neg(1)}},
                          Clause{{neg(0), pos(1)}}});
}

// (x1+x2)(~x1+x2)(x1+~x2)(~x1+~x2): unsatisfiable, survives preprocessing.
inline CnfFormula unsat_square_formula() {
    return CnfFormula(2, {Clause{{pos(0), pos(1)}},
                          Clause{{neg(0), pos(1)}},
                          Clause{{pos(0), neg(1)}},
                          Clause{{neg(0), neg(1)}}});
}

inline MultiPoly unipoly_in_var(const UniPoly& p, VarId v) {
    MultiPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (!p.coeffs()[i].is_zero()) {
            out.add_term(Monomial::var(v, static_cast<unsigned>(i)), p.coeffs()[i]);
        }
    }
    return out;
}

// (g1(y1)+g1(y2)) (g2(y1)+f(y2)) (f(y1)+g2(y2)), without the 3S^2 multiplier.
inline ProdSumUni example1_instance() {
    const GadgetSet g = default_gadgets();
    const VarId y1{0}, y2{1};
    SumFactor c1, c2, c3;
    c1.add_part(y1, g.g1);
    c1.add_part(y2, g.g1);
    c2.add_part(y1, g.g2);
    c2.add_part(y2, g.f);
    c3.add_part(y1, g.f);
    c3.add_part(y2, g.g2);
    return ProdSumUni({c1, c2, c3}, 2);
}

// (g1(y1)+g1(y2)) f(y1) f(y2), without the 3S^2 multiplier.
inline ProdSumUni example2_instance() {
    const GadgetSet g = default_gadgets();
    const VarId y1{0}, y2{1};
    SumFactor c1, c2, c3;
    c1.add_part(y1, g.g1);
    c1.add_part(y2, g.g1);
    c2.add_part(y1, g.f);
    c3.add_part(y2, g.f);
    return ProdSumUni({c1, c2, c3}, 2);
}

} // namespace fixtures
