#pragma once

#include "cubecalc/limits.hpp"
#include "cubecalc/multipoly.hpp"

#include <set>
#include <vector>

namespace cubecalc {

// Product of sparse multivariate factors with every monomial of total degree
// <= degree_bound (the prod-sum-prod class).
class ProdMulti {
public:
    ProdMulti(std::vector<MultiPoly> factors, unsigned degree_bound);

    const std::vector<MultiPoly>& factors() const { return factors_; }
    unsigned degree_bound() const { return degree_bound_; }
    std::set<VarId> variables() const;

    bool operator==(const ProdMulti& o) const {
        return degree_bound_ == o.degree_bound_ && factors_ == o.factors_;
    }

private:
    std::vector<MultiPoly> factors_;
    unsigned degree_bound_;
};

// Least c such that every variable's occurrences fit inside a window of c
// consecutive factors. Requires at least one factor.
unsigned width_of(const ProdMulti& p);

// Full product of all factors (the expansion oracle for the structured
// integrators).
MultiPoly expand_product(const ProdMulti& p, const Limits& limits = Limits::defaults());

// Exact unit-cube integral of a c-wide product by divide and conquer: split
// at a middle window of c factors, recursively integrate out the variables
// exclusive to each side (each recursion returns a polynomial over its
// boundary variables), and integrate the window against the two results.
// Throws PreconditionError when width_of(p) > c.
Rat integrate_cwide(const ProdMulti& p, unsigned c, const Limits& limits = Limits::defaults());

} // namespace cubecalc
