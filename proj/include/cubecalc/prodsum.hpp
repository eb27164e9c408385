#pragma once

#include "cubecalc/limits.hpp"
#include "cubecalc/multipoly.hpp"
#include "cubecalc/unipoly.hpp"

#include <map>
#include <set>
#include <vector>

namespace cubecalc {

// One factor of a product of sums: a constant plus one univariate polynomial
// per variable. Stored parts are nonzero and have a zero constant term; all
// constant mass lives in constant().
class SumFactor {
public:
    SumFactor() = default;
    explicit SumFactor(const Rat& constant) : constant_(constant) {}

    // Accumulates p into the part for v, folding p's constant term into the
    // factor constant.
    void add_part(VarId v, const UniPoly& p);

    const std::map<VarId, UniPoly>& parts() const { return parts_; }
    const Rat& constant() const { return constant_; }

    unsigned max_part_degree() const;
    MultiPoly to_multipoly() const;
    double eval(const std::vector<double>& point) const;
    SumFactor scaled(const Rat& c) const;

    bool operator==(const SumFactor& o) const {
        return constant_ == o.constant_ && parts_ == o.parts_;
    }

private:
    std::map<VarId, UniPoly> parts_;
    Rat constant_;
};

// Product of sum factors with every part of degree <= degree_bound (the
// prod-sum class with bounded single-variable degree).
class ProdSumUni {
public:
    ProdSumUni(std::vector<SumFactor> factors, unsigned degree_bound);

    const std::vector<SumFactor>& factors() const { return factors_; }
    unsigned degree_bound() const { return degree_bound_; }
    std::set<VarId> variables() const;

    bool operator==(const ProdSumUni& o) const {
        return degree_bound_ == o.degree_bound_ && factors_ == o.factors_;
    }

private:
    std::vector<SumFactor> factors_;
    unsigned degree_bound_;
};

// Full distributed expansion. Cost is exponential in the factor count; the
// term cap turns runaway inputs into ResourceError.
MultiPoly expand_prodsum(const ProdSumUni& p, const Limits& limits = Limits::defaults());

// Exact unit-cube integral via a dynamic program over subsets of factors:
// variables are processed one at a time and each step assigns a sub-subset
// of the not-yet-assigned factors to the current variable, weighted by the
// unit-interval integral of the product of that variable's parts. Factors
// never assigned to any variable contribute their constants.
Rat integrate_prodsum(const ProdSumUni& p, const Limits& limits = Limits::defaults());

} // namespace cubecalc
