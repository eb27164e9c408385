#include "cubecalc/compile.hpp"

#include "cubecalc/derivative.hpp"
#include "cubecalc/errors.hpp"

#include <string>
#include <utility>

namespace cubecalc {

namespace {

Rat scale_multiplier(unsigned scale) {
    if (scale == 0) {
        throw PreconditionError("scale must be a positive integer");
    }
    return Rat(3) * Rat(scale) * Rat(scale);
}

} // namespace

ProdSumUni compile_integration_instance(const CnfFormula& f, const GadgetSet& g,
                                        unsigned scale) {
    const Rat multiplier = scale_multiplier(scale);
    if (f.clauses().empty()) {
        throw PreconditionError("compile_integration_instance: formula has no clauses");
    }
    if (!verify_gadgets(g).all_pass()) {
        throw PreconditionError("compile_integration_instance: gadget set fails its "
                                "integral identities");
    }

    std::vector<unsigned> pos_seen(f.num_vars(), 0), neg_seen(f.num_vars(), 0);
    std::vector<SumFactor> factors;
    factors.reserve(f.clauses().size());
    for (const Clause& c : f.clauses()) {
        SumFactor factor;
        for (const Literal& l : c.literals) {
            const unsigned v = l.var.index;
            if (l.negated) {
                if (neg_seen[v]++ > 0) {
                    throw PreconditionError("variable " + std::to_string(v + 1) +
                                            " has a second negative occurrence");
                }
                factor.add_part(l.var, g.f);
            } else {
                const unsigned nth = pos_seen[v]++;
                if (nth == 0) {
                    factor.add_part(l.var, g.g1);
                } else if (nth == 1) {
                    factor.add_part(l.var, g.g2);
                } else {
                    throw PreconditionError("variable " + std::to_string(v + 1) +
                                            " has a third positive occurrence");
                }
            }
        }
        factors.push_back(std::move(factor));
    }
    factors.front() = factors.front().scaled(multiplier);

    unsigned bound = 1;
    for (const auto& p : {g.g1, g.g2, g.f}) {
        bound = std::max(bound, static_cast<unsigned>(std::max(p.degree(), 1)));
    }
    return ProdSumUni(std::move(factors), bound);
}

DerivativeInstance compile_derivative_instance(const CnfFormula& f, unsigned scale) {
    const Rat multiplier = scale_multiplier(scale);
    if (f.clauses().empty()) {
        throw PreconditionError("compile_derivative_instance: formula has no clauses");
    }

    const unsigned d = f.num_vars();
    const unsigned k = static_cast<unsigned>(f.clauses().size());
    const unsigned m = 4 * d;        // z and u variables
    const unsigned degree_g1 = 2 * k;  // every clause contributes degree 2
    if (degree_g1 > m) {
        throw PreconditionError("compile_derivative_instance: " + std::to_string(k) +
                                " clauses exceed the variable budget of " +
                                std::to_string(d) + " variables");
    }

    const auto z1 = [](unsigned i) { return VarId{4 * i}; };
    const auto z2 = [](unsigned i) { return VarId{4 * i + 1}; };
    const auto u1 = [](unsigned i) { return VarId{4 * i + 2}; };
    const auto u2 = [](unsigned i) { return VarId{4 * i + 3}; };

    std::vector<unsigned> pos_seen(d, 0), neg_seen(d, 0);
    std::vector<MultiPoly> factors;
    factors.reserve(k + (m - degree_g1));
    for (const Clause& c : f.clauses()) {
        MultiPoly clause_poly;
        for (const Literal& l : c.literals) {
            const unsigned v = l.var.index;
            Monomial mono;
            if (l.negated) {
                if (neg_seen[v]++ > 0) {
                    throw PreconditionError("variable " + std::to_string(v + 1) +
                                            " has a second negative occurrence");
                }
                mono = Monomial::var(z1(v)) * Monomial::var(z2(v));
            } else {
                const unsigned nth = pos_seen[v]++;
                if (nth == 0) {
                    mono = Monomial::var(z1(v)) * Monomial::var(u1(v));
                } else if (nth == 1) {
                    mono = Monomial::var(z2(v)) * Monomial::var(u2(v));
                } else {
                    throw PreconditionError("variable " + std::to_string(v + 1) +
                                            " has a third positive occurrence");
                }
            }
            clause_poly.add_term(mono, Rat(1));
        }
        factors.push_back(std::move(clause_poly));
    }

    // Padding: q_j sums x*v_j over every z/u variable x, with v_j fresh.
    const unsigned padding = m - degree_g1;
    for (unsigned j = 0; j < padding; ++j) {
        const VarId vj{m + j};
        MultiPoly q;
        for (unsigned x = 0; x < m; ++x) {
            q.add_term(Monomial::var(VarId{x}) * Monomial::var(vj), Rat(1));
        }
        factors.push_back(std::move(q));
    }

    factors.front() = factors.front().scaled(multiplier);

    const unsigned n = m + padding;
    std::vector<VarId> vars;
    vars.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        vars.push_back(VarId{i});
    }
    return DerivativeInstance{ProdMulti(std::move(factors), 2), std::move(vars)};
}

namespace {

// Shared front half of the deciders: preprocess and, when the formula stays
// undecided, bring it into compilable (3,3) shape.
struct PipelineInput {
    bool decided = false;
    bool answer = false;
    CnfFormula formula;
};

PipelineInput pipeline_front(const CnfFormula& f) {
    if (f.max_clause_width() > 3) {
        throw PreconditionError("decider requires clause width <= 3");
    }
    const PreprocessResult pre = preprocess(f);
    if (pre.status == PreprocessStatus::satisfiable) {
        return {true, true, CnfFormula()};
    }
    if (pre.status == PreprocessStatus::unsatisfiable) {
        return {true, false, CnfFormula()};
    }
    if (is_33sat_instance(pre.formula)) {
        return {false, false, pre.formula};
    }
    return {false, false, reduce_3sat_to_33sat(pre.formula)};
}

} // namespace

bool decide_sat_via_integration(const CnfFormula& f, const Limits& limits) {
    const PipelineInput in = pipeline_front(f);
    if (in.decided) {
        return in.answer;
    }
    const ProdSumUni instance =
        compile_integration_instance(in.formula, default_gadgets(), 1);
    return integrate_prodsum(instance, limits) > Rat(0);
}

bool decide_sat_via_derivative(const CnfFormula& f, const Limits& limits) {
    const PipelineInput in = pipeline_front(f);
    if (in.decided) {
        return in.answer;
    }
    const DerivativeInstance instance = compile_derivative_instance(in.formula, 1);
    return multilinear_coefficient(instance.poly, instance.vars, limits) > Rat(0);
}

} // namespace cubecalc
