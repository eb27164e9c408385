#pragma once

#include "cubecalc/limits.hpp"
#include "cubecalc/multipoly.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cubecalc {

struct Literal {
    VarId var;
    bool negated = false;
    auto operator<=>(const Literal&) const = default;
};

inline Literal pos(std::uint32_t v) { return Literal{VarId{v}, false}; }
inline Literal neg(std::uint32_t v) { return Literal{VarId{v}, true}; }

// Disjunction of literals. Duplicate literals are permitted.
struct Clause {
    std::vector<Literal> literals;
    auto operator<=>(const Clause&) const = default;
};

// Conjunction of clauses over variables 0..num_vars-1. Clauses are nonempty.
class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(unsigned num_vars, std::vector<Clause> clauses);

    unsigned num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    unsigned max_clause_width() const;

    bool operator==(const CnfFormula& o) const {
        return num_vars_ == o.num_vars_ && clauses_ == o.clauses_;
    }

    std::string to_string() const;

private:
    unsigned num_vars_ = 0;
    std::vector<Clause> clauses_;
};

// Per-variable positive/negative occurrence totals, in clause order.
struct OccurrenceCounts {
    std::vector<unsigned> positive;
    std::vector<unsigned> negative;
};
OccurrenceCounts count_occurrences(const CnfFormula& f);

// Validation report for the (3,3)-SAT shape: clause width <= 3 and, per
// variable, total occurrences <= 3, negative <= 1, positive <= 2. The
// positive bound is stricter than width alone requires because the
// polynomial compilers only map first and second positive occurrences.
struct SatShapeReport {
    bool ok = true;
    std::vector<std::string> violations;
};
SatShapeReport check_33sat(const CnfFormula& f);
bool is_33sat_instance(const CnfFormula& f);

// Exhaustive satisfiability oracle. Throws ResourceError above the
// configured variable cap.
bool truth_table_sat(const CnfFormula& f, const Limits& limits = Limits::defaults());

enum class PreprocessStatus { satisfiable, unsatisfiable, undecided };

struct PreprocessResult {
    PreprocessStatus status = PreprocessStatus::undecided;
    // Meaningful only when undecided: an equisatisfiable formula, densely
    // renumbered, in which every variable occurs with both polarities and
    // every clause has at least two literals.
    CnfFormula formula;
};

// Unit propagation and pure-literal elimination to fixpoint.
PreprocessResult preprocess(const CnfFormula& f);

// Tovey-style reduction: every occurrence of a variable is moved onto its
// own fresh variable and a circular implication chain ties the copies
// together; variables left with two negative occurrences have their polarity
// flipped. The output is an equisatisfiable (3,3)-SAT instance. Requires
// clause width <= 3.
CnfFormula reduce_3sat_to_33sat(const CnfFormula& f);

} // namespace cubecalc
