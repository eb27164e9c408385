#include "cubecalc/cnf.hpp"

#include "cubecalc/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cubecalc {

CnfFormula::CnfFormula(unsigned num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        if (clauses_[i].literals.empty()) {
            throw PreconditionError("CnfFormula: clause " + std::to_string(i + 1) +
                                    " is empty");
        }
        for (const Literal& l : clauses_[i].literals) {
            if (l.var.index >= num_vars_) {
                throw PreconditionError("CnfFormula: clause " + std::to_string(i + 1) +
                                        " references variable " +
                                        std::to_string(l.var.index + 1) + " but only " +
                                        std::to_string(num_vars_) + " are declared");
            }
        }
    }
}

unsigned CnfFormula::max_clause_width() const {
    std::size_t w = 0;
    for (const Clause& c : clauses_) {
        w = std::max(w, c.literals.size());
    }
    return static_cast<unsigned>(w);
}

std::string CnfFormula::to_string() const {
    if (clauses_.empty()) {
        return "()";
    }
    std::ostringstream os;
    for (const Clause& c : clauses_) {
        os << "(";
        bool first = true;
        for (const Literal& l : c.literals) {
            if (!first) {
                os << "+";
            }
            first = false;
            if (l.negated) {
                os << "~";
            }
            os << "x" << l.var.index + 1;
        }
        os << ")";
    }
    return os.str();
}

OccurrenceCounts count_occurrences(const CnfFormula& f) {
    OccurrenceCounts occ;
    occ.positive.assign(f.num_vars(), 0);
    occ.negative.assign(f.num_vars(), 0);
    for (const Clause& c : f.clauses()) {
        for (const Literal& l : c.literals) {
            (l.negated ? occ.negative : occ.positive)[l.var.index]++;
        }
    }
    return occ;
}

SatShapeReport check_33sat(const CnfFormula& f) {
    SatShapeReport report;
    for (std::size_t i = 0; i < f.clauses().size(); ++i) {
        const std::size_t w = f.clauses()[i].literals.size();
        if (w > 3) {
            report.ok = false;
            report.violations.push_back("clause " + std::to_string(i + 1) + " has width " +
                                        std::to_string(w) + " (max 3)");
        }
    }
    const OccurrenceCounts occ = count_occurrences(f);
    for (unsigned v = 0; v < f.num_vars(); ++v) {
        const unsigned p = occ.positive[v];
        const unsigned n = occ.negative[v];
        if (p + n > 3) {
            report.ok = false;
            report.violations.push_back("variable " + std::to_string(v + 1) + " occurs " +
                                        std::to_string(p + n) + " times (max 3)");
        }
        if (n > 1) {
            report.ok = false;
            report.violations.push_back("variable " + std::to_string(v + 1) + " occurs negated " +
                                        std::to_string(n) + " times (max 1)");
        }
        if (p > 2) {
            report.ok = false;
            report.violations.push_back("variable " + std::to_string(v + 1) +
                                        " occurs positively " + std::to_string(p) +
                                        " times (max 2)");
        }
    }
    return report;
}

bool is_33sat_instance(const CnfFormula& f) {
    return check_33sat(f).ok;
}

bool truth_table_sat(const CnfFormula& f, const Limits& limits) {
    if (f.num_vars() > limits.tt_var_cap) {
        throw ResourceError("truth_table_sat: " + std::to_string(f.num_vars()) +
                            " variables exceed the truth-table cap of " +
                            std::to_string(limits.tt_var_cap));
    }
    if (f.num_vars() > 63) {
        throw ResourceError("truth_table_sat: at most 63 variables supported");
    }
    if (f.clauses().empty()) {
        return true;
    }
    std::vector<std::uint64_t> pos_mask(f.clauses().size(), 0);
    std::vector<std::uint64_t> neg_mask(f.clauses().size(), 0);
    for (std::size_t i = 0; i < f.clauses().size(); ++i) {
        for (const Literal& l : f.clauses()[i].literals) {
            (l.negated ? neg_mask : pos_mask)[i] |= std::uint64_t(1) << l.var.index;
        }
    }
    const std::uint64_t count = std::uint64_t(1) << f.num_vars();
    for (std::uint64_t a = 0; a < count; ++a) {
        bool all = true;
        for (std::size_t i = 0; i < pos_mask.size(); ++i) {
            if (((a & pos_mask[i]) | (~a & neg_mask[i])) == 0) {
                all = false;
                break;
            }
        }
        if (all) {
            return true;
        }
    }
    return false;
}

PreprocessResult preprocess(const CnfFormula& f) {
    // -1 unassigned, 0 false, 1 true
    std::vector<int> value(f.num_vars(), -1);
    std::vector<std::vector<Literal>> work;
    work.reserve(f.clauses().size());
    for (const Clause& c : f.clauses()) {
        work.push_back(c.literals);
    }

    auto truth = [&](const Literal& l) -> int {
        const int v = value[l.var.index];
        if (v < 0) {
            return -1;
        }
        return l.negated ? 1 - v : v;
    };

    bool changed = true;
    while (changed) {
        changed = false;

        std::vector<std::vector<Literal>> rest;
        for (const auto& lits : work) {
            bool satisfied = false;
            std::vector<Literal> open;
            for (const Literal& l : lits) {
                const int t = truth(l);
                if (t == 1) {
                    satisfied = true;
                    break;
                }
                if (t == -1) {
                    open.push_back(l);
                }
            }
            if (satisfied) {
                continue;
            }
            if (open.empty()) {
                return {PreprocessStatus::unsatisfiable, CnfFormula()};
            }
            rest.push_back(std::move(open));
        }
        work = std::move(rest);
        if (work.empty()) {
            return {PreprocessStatus::satisfiable, CnfFormula()};
        }

        // unit propagation
        for (const auto& lits : work) {
            if (lits.size() == 1) {
                const Literal l = lits[0];
                const int want = l.negated ? 0 : 1;
                if (value[l.var.index] == -1) {
                    value[l.var.index] = want;
                    changed = true;
                } else if (value[l.var.index] != want) {
                    return {PreprocessStatus::unsatisfiable, CnfFormula()};
                }
            }
        }
        if (changed) {
            continue;
        }

        // pure literals
        std::vector<unsigned> pos_count(f.num_vars(), 0), neg_count(f.num_vars(), 0);
        for (const auto& lits : work) {
            for (const Literal& l : lits) {
                (l.negated ? neg_count : pos_count)[l.var.index]++;
            }
        }
        for (unsigned v = 0; v < f.num_vars(); ++v) {
            if (value[v] != -1) {
                continue;
            }
            if (pos_count[v] > 0 && neg_count[v] == 0) {
                value[v] = 1;
                changed = true;
            } else if (neg_count[v] > 0 && pos_count[v] == 0) {
                value[v] = 0;
                changed = true;
            }
        }
    }

    // Renumber the surviving variables densely.
    std::map<std::uint32_t, std::uint32_t> dense;
    for (const auto& lits : work) {
        for (const Literal& l : lits) {
            dense.emplace(l.var.index, 0);
        }
    }
    std::uint32_t next = 0;
    for (auto& [old_id, new_id] : dense) {
        new_id = next++;
    }
    std::vector<Clause> out;
    out.reserve(work.size());
    for (const auto& lits : work) {
        Clause c;
        for (const Literal& l : lits) {
            c.literals.push_back(Literal{VarId{dense.at(l.var.index)}, l.negated});
        }
        out.push_back(std::move(c));
    }
    return {PreprocessStatus::undecided, CnfFormula(next, std::move(out))};
}

CnfFormula reduce_3sat_to_33sat(const CnfFormula& f) {
    if (f.max_clause_width() > 3) {
        throw PreconditionError("reduce_3sat_to_33sat: clause width exceeds 3");
    }
    const OccurrenceCounts occ = count_occurrences(f);
    std::vector<unsigned> total(f.num_vars());
    for (unsigned v = 0; v < f.num_vars(); ++v) {
        total[v] = occ.positive[v] + occ.negative[v];
    }

    // New ids: the occurring originals first, then the per-occurrence copies
    // grouped by original variable.
    std::vector<std::uint32_t> xid(f.num_vars(), 0);
    std::uint32_t next = 0;
    for (unsigned v = 0; v < f.num_vars(); ++v) {
        if (total[v] > 0) {
            xid[v] = next++;
        }
    }
    std::vector<std::uint32_t> ybase(f.num_vars(), 0);
    for (unsigned v = 0; v < f.num_vars(); ++v) {
        if (total[v] > 0) {
            ybase[v] = next;
            next += total[v];
        }
    }

    std::vector<Clause> out;
    std::vector<unsigned> seen(f.num_vars(), 0);
    for (const Clause& c : f.clauses()) {
        Clause rewritten;
        for (const Literal& l : c.literals) {
            const std::uint32_t y = ybase[l.var.index] + seen[l.var.index]++;
            rewritten.literals.push_back(Literal{VarId{y}, l.negated});
        }
        out.push_back(std::move(rewritten));
    }

    // Circular implication chain x -> y_1 -> ... -> y_m -> x per variable.
    for (unsigned v = 0; v < f.num_vars(); ++v) {
        if (total[v] == 0) {
            continue;
        }
        const std::uint32_t x = xid[v];
        const std::uint32_t y0 = ybase[v];
        out.push_back(Clause{{neg(x), pos(y0)}});
        for (unsigned j = 0; j + 1 < total[v]; ++j) {
            out.push_back(Clause{{neg(y0 + j), pos(y0 + j + 1)}});
        }
        out.push_back(Clause{{neg(y0 + total[v] - 1), pos(x)}});
    }

    // Variables left with two negative occurrences switch polarity (the
    // renamed variable stands for the negation of the old one).
    std::vector<unsigned> negs(next, 0);
    for (const Clause& c : out) {
        for (const Literal& l : c.literals) {
            if (l.negated) {
                negs[l.var.index]++;
            }
        }
    }
    for (Clause& c : out) {
        for (Literal& l : c.literals) {
            if (negs[l.var.index] > 1) {
                l.negated = !l.negated;
            }
        }
    }

    return CnfFormula(next, std::move(out));
}

} // namespace cubecalc
