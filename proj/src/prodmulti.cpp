#include "cubecalc/prodmulti.hpp"

#include "cubecalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace cubecalc {

ProdMulti::ProdMulti(std::vector<MultiPoly> factors, unsigned degree_bound)
    : factors_(std::move(factors)), degree_bound_(degree_bound) {
    if (degree_bound_ == 0) {
        throw PreconditionError("ProdMulti: degree bound must be positive");
    }
    for (const auto& f : factors_) {
        for (const auto& [m, c] : f.terms()) {
            if (m.total_degree() > degree_bound_) {
                throw PreconditionError("ProdMulti: monomial degree " +
                                        std::to_string(m.total_degree()) +
                                        " exceeds bound " + std::to_string(degree_bound_));
            }
        }
    }
}

std::set<VarId> ProdMulti::variables() const {
    std::set<VarId> vs;
    for (const auto& f : factors_) {
        for (VarId v : f.variables()) {
            vs.insert(v);
        }
    }
    return vs;
}

namespace {

// First and last factor index containing each variable.
std::map<VarId, std::pair<std::size_t, std::size_t>>
variable_spans(const ProdMulti& p) {
    std::map<VarId, std::pair<std::size_t, std::size_t>> span;
    for (std::size_t i = 0; i < p.factors().size(); ++i) {
        for (VarId v : p.factors()[i].variables()) {
            auto [it, inserted] = span.emplace(v, std::make_pair(i, i));
            if (!inserted) {
                it->second.second = i;
            }
        }
    }
    return span;
}

} // namespace

unsigned width_of(const ProdMulti& p) {
    if (p.factors().empty()) {
        throw PreconditionError("width_of: product has no factors");
    }
    unsigned width = 1;
    for (const auto& [v, span] : variable_spans(p)) {
        width = std::max(width, static_cast<unsigned>(span.second - span.first + 1));
    }
    return width;
}

MultiPoly expand_product(const ProdMulti& p, const Limits& limits) {
    MultiPoly acc = MultiPoly::constant(Rat(1));
    for (const auto& f : p.factors()) {
        acc = acc.mul(f, limits.term_cap);
    }
    return acc;
}

Rat integrate_cwide(const ProdMulti& p, unsigned c, const Limits& limits) {
    if (c == 0) {
        throw PreconditionError("integrate_cwide: c must be positive");
    }
    const auto& fs = p.factors();
    if (fs.empty()) {
        return Rat(1);
    }
    const unsigned w = width_of(p);
    if (w > c) {
        throw PreconditionError("integrate_cwide: product width " + std::to_string(w) +
                                " exceeds c = " + std::to_string(c));
    }

    const auto span = variable_spans(p);

    // Integrates fs[lo, hi) over the variables exclusive to that range and
    // returns the result, a polynomial over the range's boundary variables.
    std::function<MultiPoly(std::size_t, std::size_t)> integrate_range =
        [&](std::size_t lo, std::size_t hi) -> MultiPoly {
        MultiPoly prod = MultiPoly::constant(Rat(1));
        if (hi - lo <= 2 * static_cast<std::size_t>(c)) {
            for (std::size_t i = lo; i < hi; ++i) {
                prod = prod.mul(fs[i], limits.term_cap);
            }
        } else {
            const std::size_t i = lo + (hi - lo - c) / 2;
            const std::size_t j = i + c;
            const MultiPoly left = integrate_range(lo, i);
            const MultiPoly right = integrate_range(j, hi);
            for (std::size_t g = i; g < j; ++g) {
                prod = prod.mul(fs[g], limits.term_cap);
            }
            prod = prod.mul(left, limits.term_cap).mul(right, limits.term_cap);
        }
        std::set<VarId> exclusive;
        for (VarId v : prod.variables()) {
            const auto& s = span.at(v);
            if (s.first >= lo && s.second < hi) {
                exclusive.insert(v);
            }
        }
        return integrate01_subset(prod, exclusive);
    };

    const MultiPoly result = integrate_range(0, fs.size());
    return result.constant_term();
}

} // namespace cubecalc
