#include "cubecalc/derivative.hpp"

#include "cubecalc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cubecalc {

namespace {

// Variable subset of a multilinear monomial, packed into 128 bits.
struct Support {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool intersects(const Support& o) const {
        return (lo & o.lo) != 0 || (hi & o.hi) != 0;
    }
    Support united(const Support& o) const { return {lo | o.lo, hi | o.hi}; }
    void set(unsigned bit) {
        if (bit < 64) {
            lo |= std::uint64_t(1) << bit;
        } else {
            hi |= std::uint64_t(1) << (bit - 64);
        }
    }
    bool operator==(const Support&) const = default;
};

struct SupportHash {
    std::size_t operator()(const Support& s) const {
        std::uint64_t x = s.lo * 0x9e3779b97f4a7c15ull;
        x ^= x >> 32;
        x ^= s.hi * 0xbf58476d1ce4e5b9ull;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

using SupportMap = std::unordered_map<Support, Rat, SupportHash>;

constexpr unsigned kMaxMultilinearVars = 128;

std::map<VarId, unsigned> bit_assignment(const std::vector<VarId>& vars) {
    std::map<VarId, unsigned> bit;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!bit.emplace(vars[i], static_cast<unsigned>(i)).second) {
            throw PreconditionError("duplicate VarId x" + std::to_string(vars[i].index) +
                                    " in variable list");
        }
    }
    return bit;
}

void require_covering(const ProdMulti& p, const std::map<VarId, unsigned>& bit) {
    for (VarId v : p.variables()) {
        if (!bit.count(v)) {
            throw PreconditionError("variable x" + std::to_string(v.index) +
                                    " occurs in the product but is missing from the variable list");
        }
    }
}

// Multilinear part of the expansion of p, keyed by variable support. Factor
// monomials with an exponent >= 2 only produce prunable terms and are
// dropped up front.
SupportMap pruned_expansion(const ProdMulti& p, const std::map<VarId, unsigned>& bit,
                            const Limits& limits) {
    SupportMap terms;
    terms.emplace(Support{}, Rat(1));
    for (const auto& factor : p.factors()) {
        std::vector<std::pair<Support, Rat>> options;
        options.reserve(factor.terms().size());
        for (const auto& [mono, coeff] : factor.terms()) {
            Support s;
            bool multilinear = true;
            for (const auto& [v, e] : mono.exponents()) {
                if (e >= 2) {
                    multilinear = false;
                    break;
                }
                s.set(bit.at(v));
            }
            if (multilinear) {
                options.emplace_back(s, coeff);
            }
        }
        SupportMap next;
        for (const auto& [support, coeff] : terms) {
            for (const auto& [mask, c] : options) {
                if (support.intersects(mask)) {
                    continue;
                }
                Rat add = coeff * c;
                if (add.is_zero()) {
                    continue;
                }
                const Support key = support.united(mask);
                auto it = next.find(key);
                if (it == next.end()) {
                    next.emplace(key, std::move(add));
                } else {
                    it->second += add;
                }
            }
            if (next.size() > limits.term_cap) {
                throw ResourceError("multilinear expansion exceeds term cap of " +
                                    std::to_string(limits.term_cap));
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        terms = std::move(next);
        if (terms.empty()) {
            break;
        }
    }
    return terms;
}

} // namespace

Rat multilinear_coefficient(const ProdMulti& p, const std::vector<VarId>& vars,
                            const Limits& limits) {
    const auto bit = bit_assignment(vars);
    require_covering(p, bit);
    if (vars.size() > kMaxMultilinearVars) {
        throw ResourceError("multilinear_coefficient: more than " +
                            std::to_string(kMaxMultilinearVars) + " variables");
    }
    const SupportMap terms = pruned_expansion(p, bit, limits);
    Support full;
    for (unsigned i = 0; i < vars.size(); ++i) {
        full.set(i);
    }
    auto it = terms.find(full);
    return it == terms.end() ? Rat(0) : it->second;
}

Rat derivative_at_origin_oracle(const ProdMulti& p, const std::vector<VarId>& vars,
                                const Limits& limits) {
    const auto bit = bit_assignment(vars);
    require_covering(p, bit);
    const MultiPoly expanded = expand_product(p, limits);
    Monomial target;
    for (VarId v : vars) {
        target = target * Monomial::var(v);
    }
    return expanded.coeff(target);
}

bool has_multilinear_term(const ProdMulti& p, const Limits& limits) {
    const std::set<VarId> vs = p.variables();
    std::vector<VarId> vars(vs.begin(), vs.end());
    if (vars.size() > kMaxMultilinearVars) {
        throw ResourceError("has_multilinear_term: more than " +
                            std::to_string(kMaxMultilinearVars) + " variables");
    }
    const auto bit = bit_assignment(vars);
    return !pruned_expansion(p, bit, limits).empty();
}

} // namespace cubecalc
