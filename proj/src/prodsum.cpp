#include "cubecalc/prodsum.hpp"

#include "cubecalc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace cubecalc {

void SumFactor::add_part(VarId v, const UniPoly& p) {
    constant_ += p.coeff(0);
    UniPoly body = p - UniPoly::constant(p.coeff(0));
    if (body.is_zero()) {
        return;
    }
    auto it = parts_.find(v);
    if (it == parts_.end()) {
        parts_.emplace(v, body);
        return;
    }
    it->second = it->second + body;
    if (it->second.is_zero()) {
        parts_.erase(it);
    }
}

unsigned SumFactor::max_part_degree() const {
    int d = 0;
    for (const auto& [v, p] : parts_) {
        d = std::max(d, p.degree());
    }
    return static_cast<unsigned>(d);
}

MultiPoly SumFactor::to_multipoly() const {
    MultiPoly out = MultiPoly::constant(constant_);
    for (const auto& [v, p] : parts_) {
        for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
            if (!p.coeffs()[i].is_zero()) {
                out.add_term(Monomial::var(v, static_cast<unsigned>(i)), p.coeffs()[i]);
            }
        }
    }
    return out;
}

double SumFactor::eval(const std::vector<double>& point) const {
    double acc = constant_.to_double();
    for (const auto& [v, p] : parts_) {
        acc += p.eval(point.at(v.index));
    }
    return acc;
}

SumFactor SumFactor::scaled(const Rat& c) const {
    SumFactor out(constant_ * c);
    for (const auto& [v, p] : parts_) {
        out.add_part(v, p * c);
    }
    return out;
}

ProdSumUni::ProdSumUni(std::vector<SumFactor> factors, unsigned degree_bound)
    : factors_(std::move(factors)), degree_bound_(degree_bound) {
    if (degree_bound_ == 0) {
        throw PreconditionError("ProdSumUni: degree bound must be positive");
    }
    for (const auto& f : factors_) {
        if (f.max_part_degree() > degree_bound_) {
            throw PreconditionError("ProdSumUni: part degree " +
                                    std::to_string(f.max_part_degree()) +
                                    " exceeds bound " + std::to_string(degree_bound_));
        }
    }
}

std::set<VarId> ProdSumUni::variables() const {
    std::set<VarId> vs;
    for (const auto& f : factors_) {
        for (const auto& [v, p] : f.parts()) {
            vs.insert(v);
        }
    }
    return vs;
}

MultiPoly expand_prodsum(const ProdSumUni& p, const Limits& limits) {
    MultiPoly acc = MultiPoly::constant(Rat(1));
    for (const auto& f : p.factors()) {
        acc = acc.mul(f.to_multipoly(), limits.term_cap);
    }
    return acc;
}

namespace {

using FactorMask = std::uint64_t;

// Memoized unit-interval integrals of products of the parts a variable
// contributes to a subset of factors. Keyed by a local submask over the
// variable's support list.
class PartIntegrals {
public:
    PartIntegrals(const std::vector<SumFactor>& factors,
                  VarId v,
                  const std::vector<std::size_t>& support)
        : factors_(factors), v_(v), support_(support) {
        polys_[0] = UniPoly::constant(Rat(1));
        values_[0] = Rat(1);
    }

    const Rat& value(std::uint32_t local_mask) {
        auto it = values_.find(local_mask);
        if (it != values_.end()) {
            return it->second;
        }
        const Rat val = integrate01(poly(local_mask));
        return values_.emplace(local_mask, val).first->second;
    }

private:
    const UniPoly& poly(std::uint32_t local_mask) {
        auto it = polys_.find(local_mask);
        if (it != polys_.end()) {
            return it->second;
        }
        const std::uint32_t low = local_mask & (~local_mask + 1);
        const std::uint32_t rest = local_mask & ~low;
        unsigned idx = 0;
        while (!((low >> idx) & 1u)) {
            ++idx;
        }
        UniPoly prod = poly(rest) * factors_[support_[idx]].parts().at(v_);
        return polys_.emplace(local_mask, std::move(prod)).first->second;
    }

    const std::vector<SumFactor>& factors_;
    VarId v_;
    const std::vector<std::size_t>& support_;
    std::map<std::uint32_t, UniPoly> polys_;
    std::map<std::uint32_t, Rat> values_;
};

} // namespace

Rat integrate_prodsum(const ProdSumUni& p, const Limits& limits) {
    const auto& factors = p.factors();
    const std::size_t k = factors.size();
    if (k == 0) {
        return Rat(1);
    }
    if (k > limits.dp_factor_cap) {
        throw ResourceError("integrate_prodsum: " + std::to_string(k) +
                            " factors exceed the DP factor cap of " +
                            std::to_string(limits.dp_factor_cap));
    }
    if (k > 63) {
        throw ResourceError("integrate_prodsum: subset DP supports at most 63 factors");
    }

    // Factor indices containing each variable, in factor order.
    std::map<VarId, std::vector<std::size_t>> support;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [v, poly] : factors[i].parts()) {
            support[v].push_back(i);
        }
    }

    // Processing order: by last occurrence, then first occurrence, then id.
    // Keeps the set of factors that can still receive a variable small for
    // chain-structured products.
    std::vector<VarId> order;
    order.reserve(support.size());
    for (const auto& [v, occ] : support) {
        order.push_back(v);
    }
    std::sort(order.begin(), order.end(), [&](VarId a, VarId b) {
        const auto& oa = support.at(a);
        const auto& ob = support.at(b);
        if (oa.back() != ob.back()) {
            return oa.back() < ob.back();
        }
        if (oa.front() != ob.front()) {
            return oa.front() < ob.front();
        }
        return a < b;
    });

    // After a factor's last variable is processed it can only contribute its
    // constant; fold it in and drop its bit from the state.
    std::vector<std::ptrdiff_t> dies_after(k, -1);
    for (std::size_t t = 0; t < order.size(); ++t) {
        for (std::size_t i : support.at(order[t])) {
            dies_after[i] = std::max(dies_after[i], static_cast<std::ptrdiff_t>(t));
        }
    }

    std::map<FactorMask, Rat> dp;
    dp[k == 64 ? ~FactorMask(0) : ((FactorMask(1) << k) - 1)] = Rat(1);

    auto collapse_factor = [&](std::size_t i) {
        const FactorMask bit = FactorMask(1) << i;
        std::map<FactorMask, Rat> next;
        for (const auto& [state, val] : dp) {
            const FactorMask target = state & ~bit;
            const Rat add = (state & bit) ? val * factors[i].constant() : val;
            if (add.is_zero()) {
                continue;
            }
            auto [it, inserted] = next.emplace(target, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) {
                    next.erase(it);
                }
            }
        }
        dp = std::move(next);
    };

    for (std::size_t i = 0; i < k; ++i) {
        if (dies_after[i] < 0) {
            collapse_factor(i);  // factor has no variables at all
        }
    }

    for (std::size_t t = 0; t < order.size(); ++t) {
        const VarId v = order[t];
        const auto& sup = support.at(v);
        if (sup.size() > 20) {
            throw ResourceError("integrate_prodsum: variable x" +
                                std::to_string(v.index) + " occurs in " +
                                std::to_string(sup.size()) +
                                " factors; subset DP caps this at 20");
        }
        PartIntegrals integrals(factors, v, sup);

        std::map<FactorMask, Rat> next;
        for (const auto& [state, val] : dp) {
            // Local indices of factors still assignable that contain v.
            std::vector<std::uint32_t> avail;
            for (std::size_t li = 0; li < sup.size(); ++li) {
                if ((state >> sup[li]) & 1u) {
                    avail.push_back(static_cast<std::uint32_t>(li));
                }
            }
            const std::uint32_t nsub = 1u << avail.size();
            for (std::uint32_t choose = 0; choose < nsub; ++choose) {
                std::uint32_t local_mask = 0;
                FactorMask global_mask = 0;
                for (std::size_t j = 0; j < avail.size(); ++j) {
                    if ((choose >> j) & 1u) {
                        local_mask |= 1u << avail[j];
                        global_mask |= FactorMask(1) << sup[avail[j]];
                    }
                }
                const Rat add = val * integrals.value(local_mask);
                if (add.is_zero()) {
                    continue;
                }
                auto [it, inserted] = next.emplace(state & ~global_mask, add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) {
                        next.erase(it);
                    }
                }
            }
        }
        dp = std::move(next);

        for (std::size_t i = 0; i < k; ++i) {
            if (dies_after[i] == static_cast<std::ptrdiff_t>(t)) {
                collapse_factor(i);
            }
        }
    }

    // Every factor has been folded away by now.
    auto it = dp.find(0);
    return it == dp.end() ? Rat(0) : it->second;
}

} // namespace cubecalc
