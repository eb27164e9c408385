#include "cubecalc/multipoly.hpp"

#include "cubecalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cubecalc {

Monomial::Monomial(std::initializer_list<std::pair<VarId, unsigned>> powers) {
    for (const auto& [v, e] : powers) {
        if (e > 0) {
            exps_[v] += e;
        }
    }
}

Monomial Monomial::var(VarId v, unsigned exp) {
    Monomial m;
    if (exp > 0) {
        m.exps_[v] = exp;
    }
    return m;
}

unsigned Monomial::exponent(VarId v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0u : it->second;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exps_) {
        d += e;
    }
    return d;
}

bool Monomial::is_multilinear() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](const auto& p) { return p.second == 1; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.exps_) {
        r.exps_[v] += e;
    }
    return r;
}

std::string Monomial::to_string() const {
    if (exps_.empty()) {
        return "1";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) {
            os << "*";
        }
        first = false;
        os << "x" << v.index;
        if (e > 1) {
            os << "^" << e;
        }
    }
    return os.str();
}

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    p.add_term(Monomial(), c);
    return p;
}

MultiPoly MultiPoly::var(VarId v) {
    return monomial(Monomial::var(v), Rat(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rat& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

Rat MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.total_degree());
    }
    return d;
}

std::set<VarId> MultiPoly::variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.exponents()) {
            vs.insert(v);
        }
    }
    return vs;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        r.terms_.emplace(m, -c);
    }
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        r.add_term(m, c);
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        r.add_term(m, -c);
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    return mul(o, Limits::defaults().term_cap);
}

MultiPoly MultiPoly::mul(const MultiPoly& o, std::size_t term_cap) const {
    MultiPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
        if (r.terms_.size() > term_cap) {
            throw ResourceError("multipoly product exceeds term cap of " +
                                std::to_string(term_cap));
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r;
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [m, a] : terms_) {
        r.terms_.emplace(m, a * c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else if (a.sign() < 0) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
        if (m.is_one()) {
            os << a;
        } else {
            if (!(a == Rat(1))) {
                os << a << "*";
            }
            os << m.to_string();
        }
    }
    return os.str();
}

Rat integrate01_all(const MultiPoly& p) {
    Rat total(0);
    for (const auto& [m, c] : p.terms()) {
        Rat term = c;
        for (const auto& [v, e] : m.exponents()) {
            term /= Rat(static_cast<long long>(e) + 1);
        }
        total += term;
    }
    return total;
}

MultiPoly integrate01_subset(const MultiPoly& p, const std::set<VarId>& vars) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Rat coeff = c;
        Monomial rest;
        for (const auto& [v, e] : m.exponents()) {
            if (vars.count(v)) {
                coeff /= Rat(static_cast<long long>(e) + 1);
            } else {
                rest = rest * Monomial::var(v, e);
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

Rat integrate_disjoint_product(const MultiPoly& f1, const MultiPoly& f2) {
    std::set<VarId> a = f1.variables();
    for (VarId v : f2.variables()) {
        if (a.count(v)) {
            throw PreconditionError(
                "integrate_disjoint_product: factors share variable x" +
                std::to_string(v.index));
        }
    }
    return integrate01_all(f1) * integrate01_all(f2);
}

} // namespace cubecalc
