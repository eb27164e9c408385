#include "cubecalc/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cubecalc {

UniPoly::UniPoly(std::initializer_list<Rat> coeffs_low_to_high)
    : coeffs_(coeffs_low_to_high) {
    normalize();
}

UniPoly::UniPoly(std::vector<Rat> coeffs_low_to_high)
    : coeffs_(std::move(coeffs_low_to_high)) {
    normalize();
}

UniPoly UniPoly::constant(const Rat& c) {
    UniPoly p;
    if (!c.is_zero()) {
        p.coeffs_.push_back(c);
    }
    return p;
}

UniPoly UniPoly::monomial(const Rat& c, unsigned degree) {
    UniPoly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(degree + 1, Rat(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rat UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double UniPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        r.coeffs_.push_back(-c);
    }
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coeff(i) + o.coeff(i);
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + (-o);
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) {
        return UniPoly();
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c.is_zero()) {
        return UniPoly();
    }
    UniPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) {
        r.coeffs_.push_back(a * c);
    }
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const Rat& c = coeffs_[d];
        if (c.is_zero()) {
            continue;
        }
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
        if (d == 0) {
            os << a;
        } else {
            if (!(a == Rat(1))) {
                os << a << "*";
            }
            os << var;
            if (d > 1) {
                os << "^" << d;
            }
        }
    }
    return os.str();
}

Rat integrate01(const UniPoly& p) {
    Rat total(0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        total += p.coeffs()[i] / Rat(static_cast<long long>(i) + 1);
    }
    return total;
}

} // namespace cubecalc
