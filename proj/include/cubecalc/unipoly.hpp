#pragma once

#include "cubecalc/rat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace cubecalc {

// Dense single-variable polynomial over Rat. coeffs()[i] is the coefficient
// of x^i; the highest stored coefficient is nonzero. The zero polynomial has
// no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rat> coeffs_low_to_high);
    explicit UniPoly(std::vector<Rat> coeffs_low_to_high);

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, unsigned degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;
    double eval(double x) const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rat> coeffs_;
    void normalize();
};

// Exact value of the unit-interval integral of p.
Rat integrate01(const UniPoly& p);

} // namespace cubecalc
