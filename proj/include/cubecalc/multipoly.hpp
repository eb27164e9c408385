#pragma once

#include "cubecalc/limits.hpp"
#include "cubecalc/rat.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cubecalc {

// Identifies one variable of an instance. Variable indices are dense
// 0..n-1 within any instance.
struct VarId {
    std::uint32_t index = 0;
    auto operator<=>(const VarId&) const = default;
};

// Product of variables with positive exponents; the empty monomial is 1.
// Exponent-zero entries are never stored.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<VarId, unsigned>> powers);

    static Monomial var(VarId v, unsigned exp = 1);

    bool is_one() const { return exps_.empty(); }
    unsigned exponent(VarId v) const;
    unsigned total_degree() const;
    bool is_multilinear() const;
    const std::map<VarId, unsigned>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;

    // Lexicographic by VarId then exponent, the canonical output order.
    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::map<VarId, unsigned> exps_;
};

// Sparse multivariate polynomial over Rat. Zero coefficients are never
// stored; the empty monomial carries the constant term.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(const Rat& c);
    static MultiPoly var(VarId v);
    static MultiPoly monomial(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Monomial& m) const;
    Rat constant_term() const { return coeff(Monomial()); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    unsigned total_degree() const;
    std::set<VarId> variables() const;

    void add_term(const Monomial& m, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly mul(const MultiPoly& o, std::size_t term_cap) const;
    MultiPoly scaled(const Rat& c) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<Monomial, Rat> terms_;
};

// Exact integral over the unit cube in every occurring variable. Each
// monomial contributes coeff * prod 1/(exp+1).
Rat integrate01_all(const MultiPoly& p);

// Integrates the given variables out, leaving a polynomial over the rest.
// Variables absent from a term integrate to the factor 1.
MultiPoly integrate01_subset(const MultiPoly& p, const std::set<VarId>& vars);

// Unit-cube integral of f1*f2 for variable-disjoint f1 and f2, computed as
// the product of the two separate integrals. Throws PreconditionError when
// the variable sets overlap.
Rat integrate_disjoint_product(const MultiPoly& f1, const MultiPoly& f2);

} // namespace cubecalc
