#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubecalc/errors.hpp"
#include "cubecalc/multipoly.hpp"
#include "cubecalc/rat.hpp"
#include "cubecalc/unipoly.hpp"

#include "gen.hpp"

using namespace cubecalc;

// ======== Rat ========

TEST_CASE("rat canonical form") {
    Rat r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);

    Rat z(BigInt(0), BigInt(7));
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(z.is_zero());

    CHECK(Rat(BigInt(4), BigInt(2)) == Rat(2));
    CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rat arithmetic stays reduced") {
    testgen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rat a(BigInt(testgen::rand_int(rng, -100, 100)),
              BigInt(testgen::rand_int(rng, 1, 40)));
        Rat b(BigInt(testgen::rand_int(rng, -100, 100)),
              BigInt(testgen::rand_int(rng, 1, 40)));
        for (const Rat& r : {a + b, a - b, a * b}) {
            CHECK(boost::multiprecision::gcd(abs(r.numerator()), r.denominator()) == 1);
            CHECK(r.denominator() > 0);
        }
    }
}

TEST_CASE("rat rendering and parsing") {
    CHECK(Rat(BigInt(-3), BigInt(2)).to_string() == "-3/2");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat::from_string("7/3") == Rat(BigInt(7), BigInt(3)));
    CHECK(Rat::from_string("-12") == Rat(-12));
    CHECK_THROWS_AS(Rat::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("x"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("1.5"), ParseError);
}

// ======== UniPoly ========

TEST_CASE("unipoly integrate01") {
    // 2x
    CHECK(integrate01(UniPoly{Rat(0), Rat(2)}) == Rat(1));
    // zero polynomial
    CHECK(integrate01(UniPoly()) == Rat(0));
    // 30x^2 - 36x + 9
    CHECK(integrate01(UniPoly{Rat(9), Rat(-36), Rat(30)}) == Rat(1));
}

TEST_CASE("unipoly multiplication") {
    const UniPoly two_x{Rat(0), Rat(2)};
    const UniPoly g2{Rat(4), Rat(-6)};
    CHECK(two_x * g2 == UniPoly{Rat(0), Rat(8), Rat(-12)});
    CHECK((two_x * UniPoly()).is_zero());

    const UniPoly g1{Rat(9), Rat(-36), Rat(30)};
    CHECK(integrate01(g1 * g2) == Rat(4));
}

TEST_CASE("unipoly degree and normalization") {
    CHECK(UniPoly{Rat(1), Rat(0), Rat(0)}.degree() == 0);
    CHECK(UniPoly().degree() == -1);
    const UniPoly p{Rat(1), Rat(2)};
    const UniPoly q{Rat(-1), Rat(-2)};
    CHECK((p + q).is_zero());
    CHECK(p.eval(Rat(BigInt(1), BigInt(2))) == Rat(2));
}

TEST_CASE("integration is linear") {
    testgen::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const UniPoly p = testgen::rand_unipoly(rng, 4);
        const UniPoly q = testgen::rand_unipoly(rng, 4);
        const Rat alpha = testgen::rand_coeff(rng);
        const Rat beta = testgen::rand_coeff(rng);
        CHECK(integrate01(p * alpha + q * beta) ==
              alpha * integrate01(p) + beta * integrate01(q));
    }
}

// ======== Monomial / MultiPoly ========

TEST_CASE("monomial ordering and degree") {
    const Monomial a = Monomial::var(VarId{0}, 2);
    const Monomial b = Monomial::var(VarId{1}, 3);
    CHECK(a < b);
    CHECK((a * b).total_degree() == 5);
    CHECK(Monomial().is_one());
    CHECK((a * b).exponent(VarId{0}) == 2);
    CHECK(Monomial{{VarId{0}, 1}, {VarId{1}, 1}}.is_multilinear());
    CHECK_FALSE(a.is_multilinear());
}

TEST_CASE("multipoly multiplication") {
    // (x1 x3 + x2^2)(x2 x4 + x3^2)
    MultiPoly lhs;
    lhs.add_term(Monomial{{VarId{0}, 1}, {VarId{2}, 1}}, Rat(1));
    lhs.add_term(Monomial{{VarId{1}, 2}}, Rat(1));
    MultiPoly rhs;
    rhs.add_term(Monomial{{VarId{1}, 1}, {VarId{3}, 1}}, Rat(1));
    rhs.add_term(Monomial{{VarId{2}, 2}}, Rat(1));

    const MultiPoly prod = lhs * rhs;
    CHECK(prod.term_count() == 4);
    CHECK(prod.coeff(Monomial{{VarId{0}, 1}, {VarId{1}, 1}, {VarId{2}, 1}, {VarId{3}, 1}}) ==
          Rat(1));

    CHECK(lhs * MultiPoly::constant(Rat(1)) == lhs);

    // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
    const MultiPoly sum = MultiPoly::var(VarId{0}) + MultiPoly::var(VarId{1});
    const MultiPoly sq = sum * sum;
    CHECK(sq.coeff(Monomial{{VarId{0}, 1}, {VarId{1}, 1}}) == Rat(2));
    CHECK(sq.coeff(Monomial{{VarId{0}, 2}}) == Rat(1));
    CHECK(sq.term_count() == 3);
}

TEST_CASE("multipoly degree additivity under products") {
    testgen::Rng rng(13);
    const auto vars = testgen::var_range(4);
    for (int i = 0; i < 100; ++i) {
        MultiPoly a = testgen::rand_multipoly(rng, vars, 3, 4);
        MultiPoly b = testgen::rand_multipoly(rng, vars, 3, 4);
        // single-monomial inputs multiply to a single monomial of summed degree
        if (a.term_count() == 1 && b.term_count() == 1) {
            CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
        }
        // general bound
        if (!a.is_zero() && !b.is_zero() && !(a * b).is_zero()) {
            CHECK((a * b).total_degree() <= a.total_degree() + b.total_degree());
        }
    }
}

TEST_CASE("multipoly integrate01_all") {
    // x^2 y^3 over the unit square
    MultiPoly p;
    p.add_term(Monomial{{VarId{0}, 2}, {VarId{1}, 3}}, Rat(1));
    CHECK(integrate01_all(p) == Rat(BigInt(1), BigInt(12)));

    CHECK(integrate01_all(MultiPoly::constant(Rat(7))) == Rat(7));

    // expansion of g1(y) g2(y)
    const UniPoly g1{Rat(9), Rat(-36), Rat(30)};
    const UniPoly g2{Rat(4), Rat(-6)};
    const UniPoly prod = g1 * g2;
    MultiPoly expanded;
    for (std::size_t i = 0; i < prod.coeffs().size(); ++i) {
        expanded.add_term(Monomial::var(VarId{0}, static_cast<unsigned>(i)), prod.coeffs()[i]);
    }
    CHECK(integrate01_all(expanded) == Rat(4));
}

TEST_CASE("disjoint product integration") {
    MultiPoly x_sq = MultiPoly::monomial(Monomial::var(VarId{0}, 2), Rat(1));
    MultiPoly y_cu = MultiPoly::monomial(Monomial::var(VarId{1}, 3), Rat(1));
    CHECK(integrate_disjoint_product(x_sq, y_cu) == Rat(BigInt(1), BigInt(12)));

    testgen::Rng rng(14);
    const auto vars = testgen::var_range(3);
    for (int i = 0; i < 50; ++i) {
        const MultiPoly p = testgen::rand_multipoly(rng, vars, 3, 4);
        CHECK(integrate_disjoint_product(MultiPoly::constant(Rat(1)), p) ==
              integrate01_all(p));
    }

    // g1(y1) g2(y1) expanded, against g2(y2)
    const UniPoly g1{Rat(9), Rat(-36), Rat(30)};
    const UniPoly g2{Rat(4), Rat(-6)};
    const UniPoly g1g2 = g1 * g2;
    MultiPoly f1, f2;
    for (std::size_t i = 0; i < g1g2.coeffs().size(); ++i) {
        f1.add_term(Monomial::var(VarId{0}, static_cast<unsigned>(i)), g1g2.coeffs()[i]);
    }
    for (std::size_t i = 0; i < g2.coeffs().size(); ++i) {
        f2.add_term(Monomial::var(VarId{1}, static_cast<unsigned>(i)), g2.coeffs()[i]);
    }
    CHECK(integrate_disjoint_product(f1, f2) == Rat(4));

    CHECK_THROWS_AS(integrate_disjoint_product(x_sq, x_sq), PreconditionError);
}

TEST_CASE("disjoint product equals integral of the product") {
    testgen::Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly f1 = testgen::rand_multipoly(rng, {VarId{0}, VarId{1}}, 3, 3);
        const MultiPoly f2 = testgen::rand_multipoly(rng, {VarId{2}, VarId{3}}, 3, 3);
        CHECK(integrate_disjoint_product(f1, f2) == integrate01_all(f1 * f2));
    }
}

TEST_CASE("integrate01_subset leaves the remaining variables") {
    // x^2 y over y only -> x^2 / 2
    MultiPoly p;
    p.add_term(Monomial{{VarId{0}, 2}, {VarId{1}, 1}}, Rat(1));
    const MultiPoly partial = integrate01_subset(p, {VarId{1}});
    CHECK(partial.coeff(Monomial::var(VarId{0}, 2)) == Rat(BigInt(1), BigInt(2)));
    CHECK(partial.term_count() == 1);
    CHECK(integrate01_all(partial) == integrate01_all(p));
}

TEST_CASE("canonical text output") {
    MultiPoly p;
    p.add_term(Monomial{{VarId{0}, 2}}, Rat(3));
    p.add_term(Monomial{{VarId{1}, 1}}, Rat(BigInt(-1), BigInt(2)));
    p.add_term(Monomial(), Rat(7));
    CHECK(p.to_string() == "7 + 3*x0^2 - 1/2*x1");
    CHECK(UniPoly{Rat(9), Rat(-36), Rat(30)}.to_string() == "30*x^2 - 36*x + 9");
}
