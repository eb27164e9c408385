#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubecalc/approx.hpp"
#include "cubecalc/compile.hpp"
#include "cubecalc/dimacs.hpp"
#include "cubecalc/errors.hpp"
#include "cubecalc/mc.hpp"
#include "cubecalc/polydoc.hpp"

#include "fixtures.hpp"
#include "gen.hpp"

#include <cmath>
#include <string>

using namespace cubecalc;

// ======== DIMACS ========

TEST_CASE("dimacs basics") {
    const CnfFormula f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
    CHECK(f.num_vars() == 2);
    REQUIRE(f.clauses().size() == 1);
    CHECK(f.clauses()[0].literals ==
          std::vector<Literal>{Literal{VarId{0}, false}, Literal{VarId{1}, true}});
}

TEST_CASE("dimacs round-trips the first worked formula") {
    const std::string text = "c the first worked formula\np cnf 2 3\n1 2 0\n1 -2 0\n-1 2 0\n";
    const CnfFormula f = parse_dimacs(text);
    CHECK(f == fixtures::example1_formula());
    CHECK(parse_dimacs(to_dimacs(f)) == f);
}

TEST_CASE("dimacs error diagnostics carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 1 1\n2 0\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf x 1\n"),
                         doctest::Contains("malformed header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 2 1\n1 2\n"),
                         doctest::Contains("terminator"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 1 1\n0\n"),
                         doctest::Contains("empty clause"), ParseError);
}

TEST_CASE("dimacs round-trip on random formulas") {
    testgen::Rng rng(51);
    for (int i = 0; i < 60; ++i) {
        const CnfFormula f = testgen::rand_cnf(rng, 6, 8, 3);
        CHECK(parse_dimacs(to_dimacs(f)) == f);
    }
}

// ======== PolyDocument ========

TEST_CASE("prodsum document round-trip") {
    const ProdSumUni inst =
        compile_integration_instance(fixtures::example1_formula(), default_gadgets(), 1);
    const PolyDocument doc = make_document(inst, 2);
    const std::string text = serialize_poly(doc);
    CHECK(text.rfind("cubecalc-poly v1\n", 0) == 0);
    const PolyDocument back = parse_poly(text);
    CHECK(back == doc);
    CHECK(back.prodsum() == inst);
}

TEST_CASE("prodmulti document round-trip and width") {
    // (x1 x3 + x2^2)(x2 x4 + x3^2)
    MultiPoly f1, f2;
    f1.add_term(Monomial{{VarId{0}, 1}, {VarId{2}, 1}}, Rat(1));
    f1.add_term(Monomial{{VarId{1}, 2}}, Rat(1));
    f2.add_term(Monomial{{VarId{1}, 1}, {VarId{3}, 1}}, Rat(1));
    f2.add_term(Monomial{{VarId{2}, 2}}, Rat(1));
    const ProdMulti p({f1, f2}, 2);
    const PolyDocument doc = make_document(p, 4);
    const PolyDocument back = parse_poly(serialize_poly(doc));
    CHECK(back == doc);
    CHECK(width_of(back.prodmulti()) == 2);
}

TEST_CASE("document round-trip on random instances") {
    testgen::Rng rng(52);
    for (int i = 0; i < 50; ++i) {
        const PolyDocument doc = make_document(testgen::rand_prodsum(rng, 5, 5, 3), 5);
        CHECK(parse_poly(serialize_poly(doc)) == doc);
    }
    for (int i = 0; i < 50; ++i) {
        const PolyDocument doc = make_document(testgen::rand_prodmulti(rng, 5, 5, 3, 4), 5);
        CHECK(parse_poly(serialize_poly(doc)) == doc);
    }
}

TEST_CASE("document schema violations carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_poly("bogus\n"), doctest::Contains("header"), ParseError);

    const std::string zero_den =
        "cubecalc-poly v1\nkind prodsum\nnum_vars 1\ndegree_bound 2\nfactors 1\n"
        "factor 1/0 0\n";
    CHECK_THROWS_WITH_AS(parse_poly(zero_den), doctest::Contains("line 6"), ParseError);

    const std::string bad_var =
        "cubecalc-poly v1\nkind prodmulti\nnum_vars 1\ndegree_bound 2\nfactors 1\n"
        "factor 1\nterm 1 1 3 1\n";
    CHECK_THROWS_WITH_AS(parse_poly(bad_var), doctest::Contains("out of range"), ParseError);

    const std::string over_degree =
        "cubecalc-poly v1\nkind prodmulti\nnum_vars 1\ndegree_bound 1\nfactors 1\n"
        "factor 1\nterm 1 1 0 2\n";
    CHECK_THROWS_AS(parse_poly(over_degree), ParseError);

    const std::string nonzero_const_part =
        "cubecalc-poly v1\nkind prodsum\nnum_vars 1\ndegree_bound 2\nfactors 1\n"
        "factor 0 1\npart 0 5 1\n";
    CHECK_THROWS_WITH_AS(parse_poly(nonzero_const_part),
                         doctest::Contains("constant term"), ParseError);
}

// ======== Monte Carlo ========

TEST_CASE("constant documents estimate exactly") {
    const PolyDocument doc = make_document(
        ProdSumUni({SumFactor(Rat(5))}, 1), 0);
    const McEstimate est = mc_estimate(doc, 1000, 7);
    CHECK(est.mean == 5.0);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("estimates are reproducible and converge on 2x") {
    SumFactor fx;
    fx.add_part(VarId{0}, default_gadgets().f);
    const PolyDocument doc = make_document(ProdSumUni({fx}, 1), 1);

    const McEstimate a = mc_estimate(doc, 100000, 42);
    const McEstimate b = mc_estimate(doc, 100000, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    CHECK(std::abs(a.mean - 1.0) <= 5.0 * a.std_error);

    const McEstimate c = mc_estimate(doc, 100000, 43);
    CHECK(c.mean != a.mean);
    CHECK(std::abs(c.mean - 1.0) <= 5.0 * c.std_error);
}

TEST_CASE("the unsatisfiable instance estimates near zero") {
    const ProdSumUni inst =
        compile_integration_instance(fixtures::example2_formula(), default_gadgets(), 1);
    const PolyDocument doc = make_document(inst, 2);
    const McEstimate est = mc_estimate(doc, 100000, 9);
    CHECK(std::abs(est.mean - 0.0) <= 5.0 * est.std_error);
}

TEST_CASE("estimate rejects zero samples") {
    const PolyDocument doc = make_document(ProdSumUni({}, 1), 0);
    CHECK_THROWS_AS(mc_estimate(doc, 0, 1), PreconditionError);
}

// ======== approximation contracts ========

TEST_CASE("r-factor contract") {
    CHECK(check_r_factor({Rat(0), Rat(0), Rat(2), Rat(0)}));
    CHECK_FALSE(check_r_factor({Rat(0), Rat(1), Rat(2), Rat(0)}));
    CHECK(check_r_factor({Rat(4), Rat(5), Rat(2), Rat(0)}));
    CHECK_FALSE(check_r_factor({Rat(-4), Rat(-1), Rat(2), Rat(0)}));
    CHECK(check_r_factor({Rat(-4), Rat(-3), Rat(2), Rat(0)}));
    CHECK_THROWS_AS(check_r_factor({Rat(1), Rat(1), Rat(BigInt(1), BigInt(2)), Rat(0)}),
                    PreconditionError);
}

TEST_CASE("rs-factor contract") {
    CHECK(check_rs_factor({Rat(0), Rat(3), Rat(1), Rat(3)}));
    CHECK(check_rs_factor({Rat(0), Rat(-3), Rat(1), Rat(3)}));
    CHECK_FALSE(check_rs_factor({Rat(0), Rat(4), Rat(1), Rat(3)}));
    // boundary: interval [4, 26]
    CHECK(check_rs_factor({Rat(12), Rat(4), Rat(2), Rat(2)}));
    CHECK_FALSE(check_rs_factor({Rat(12), Rat(3), Rat(2), Rat(2)}));
}

TEST_CASE("rs with zero slack degenerates to the r contract") {
    testgen::Rng rng(53);
    for (int i = 0; i < 300; ++i) {
        ApproxCheck c;
        c.true_value = Rat(testgen::rand_int(rng, -20, 20));
        c.approx_value = Rat(testgen::rand_int(rng, -40, 40));
        c.r = Rat(BigInt(testgen::rand_int(rng, 1, 8)), BigInt(1));
        c.s = Rat(0);
        CHECK(check_rs_factor(c) == check_r_factor(c));
    }
}
