// Command-line surface over the exact integration, derivative, and SAT
// reduction engines. Exact results print as rationals ("num" or "num/den");
// only the Monte-Carlo estimator prints decimals.
//
// Exit codes: 0 success, 2 parse error, 3 precondition error, 4 resource
// limit, 1 anything else.

#include "CLI11.hpp"

#include "cubecalc/approx.hpp"
#include "cubecalc/compile.hpp"
#include "cubecalc/derivative.hpp"
#include "cubecalc/dimacs.hpp"
#include "cubecalc/errors.hpp"
#include "cubecalc/gadgets.hpp"
#include "cubecalc/mc.hpp"
#include "cubecalc/polydoc.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace cubecalc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << content;
}

ProdMulti as_prodmulti(const PolyDocument& doc) {
    if (!doc.is_prodsum()) {
        return doc.prodmulti();
    }
    std::vector<MultiPoly> factors;
    for (const SumFactor& f : doc.prodsum().factors()) {
        factors.push_back(f.to_multipoly());
    }
    return ProdMulti(std::move(factors), doc.prodsum().degree_bound());
}

int run_verify_gadgets() {
    const GadgetReport report = verify_gadgets(default_gadgets());
    for (const GadgetCheck& c : report.checks) {
        std::cout << c.name << " = " << c.value << "  " << (c.pass ? "ok" : "FAIL") << "\n";
    }
    if (!report.all_pass()) {
        std::cout << "gadget set FAILED\n";
        return 1;
    }
    std::cout << "gadget set ok\n";
    return 0;
}

int run_integrate(const std::string& in, const std::string& method, int c_opt) {
    const PolyDocument doc = parse_poly(read_file(in));
    Rat value;
    if (method == "dp") {
        if (!doc.is_prodsum()) {
            throw PreconditionError("--method dp needs a prodsum document");
        }
        value = integrate_prodsum(doc.prodsum());
    } else if (method == "expand") {
        value = doc.is_prodsum() ? integrate01_all(expand_prodsum(doc.prodsum()))
                                 : integrate01_all(expand_product(doc.prodmulti()));
    } else {
        const ProdMulti p = as_prodmulti(doc);
        const unsigned c = c_opt > 0 ? static_cast<unsigned>(c_opt) : width_of(p);
        value = integrate_cwide(p, c);
    }
    std::cout << value << "\n";
    return 0;
}

int run_derivative(const std::string& in, const std::string& method) {
    const PolyDocument doc = parse_poly(read_file(in));
    const ProdMulti p = as_prodmulti(doc);
    std::vector<VarId> vars;
    for (unsigned i = 0; i < doc.num_vars; ++i) {
        vars.push_back(VarId{i});
    }
    const Rat value = method == "prune" ? multilinear_coefficient(p, vars)
                                        : derivative_at_origin_oracle(p, vars);
    std::cout << value << "\n";
    return 0;
}

int run_reduce(const std::string& in, const std::string& out) {
    const CnfFormula f = parse_dimacs(read_file(in));
    const CnfFormula reduced = reduce_3sat_to_33sat(f);
    write_file(out, to_dimacs(reduced));
    std::cout << "reduced " << f.num_vars() << " vars / " << f.clauses().size()
              << " clauses to " << reduced.num_vars() << " vars / "
              << reduced.clauses().size() << " clauses\n";
    return 0;
}

int run_compile(const std::string& target, const std::string& in, unsigned scale,
                const std::string& out) {
    const CnfFormula f = parse_dimacs(read_file(in));
    if (target == "integration") {
        const ProdSumUni inst = compile_integration_instance(f, default_gadgets(), scale);
        write_file(out, serialize_poly(make_document(inst, f.num_vars())));
    } else {
        const DerivativeInstance inst = compile_derivative_instance(f, scale);
        write_file(out, serialize_poly(make_document(
                            inst.poly, static_cast<unsigned>(inst.vars.size()))));
    }
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_decide(const std::string& in, const std::string& via) {
    const CnfFormula f = parse_dimacs(read_file(in));
    bool sat = false;
    if (via == "integration") {
        sat = decide_sat_via_integration(f);
    } else if (via == "derivative") {
        sat = decide_sat_via_derivative(f);
    } else {
        sat = truth_table_sat(f);
    }
    std::cout << (sat ? "satisfiable" : "unsatisfiable") << "\n";
    return 0;
}

int run_estimate(const std::string& in, std::size_t samples, std::uint64_t seed) {
    const PolyDocument doc = parse_poly(read_file(in));
    const McEstimate est = mc_estimate(doc, samples, seed);
    std::cout << "estimate " << est.mean << " stderr " << est.std_error << " samples "
              << est.samples << " seed " << est.seed << " rng " << McEstimate::algorithm
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unit-cube integration and origin derivatives for structured "
                 "polynomial products, with SAT reduction pipelines"};
    app.require_subcommand(1);

    app.add_subcommand("verify-gadgets", "check the seven gadget integral identities");

    std::string in_path, out_path;
    std::string method = "dp";
    int cwide_c = 0;
    auto* integrate = app.add_subcommand("integrate", "exact unit-cube integral");
    integrate->add_option("--in", in_path, "polynomial document")->required();
    integrate->add_option("--method", method, "dp | expand | cwide")
        ->check(CLI::IsMember({"dp", "expand", "cwide"}));
    integrate->add_option("--c", cwide_c, "window width for --method cwide");

    std::string dmethod = "prune";
    auto* derivative = app.add_subcommand("derivative",
                                          "mixed derivative at the origin over all variables");
    derivative->add_option("--in", in_path, "polynomial document")->required();
    derivative->add_option("--method", dmethod, "prune | expand")
        ->check(CLI::IsMember({"prune", "expand"}));

    auto* reduce = app.add_subcommand("reduce", "rewrite a 3SAT instance into (3,3) shape");
    reduce->add_option("--in", in_path, "DIMACS input")->required();
    reduce->add_option("--out", out_path, "DIMACS output")->required();

    std::string target = "integration";
    unsigned scale = 1;
    auto* compile = app.add_subcommand("compile", "compile a (3,3) CNF into a polynomial");
    compile->add_option("--target", target, "integration | derivative")
        ->check(CLI::IsMember({"integration", "derivative"}));
    compile->add_option("--in", in_path, "DIMACS input")->required();
    compile->add_option("--scale", scale, "scale S; the multiplier is 3*S^2");
    compile->add_option("--out", out_path, "polynomial document output")->required();

    std::string via = "integration";
    auto* decide = app.add_subcommand("decide", "decide satisfiability");
    decide->add_option("--in", in_path, "DIMACS input")->required();
    decide->add_option("--via", via, "integration | derivative | truthtable")
        ->check(CLI::IsMember({"integration", "derivative", "truthtable"}));

    std::size_t samples = 10000;
    std::int64_t seed = 0;
    auto* estimate = app.add_subcommand("estimate", "Monte-Carlo estimate of the integral");
    estimate->add_option("--in", in_path, "polynomial document")->required();
    estimate->add_option("--samples", samples, "sample count");
    estimate->add_option("--seed", seed, "generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("verify-gadgets")) {
            return run_verify_gadgets();
        }
        if (app.got_subcommand(integrate)) {
            return run_integrate(in_path, method, cwide_c);
        }
        if (app.got_subcommand(derivative)) {
            return run_derivative(in_path, dmethod);
        }
        if (app.got_subcommand(reduce)) {
            return run_reduce(in_path, out_path);
        }
        if (app.got_subcommand(compile)) {
            return run_compile(target, in_path, scale, out_path);
        }
        if (app.got_subcommand(decide)) {
            return run_decide(in_path, via);
        }
        if (app.got_subcommand(estimate)) {
            return run_estimate(in_path, samples, static_cast<std::uint64_t>(seed));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
