#include "cubecalc/dimacs.hpp"

#include "cubecalc/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

namespace cubecalc {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("dimacs line " + std::to_string(line) + ": " + what);
}

bool parse_long(const std::string& token, long long& out) {
    if (token.empty()) {
        return false;
    }
    std::size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size()) {
        return false;
    }
    for (std::size_t j = i; j < token.size(); ++j) {
        if (token[j] < '0' || token[j] > '9') {
            return false;
        }
    }
    out = std::strtoll(token.c_str(), nullptr, 10);
    return true;
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    long long declared_vars = -1;
    std::vector<Clause> clauses;
    Clause current;
    bool open_clause = false;
    std::size_t open_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) {
            continue;  // blank line
        }
        if (first == "c" || first[0] == 'c') {
            continue;  // comment
        }
        if (first == "p") {
            if (declared_vars >= 0) {
                fail(line_no, "duplicate header");
            }
            std::string fmt;
            long long nv = -1, nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) {
                fail(line_no, "malformed header, expected \"p cnf <vars> <clauses>\"");
            }
            std::string extra;
            if (ls >> extra) {
                fail(line_no, "trailing tokens after header");
            }
            declared_vars = nv;
            continue;
        }
        if (declared_vars < 0) {
            fail(line_no, "clause data before \"p cnf\" header");
        }
        std::istringstream ts(line);
        std::string token;
        while (ts >> token) {
            long long lit = 0;
            if (!parse_long(token, lit)) {
                fail(line_no, "invalid literal token \"" + token + "\"");
            }
            if (lit == 0) {
                if (current.literals.empty()) {
                    fail(line_no, "empty clause");
                }
                clauses.push_back(std::move(current));
                current = Clause{};
                open_clause = false;
                continue;
            }
            const long long v = lit < 0 ? -lit : lit;
            if (v > declared_vars) {
                fail(line_no, "literal " + std::to_string(lit) + " out of range, only " +
                                  std::to_string(declared_vars) + " variables declared");
            }
            if (!open_clause) {
                open_clause = true;
                open_line = line_no;
            }
            current.literals.push_back(
                Literal{VarId{static_cast<std::uint32_t>(v - 1)}, lit < 0});
        }
    }
    if (declared_vars < 0) {
        fail(line_no == 0 ? 1 : line_no, "missing \"p cnf\" header");
    }
    if (open_clause) {
        fail(open_line, "clause missing its 0 terminator");
    }
    return CnfFormula(static_cast<unsigned>(declared_vars), std::move(clauses));
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars() << " " << f.clauses().size() << "\n";
    for (const Clause& c : f.clauses()) {
        for (const Literal& l : c.literals) {
            os << (l.negated ? "-" : "") << l.var.index + 1 << " ";
        }
        os << "0\n";
    }
    return os.str();
}

} // namespace cubecalc
