#include "cubecalc/polydoc.hpp"

#include "cubecalc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace cubecalc {

namespace {

constexpr const char* kHeader = "cubecalc-poly v1";

unsigned max_var_index(const std::set<VarId>& vars) {
    unsigned top = 0;
    for (VarId v : vars) {
        top = std::max(top, v.index + 1);
    }
    return top;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("poly document line " + std::to_string(line) + ": " + what);
}

// Line-oriented reader that tracks line numbers for diagnostics.
class Reader {
public:
    explicit Reader(std::string_view text) : in_(std::string(text)) {}

    // Next non-blank line as a token stream; false at end of input.
    bool next(std::istringstream& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            bool blank = true;
            for (char ch : line) {
                if (!std::isspace(static_cast<unsigned char>(ch))) {
                    blank = false;
                    break;
                }
            }
            if (!blank) {
                out = std::istringstream(line);
                return true;
            }
        }
        return false;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::istringstream in_;
    std::size_t line_no_ = 0;
};

struct LineScanner {
    Reader& reader;
    std::istringstream tokens;

    void advance(const char* context) {
        if (!reader.next(tokens)) {
            throw ParseError("poly document: unexpected end of input, expected " +
                             std::string(context));
        }
    }
    std::string word(const char* what) {
        std::string w;
        if (!(tokens >> w)) {
            fail(reader.line_no(), std::string("missing ") + what);
        }
        return w;
    }
    long long integer(const char* what) {
        const std::string w = word(what);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(w, &used);
            if (used != w.size()) {
                throw std::invalid_argument(w);
            }
            return v;
        } catch (const std::exception&) {
            fail(reader.line_no(), std::string("invalid ") + what + " \"" + w + "\"");
        }
    }
    unsigned count(const char* what) {
        const long long v = integer(what);
        if (v < 0) {
            fail(reader.line_no(), std::string(what) + " must be nonnegative");
        }
        return static_cast<unsigned>(v);
    }
    Rat rational(const char* what) {
        const std::string w = word(what);
        try {
            return Rat::from_string(w);
        } catch (const ParseError& e) {
            fail(reader.line_no(), std::string("invalid ") + what + ": " + e.what());
        }
    }
    void done() {
        std::string extra;
        if (tokens >> extra) {
            fail(reader.line_no(), "unexpected trailing token \"" + extra + "\"");
        }
    }
};

} // namespace

PolyDocument make_document(ProdSumUni p, unsigned num_vars) {
    const unsigned needed = max_var_index(p.variables());
    if (num_vars < needed) {
        throw PreconditionError("document declares " + std::to_string(num_vars) +
                                " variables but the polynomial uses " +
                                std::to_string(needed));
    }
    PolyDocument doc;
    doc.num_vars = num_vars;
    doc.poly = std::move(p);
    return doc;
}

PolyDocument make_document(ProdMulti p, unsigned num_vars) {
    const unsigned needed = max_var_index(p.variables());
    if (num_vars < needed) {
        throw PreconditionError("document declares " + std::to_string(num_vars) +
                                " variables but the polynomial uses " +
                                std::to_string(needed));
    }
    PolyDocument doc;
    doc.num_vars = num_vars;
    doc.poly = std::move(p);
    return doc;
}

std::string serialize_poly(const PolyDocument& doc) {
    std::ostringstream os;
    os << kHeader << "\n";
    if (doc.is_prodsum()) {
        const ProdSumUni& p = doc.prodsum();
        os << "kind prodsum\n";
        os << "num_vars " << doc.num_vars << "\n";
        os << "degree_bound " << p.degree_bound() << "\n";
        os << "factors " << p.factors().size() << "\n";
        for (const SumFactor& f : p.factors()) {
            os << "factor " << f.constant().to_string() << " " << f.parts().size() << "\n";
            for (const auto& [v, poly] : f.parts()) {
                os << "part " << v.index;
                for (const Rat& c : poly.coeffs()) {
                    os << " " << c.to_string();
                }
                os << "\n";
            }
        }
    } else {
        const ProdMulti& p = doc.prodmulti();
        os << "kind prodmulti\n";
        os << "num_vars " << doc.num_vars << "\n";
        os << "degree_bound " << p.degree_bound() << "\n";
        os << "factors " << p.factors().size() << "\n";
        for (const MultiPoly& f : p.factors()) {
            os << "factor " << f.terms().size() << "\n";
            for (const auto& [m, c] : f.terms()) {
                os << "term " << c.to_string() << " " << m.exponents().size();
                for (const auto& [v, e] : m.exponents()) {
                    os << " " << v.index << " " << e;
                }
                os << "\n";
            }
        }
    }
    return os.str();
}

PolyDocument parse_poly(std::string_view text) {
    Reader reader(text);
    LineScanner line{reader, std::istringstream()};

    line.advance("header");
    {
        std::string whole;
        std::getline(line.tokens, whole);
        std::istringstream hs(whole);
        std::string a, b, extra;
        hs >> a >> b;
        if (a != "cubecalc-poly" || b != "v1" || (hs >> extra)) {
            fail(reader.line_no(), "expected header \"" + std::string(kHeader) + "\"");
        }
    }

    auto keyword = [&](const char* key) {
        const std::string w = line.word("keyword");
        if (w != key) {
            fail(reader.line_no(), "expected \"" + std::string(key) + "\", got \"" + w + "\"");
        }
    };

    line.advance("kind");
    keyword("kind");
    const std::string kind = line.word("kind value");
    if (kind != "prodsum" && kind != "prodmulti") {
        fail(reader.line_no(), "kind must be prodsum or prodmulti");
    }
    line.done();

    line.advance("num_vars");
    keyword("num_vars");
    const unsigned num_vars = line.count("num_vars");
    line.done();

    line.advance("degree_bound");
    keyword("degree_bound");
    const unsigned degree_bound = line.count("degree_bound");
    if (degree_bound == 0) {
        fail(reader.line_no(), "degree_bound must be positive");
    }
    line.done();

    line.advance("factors");
    keyword("factors");
    const unsigned factor_count = line.count("factor count");
    line.done();

    auto check_var = [&](unsigned idx) {
        if (idx >= num_vars) {
            fail(reader.line_no(), "variable " + std::to_string(idx) +
                                       " out of range, num_vars is " + std::to_string(num_vars));
        }
        return VarId{idx};
    };

    PolyDocument doc;
    doc.num_vars = num_vars;

    if (kind == "prodsum") {
        std::vector<SumFactor> factors;
        factors.reserve(factor_count);
        for (unsigned fi = 0; fi < factor_count; ++fi) {
            line.advance("factor line");
            keyword("factor");
            const Rat constant = line.rational("factor constant");
            const unsigned part_count = line.count("part count");
            line.done();
            SumFactor factor(constant);
            for (unsigned pi = 0; pi < part_count; ++pi) {
                line.advance("part line");
                keyword("part");
                const VarId v = check_var(line.count("part variable"));
                if (factor.parts().count(v)) {
                    fail(reader.line_no(), "duplicate part for variable " +
                                               std::to_string(v.index));
                }
                std::vector<Rat> coeffs;
                std::string tok;
                while (line.tokens >> tok) {
                    try {
                        coeffs.push_back(Rat::from_string(tok));
                    } catch (const ParseError& e) {
                        fail(reader.line_no(), std::string("invalid coefficient: ") + e.what());
                    }
                }
                UniPoly poly(std::move(coeffs));
                if (poly.is_zero()) {
                    fail(reader.line_no(), "part polynomial is zero");
                }
                if (!poly.coeff(0).is_zero()) {
                    fail(reader.line_no(), "part polynomial has a nonzero constant term");
                }
                if (static_cast<unsigned>(poly.degree()) > degree_bound) {
                    fail(reader.line_no(), "part degree exceeds degree_bound");
                }
                factor.add_part(v, poly);
            }
            factors.push_back(std::move(factor));
        }
        doc.poly = ProdSumUni(std::move(factors), degree_bound);
    } else {
        std::vector<MultiPoly> factors;
        factors.reserve(factor_count);
        for (unsigned fi = 0; fi < factor_count; ++fi) {
            line.advance("factor line");
            keyword("factor");
            const unsigned term_count = line.count("term count");
            line.done();
            MultiPoly factor;
            for (unsigned ti = 0; ti < term_count; ++ti) {
                line.advance("term line");
                keyword("term");
                const Rat coeff = line.rational("term coefficient");
                if (coeff.is_zero()) {
                    fail(reader.line_no(), "term coefficient is zero");
                }
                const unsigned pair_count = line.count("exponent pair count");
                Monomial mono;
                for (unsigned pi = 0; pi < pair_count; ++pi) {
                    const VarId v = check_var(line.count("term variable"));
                    const unsigned e = line.count("term exponent");
                    if (e == 0) {
                        fail(reader.line_no(), "exponent must be positive");
                    }
                    if (mono.exponent(v) > 0) {
                        fail(reader.line_no(), "duplicate variable in monomial");
                    }
                    mono = mono * Monomial::var(v, e);
                }
                line.done();
                if (mono.total_degree() > degree_bound) {
                    fail(reader.line_no(), "monomial degree exceeds degree_bound");
                }
                if (!factor.coeff(mono).is_zero()) {
                    fail(reader.line_no(), "duplicate monomial in factor");
                }
                factor.add_term(mono, coeff);
            }
            factors.push_back(std::move(factor));
        }
        doc.poly = ProdMulti(std::move(factors), degree_bound);
    }

    std::istringstream trailing;
    if (reader.next(trailing)) {
        fail(reader.line_no(), "unexpected content after document");
    }
    return doc;
}

} // namespace cubecalc
