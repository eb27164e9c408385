#include "cubecalc/mc.hpp"

#include "cubecalc/errors.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace cubecalc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index));
}

double u53(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// The document translated to doubles once, so sampling cost stays linear in
// the document size.
struct CompiledDoc {
    struct SumPart {
        std::uint32_t var;
        std::vector<double> coeffs;  // degree >= 1 only; constant folded out
    };
    struct SumFactorEval {
        double constant;
        std::vector<SumPart> parts;
    };
    struct TermEval {
        double coeff;
        std::vector<std::pair<std::uint32_t, unsigned>> powers;
    };
    std::vector<SumFactorEval> sum_factors;
    std::vector<std::vector<TermEval>> multi_factors;
    bool prodsum = false;

    double eval(const std::vector<double>& point) const {
        double product = 1.0;
        if (prodsum) {
            for (const auto& f : sum_factors) {
                double s = f.constant;
                for (const auto& part : f.parts) {
                    const double x = point[part.var];
                    double acc = 0.0;
                    for (auto it = part.coeffs.rbegin(); it != part.coeffs.rend(); ++it) {
                        acc = acc * x + *it;
                    }
                    s += acc * x;  // coefficients start at degree 1
                }
                product *= s;
            }
        } else {
            for (const auto& f : multi_factors) {
                double s = 0.0;
                for (const auto& term : f) {
                    double t = term.coeff;
                    for (const auto& [v, e] : term.powers) {
                        for (unsigned i = 0; i < e; ++i) {
                            t *= point[v];
                        }
                    }
                    s += t;
                }
                product *= s;
            }
        }
        return product;
    }
};

CompiledDoc compile(const PolyDocument& doc) {
    CompiledDoc out;
    out.prodsum = doc.is_prodsum();
    if (out.prodsum) {
        for (const SumFactor& f : doc.prodsum().factors()) {
            CompiledDoc::SumFactorEval fe;
            fe.constant = f.constant().to_double();
            for (const auto& [v, poly] : f.parts()) {
                CompiledDoc::SumPart part;
                part.var = v.index;
                for (std::size_t i = 1; i < poly.coeffs().size(); ++i) {
                    part.coeffs.push_back(poly.coeffs()[i].to_double());
                }
                fe.parts.push_back(std::move(part));
            }
            out.sum_factors.push_back(std::move(fe));
        }
    } else {
        for (const MultiPoly& f : doc.prodmulti().factors()) {
            std::vector<CompiledDoc::TermEval> terms;
            for (const auto& [m, c] : f.terms()) {
                CompiledDoc::TermEval te;
                te.coeff = c.to_double();
                for (const auto& [v, e] : m.exponents()) {
                    te.powers.emplace_back(v.index, e);
                }
                terms.push_back(std::move(te));
            }
            out.multi_factors.push_back(std::move(terms));
        }
    }
    return out;
}

} // namespace

McEstimate mc_estimate(const PolyDocument& doc, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw PreconditionError("mc_estimate: samples must be >= 1");
    }
    const CompiledDoc compiled = compile(doc);
    std::vector<double> point(doc.num_vars, 0.0);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng(stream_key(seed, i));
        for (unsigned v = 0; v < doc.num_vars; ++v) {
            point[v] = u53(rng());
        }
        const double fx = compiled.eval(point);
        sum += fx;
        sum_sq += fx * fx;
    }

    McEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.mean = sum / static_cast<double>(samples);
    if (samples > 1) {
        const double n = static_cast<double>(samples);
        const double variance = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(variance / n);
    }
    return est;
}

} // namespace cubecalc
