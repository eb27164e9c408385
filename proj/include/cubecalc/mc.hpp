#pragma once

#include "cubecalc/polydoc.hpp"

#include <cstdint>
#include <string>

namespace cubecalc {

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    // Documented generator: per-sample mt19937_64 keyed by splitmix64 over
    // (seed, sample index), uniforms from the top 53 bits. Bit-identical for
    // a given (seed, samples) pair regardless of evaluation order.
    static constexpr const char* algorithm = "mt19937_64/splitmix64-stream/u53";
};

// Mean of the document's polynomial over uniform samples from the unit cube,
// evaluated in factored form, with the sample standard error.
McEstimate mc_estimate(const PolyDocument& doc, std::size_t samples, std::uint64_t seed);

} // namespace cubecalc
