#pragma once

#include "cubecalc/rat.hpp"
#include "cubecalc/unipoly.hpp"

#include <array>
#include <string>

namespace cubecalc {

// The literal-encoding triple. A usable set satisfies seven unit-interval
// integral identities: the integrals of g1, g2, f, and g1*g2 are positive
// integers, and the integrals of g1*f, g2*f, and g1*g2*f are zero.
struct GadgetSet {
    UniPoly g1;
    UniPoly g2;
    UniPoly f;
};

// g1 = 30x^2 - 36x + 9, g2 = -6x + 4, f = 2x.
GadgetSet default_gadgets();

struct GadgetCheck {
    std::string name;
    Rat value;
    bool pass = false;
};

struct GadgetReport {
    std::array<GadgetCheck, 7> checks;
    bool all_pass() const;
    const GadgetCheck& find(const std::string& name) const;
};

// Evaluates the seven integrals exactly and reports each identity.
GadgetReport verify_gadgets(const GadgetSet& g);

} // namespace cubecalc
