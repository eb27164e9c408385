#include "cubecalc/gadgets.hpp"

#include "cubecalc/errors.hpp"

namespace cubecalc {

GadgetSet default_gadgets() {
    GadgetSet g;
    g.g1 = UniPoly{Rat(9), Rat(-36), Rat(30)};
    g.g2 = UniPoly{Rat(4), Rat(-6)};
    g.f = UniPoly{Rat(0), Rat(2)};
    return g;
}

bool GadgetReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

const GadgetCheck& GadgetReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw Error("GadgetReport: no check named " + name);
}

GadgetReport verify_gadgets(const GadgetSet& g) {
    const Rat i_g1 = integrate01(g.g1);
    const Rat i_g2 = integrate01(g.g2);
    const Rat i_f = integrate01(g.f);
    const Rat i_g1g2 = integrate01(g.g1 * g.g2);
    const Rat i_g1f = integrate01(g.g1 * g.f);
    const Rat i_g2f = integrate01(g.g2 * g.f);
    const Rat i_g1g2f = integrate01(g.g1 * g.g2 * g.f);

    GadgetReport report;
    report.checks[0] = {"int_g1", i_g1, i_g1.is_positive_integer()};
    report.checks[1] = {"int_g2", i_g2, i_g2.is_positive_integer()};
    report.checks[2] = {"int_f", i_f, i_f.is_positive_integer()};
    report.checks[3] = {"int_g1_g2", i_g1g2, i_g1g2.is_positive_integer()};
    report.checks[4] = {"int_g1_f", i_g1f, i_g1f.is_zero()};
    report.checks[5] = {"int_g2_f", i_g2f, i_g2f.is_zero()};
    report.checks[6] = {"int_g1_g2_f", i_g1g2f, i_g1g2f.is_zero()};
    return report;
}

} // namespace cubecalc
