#include "cubecalc/limits.hpp"

#include <cstdlib>
#include <string>

namespace cubecalc {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) {
        return fallback;
    }
    return static_cast<std::size_t>(parsed);
}

} // namespace

Limits Limits::defaults() {
    static const Limits cached = [] {
        Limits l;
        l.term_cap = env_or("CUBECALC_TERM_CAP", l.term_cap);
        l.dp_factor_cap = env_or("CUBECALC_DP_FACTOR_CAP", l.dp_factor_cap);
        l.tt_var_cap = env_or("CUBECALC_TT_VAR_CAP", l.tt_var_cap);
        return l;
    }();
    return cached;
}

} // namespace cubecalc
