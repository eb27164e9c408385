#include "cubecalc/rat.hpp"

#include "cubecalc/errors.hpp"

#include <ostream>

namespace cubecalc {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw Error("Rat: zero denominator");
    }
    if (den < 0) {
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    } else {
        v_ = boost::multiprecision::cpp_rational(num, den);
    }
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw Error("Rat: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rat Rat::from_string(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) {
            throw ParseError("Rat: empty integer");
        }
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            i = 1;
        }
        if (i == s.size()) {
            throw ParseError("Rat: sign without digits in \"" + std::string(s) + "\"");
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw ParseError("Rat: invalid integer \"" + std::string(s) + "\"");
            }
        }
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text), BigInt(1));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("Rat: zero denominator in \"" + std::string(text) + "\"");
    }
    return Rat(num, den);
}

std::string Rat::to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += "/";
        s += denominator().str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

} // namespace cubecalc
