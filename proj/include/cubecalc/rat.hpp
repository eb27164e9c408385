#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace cubecalc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, the universal coefficient type. Always held in
// lowest terms with a positive denominator; zero is 0/1.
class Rat {
public:
    Rat() = default;
    template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
    Rat(T n) : v_(n) {}
    Rat(BigInt n) : v_(std::move(n)) {}
    Rat(const BigInt& num, const BigInt& den);

    // Parses "num" or "num/den". Throws ParseError on malformed text or a
    // zero denominator.
    static Rat from_string(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_positive_integer() const { return is_integer() && v_ > 0; }
    int sign() const { return v_.sign(); }

    double to_double() const { return v_.convert_to<double>(); }

    // "num" when the denominator is 1, otherwise "num/den".
    std::string to_string() const;

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

} // namespace cubecalc
