#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "chow/errors.hpp"

namespace chow {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator. The canonical zero is 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long value) : v_(value) {}  // NOLINT: implicit by design
    explicit Rational(BigInt value) : v_(std::move(value)) {}

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = Backend(std::move(num), std::move(den));  // canonicalizes
    }

    /// Parses "p" or "p/q" with optional leading '-'.
    static Rational from_string(std::string_view text) {
        const std::string s(text);
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            const std::string num = s.substr(0, slash);
            const std::string den = s.substr(slash + 1);
            if (num.empty() || den.empty() || den[0] == '-')
                throw std::runtime_error("bad fraction");
            return Rational(BigInt(num), BigInt(den));
        } catch (const std::exception&) {
            throw InputError("not a rational number: '" + s + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    /// Serializes as "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string out = numerator().str();
        const BigInt den = denominator();
        if (den != 1) {
            out += '/';
            out += den.str();
        }
        return out;
    }

    /// Largest integer <= *this.
    BigInt floor() const {
        const BigInt num = numerator();
        const BigInt den = denominator();
        BigInt q = num / den;  // truncates toward zero
        if (num < 0 && q * den != num) --q;
        return q;
    }

    /// Smallest integer >= *this.
    BigInt ceil() const { return -(-*this).floor(); }

    Rational pow(unsigned exponent) const {
        Rational base = *this;
        Rational result(1);
        while (exponent != 0) {
            if (exponent & 1u) result *= base;
            exponent >>= 1u;
            if (exponent != 0) base *= base;
        }
        return result;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

inline Rational factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return Rational(num, den);
}

}  // namespace chow
