#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <ostream>
#include <string>

#include "superhom/errors.hpp"

namespace superhom {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (cpp_rational keeps that canonical form for us).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {} // NOLINT: implicit by design, scalars act like numbers
    Rational(BigInt v) : q_(std::move(v)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw MalformedScalarError("rational with zero denominator");
        // cpp_rational wants a positive denominator
        q_ = (den < 0) ? BigRat(-num, -den) : BigRat(num, den);
    }
    explicit Rational(BigRat q) : q_(std::move(q)) {}

    BigInt num() const { return boost::multiprecision::numerator(q_); }
    BigInt den() const { return boost::multiprecision::denominator(q_); }
    const BigRat& raw() const { return q_; }

    bool is_zero() const { return q_.is_zero(); }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return q_.sign(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw MalformedScalarError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero())
            throw MalformedScalarError("inverse of zero");
        return Rational(1 / q_);
    }

    /// Serialized form: "n" for integers, otherwise "n/d".
    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) {
            s += '/';
            s += den().str();
        }
        return s;
    }

    /// Parses "n" or "n/d"; throws ParseError on malformed input.
    static Rational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    BigRat q_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw MalformedScalarError("rational with zero denominator");
        return Rational(num, den);
    } catch (const std::exception& e) {
        if (dynamic_cast<const Error*>(&e))
            throw;
        throw ParseError("bad rational literal '" + s + "'");
    }
}

} // namespace superhom

template <>
struct std::hash<superhom::Rational> {
    size_t operator()(const superhom::Rational& r) const {
        return std::hash<std::string>()(r.str());
    }
};
