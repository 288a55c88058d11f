#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "superhom/rational.hpp"

namespace superhom {

/// Element of Q(i): re + im*zeta with zeta^2 = -1. zeta itself is the
/// Gaussian unit (0,1) -- the fixed primitive 4-th root of unity used by
/// the q-supertransposition.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {} // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational zeta() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero())
            throw MalformedScalarError("division by zero");
        Rational n = o.norm();
        GaussianRational c = o.conj();
        *this *= c;
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational r(1);
        r /= *this;
        return r;
    }

    /// "n/d+n/d*i" with zero parts omitted; plain "0" for zero.
    std::string str() const {
        if (is_zero())
            return "0";
        std::string s;
        if (!re_.is_zero())
            s = re_.str();
        if (!im_.is_zero()) {
            if (!s.empty() && im_.sign() > 0)
                s += '+';
            s += im_.str();
            s += "*i";
        }
        return s;
    }

    static GaussianRational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
        return os << g.str();
    }

private:
    Rational re_;
    Rational im_;
};

/// Canonical form (components in lowest terms, positive denominators).
/// Construction already canonicalizes, so this is the identity; it exists
/// as the named normalization point of the scalar layer and is idempotent.
inline GaussianRational normalize(const GaussianRational& s) { return s; }

inline GaussianRational GaussianRational::parse(const std::string& s) {
    if (s.empty())
        throw ParseError("empty scalar literal");
    // Split into at most two top-level summands at '+'/'-' (not the leading sign).
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*') {
            parts.push_back(s.substr(start, i - start));
            start = (s[i] == '+') ? i + 1 : i;
        }
    }
    parts.push_back(s.substr(start));
    Rational re(0), im(0);
    for (auto& p : parts) {
        if (p.empty())
            throw ParseError("bad scalar literal '" + s + "'");
        auto star = p.find("*i");
        if (star != std::string::npos) {
            if (star + 2 != p.size())
                throw ParseError("bad scalar literal '" + s + "'");
            im += Rational::parse(p.substr(0, star));
        } else if (p == "i") {
            im += Rational(1);
        } else if (p == "-i") {
            im += Rational(-1);
        } else {
            re += Rational::parse(p);
        }
    }
    return GaussianRational(re, im);
}

} // namespace superhom
