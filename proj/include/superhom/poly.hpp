#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "superhom/gaussian_rational.hpp"

namespace superhom {

/// Multivariate polynomial over Q(i) in named parameters.
///
/// The variable list is kept sorted and minimal (no variable with zero
/// exponent everywhere), and terms are ordered by the fixed graded-lex
/// order on that list, so equal polynomials have identical representations
/// and identical serializations.
class Poly {
public:
    using Exponents = std::vector<unsigned>;

    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const {
            unsigned da = 0, db = 0;
            for (unsigned e : a) da += e;
            for (unsigned e : b) db += e;
            if (da != db)
                return da < db;
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
    };
    using TermMap = std::map<Exponents, GaussianRational, GrlexLess>;

    Poly() = default;
    Poly(long v) { *this = constant(GaussianRational(v)); } // NOLINT: implicit by design
    Poly(GaussianRational v) { *this = constant(std::move(v)); } // NOLINT

    static Poly constant(GaussianRational c) {
        Poly p;
        if (!c.is_zero())
            p.terms_[{}] = std::move(c);
        return p;
    }

    static Poly variable(const std::string& name, unsigned exp = 1) {
        Poly p;
        p.vars_ = {name};
        if (exp == 0)
            return constant(1);
        p.terms_[{exp}] = GaussianRational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }
    GaussianRational constant_value() const {
        if (is_zero())
            return GaussianRational(0);
        if (!is_constant())
            throw Error("polynomial is not constant");
        return terms_.begin()->second;
    }

    unsigned total_degree() const {
        if (terms_.empty())
            return 0;
        unsigned d = 0;
        for (unsigned e : terms_.rbegin()->first) d += e;
        return d;
    }

    /// Degree in one variable (0 if the variable does not occur).
    unsigned degree_in(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            return 0;
        size_t idx = static_cast<size_t>(it - vars_.begin());
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    /// True when the polynomial mentions exactly one variable.
    bool is_univariate() const { return vars_.size() == 1; }

    const GaussianRational& leading_coefficient() const {
        static const GaussianRational zero(0);
        return terms_.empty() ? zero : terms_.rbegin()->second;
    }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussianRational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
    friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact substitution of every variable; missing assignments throw
    /// UnboundParameterError. Extra assignments are ignored.
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& assignment) const;

    /// Substitutes a polynomial for one variable (used by the constraint solver).
    Poly substitute(const std::string& name, const Poly& value) const;

    /// Serialized as a sum of "coeff*var^e" terms, leading term first.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void prune_zeros();
    void compress_vars();
    static void align(const Poly& a, const Poly& b, std::vector<std::string>& vars,
                      std::vector<size_t>& map_a, std::vector<size_t>& map_b);
    Exponents remap(const Exponents& e, const std::vector<size_t>& map, size_t arity) const;

    std::vector<std::string> vars_; // sorted, unique, minimal
    TermMap terms_;                 // no zero coefficients
};

} // namespace superhom
