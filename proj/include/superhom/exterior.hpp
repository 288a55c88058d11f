#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superhom/gaussian_rational.hpp"
#include "superhom/errors.hpp"
#include "superhom/super_space.hpp"

namespace superhom {

/// Element of the exterior algebra Lambda(n) on xi_1..xi_n. A bitmask
/// encodes the sorted monomial xi_{i1}...xi_{ik} (bit i-1 for xi_i); all
/// signs come from inversion counts against that sorted order.
struct ExteriorElement {
    int n = 0;
    std::map<uint32_t, GaussianRational> terms; // no zero coefficients

    ExteriorElement() = default;
    explicit ExteriorElement(int n_) : n(n_) {
        if (n_ < 0 || n_ > 30)
            throw Error("exterior algebra rank out of range");
    }

    static ExteriorElement one(int n) {
        ExteriorElement f(n);
        f.terms[0u] = GaussianRational(1);
        return f;
    }
    static ExteriorElement xi(int n, int i) {
        ExteriorElement f(n);
        if (i < 1 || i > n)
            throw Error("xi index out of range");
        f.terms[1u << (i - 1)] = GaussianRational(1);
        return f;
    }
    static ExteriorElement monomial(int n, uint32_t mask, GaussianRational c = GaussianRational(1)) {
        ExteriorElement f(n);
        if (!c.is_zero())
            f.terms[mask] = std::move(c);
        return f;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(uint32_t mask, const GaussianRational& c) {
        if (c.is_zero())
            return;
        auto it = terms.find(mask);
        if (it == terms.end()) {
            terms.emplace(mask, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    ExteriorElement& operator+=(const ExteriorElement& o) {
        require_same_rank(o);
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator*(const GaussianRational& c, ExteriorElement a) {
        if (c.is_zero())
            a.terms.clear();
        else
            for (auto& [m, v] : a.terms) v *= c;
        return a;
    }
    friend ExteriorElement operator-(const ExteriorElement& a) {
        return GaussianRational(-1) * a;
    }
    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.n == b.n && a.terms == b.terms;
    }

    /// Exterior degree when all monomials share it.
    std::optional<int> homogeneous_degree() const {
        if (terms.empty())
            return std::nullopt;
        int d = std::popcount(terms.begin()->first);
        for (const auto& [m, c] : terms)
            if (std::popcount(m) != d)
                return std::nullopt;
        return d;
    }
    /// Degree parity when all monomials share it (weaker than homogeneity).
    std::optional<Parity> degree_parity() const {
        if (terms.empty())
            return std::nullopt;
        int p = std::popcount(terms.begin()->first) & 1;
        for (const auto& [m, c] : terms)
            if ((std::popcount(m) & 1) != p)
                return std::nullopt;
        return p ? Parity::Odd : Parity::Even;
    }

    void require_same_rank(const ExteriorElement& o) const {
        if (n != o.n)
            throw SpaceMismatchError("exterior elements over different ranks");
    }

    std::string str() const;
};

/// Associative product with xi_i xi_j = -xi_j xi_i and xi_i^2 = 0.
ExteriorElement wedge(const ExteriorElement& f, const ExteriorElement& g);

/// Left partial derivative d/dxi_j:
///   d_j(xi_{i1}...xi_{ik}) = sum_t (-1)^{t-1} delta_{j,i_t} (monomial minus xi_{i_t}).
ExteriorElement partial(const ExteriorElement& f, int j);

std::string monomial_str(uint32_t mask);

} // namespace superhom
