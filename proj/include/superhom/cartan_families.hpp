#pragma once

#include <vector>

#include "superhom/exterior.hpp"
#include "superhom/matrix_families.hpp"

namespace superhom {

/// Superderivation sum_j f_j d/dxi_j of Lambda(n).
struct SuperDerivation {
    int n = 0;
    std::vector<ExteriorElement> coefficients; // f_1..f_n

    SuperDerivation() = default;
    explicit SuperDerivation(int n_) : n(n_), coefficients(n_, ExteriorElement(n_)) {}

    static SuperDerivation partial_op(int n, int j) {
        SuperDerivation d(n);
        d.coefficients[j - 1] = ExteriorElement::one(n);
        return d;
    }
    /// f * d/dxi_j
    static SuperDerivation single(int n, const ExteriorElement& f, int j) {
        SuperDerivation d(n);
        d.coefficients[j - 1] = f;
        return d;
    }

    bool is_zero() const {
        for (const auto& f : coefficients)
            if (!f.is_zero())
                return false;
        return true;
    }

    /// Parity: all coefficients must share a degree parity p; the derivation
    /// has parity p + 1 (deg d/dxi_j = -1).
    std::optional<Parity> homogeneous_parity() const;

    /// Principal degree when every monomial coefficient has one exterior
    /// degree d; the derivation then has degree d - 1.
    std::optional<int> principal_degree() const;

    /// Action on Lambda(n): g -> sum_j f_j ^ d_j(g).
    ExteriorElement apply(const ExteriorElement& g) const;

    SuperDerivation& operator+=(const SuperDerivation& o);
    friend SuperDerivation operator*(const GaussianRational& c, SuperDerivation d) {
        for (auto& f : d.coefficients) f = c * f;
        return d;
    }
    friend bool operator==(const SuperDerivation& a, const SuperDerivation& b) {
        return a.n == b.n && a.coefficients == b.coefficients;
    }

    std::string str() const;
};

/// D1 o D2 - (-1)^{|D1||D2|} D2 o D1, recovered in sum f_j d_j form by
/// applying the composite to each generator.
SuperDerivation derivation_bracket(const SuperDerivation& d1, const SuperDerivation& d2);

/// sum_j d_j(f_j).
ExteriorElement divergence(const SuperDerivation& d);

/// Cartan-family data: the basis as honest superderivations plus the
/// W-coordinate bookkeeping used to express brackets.
struct CartanRealization {
    int n = 0;
    FamilySpec::Family family = FamilySpec::Family::W;
    std::vector<SuperDerivation> basis;
    std::vector<std::pair<uint32_t, int>> wcoords; // W(n) coordinate order: (mask, j)
    std::shared_ptr<BasisExpresser> express;       // basis rows over W coordinates

    SparseEntries to_w_row(const SuperDerivation& d) const;
};

/// Builds W(n) (n>=3), S(n) (n>=3), St(n) (n>=4 even), H(n) (n>=4) with the
/// principal gradation attached (St carries the degree decomposition but is
/// not Z-graded).
BuiltAlgebra build_cartan(const FamilySpec& spec);

struct TransitivityReport {
    bool ok = false;
    int kernel_dim = 0;
    int g_minus1_dim = 0;
    std::string str() const;
};

/// Checks {a : [a, g_{-1}] = 0} == g_{-1} exactly (W, S, H only).
TransitivityReport check_transitivity(const SuperAlgebra& g);

/// Dispatches to build_classical or build_cartan.
inline BuiltAlgebra build_family(const FamilySpec& spec) {
    return spec.is_cartan() ? build_cartan(spec) : build_classical(spec);
}
inline BuiltAlgebra build_family(const std::string& cli_spec) {
    return build_family(FamilySpec::parse(cli_spec));
}

} // namespace superhom
