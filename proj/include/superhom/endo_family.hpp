#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superhom/cartan_families.hpp"
#include "superhom/poly.hpp"

namespace superhom {

using Assignment = std::map<std::string, GaussianRational>;

/// Parametrized even linear map on a SuperAlgebra: matrix entries are
/// polynomials in the parameters, constrained by side relations such as
/// lambda*mu - 1 or a*d - b*c - 1.
struct EndoFamily {
    AlgebraPtr algebra;
    std::vector<std::string> parameters;
    std::vector<Poly> side_relations;
    MatP matrix; // column j = image of basis j
    std::string label;

    bool is_constant() const { return parameters.empty(); }

    bool is_even() const {
        const auto& par = algebra->space()->parity;
        for (int j = 0; j < matrix.cols(); ++j)
            for (int i = 0; i < matrix.rows(); ++i)
                if (!matrix(i, j).is_zero() && par[i] != par[j])
                    return false;
        return true;
    }

    /// Throws InvalidAssignmentError unless every side relation vanishes.
    void check_assignment(const Assignment& a) const;

    /// Evaluates the family at a valid assignment.
    LinearMap at(const Assignment& a) const;

    /// Constant families convert directly.
    LinearMap as_linear_map() const;

    static EndoFamily from_linear_map(const AlgebraPtr& g, const LinearMap& f,
                                      std::string label);
    static EndoFamily identity(const AlgebraPtr& g);
};

/// f after g (matrix product); side relations concatenate. Shared parameter
/// names must carry identical side-relation sets.
EndoFamily compose(const EndoFamily& f, const EndoFamily& g);

EndoFamily power(const EndoFamily& f, int k);

bool endo_equal(const EndoFamily& f, const EndoFamily& g);

struct HomomorphismReport {
    bool ok = true;
    int i = -1, j = -1;    // first violating basis pair
    std::string lhs, rhs;  // sigma[b_i,b_j] vs [sigma b_i, sigma b_j]
    std::string str() const;
};

/// Checks sigma[b_i, b_j] = [sigma b_i, sigma b_j] over all basis pairs at
/// a concrete assignment.
HomomorphismReport is_homomorphism(const EndoFamily& f, const Assignment& a = {});

/// --- the paper's generators -------------------------------------------

/// Ad(X, Y): block conjugation by diag(X, Y); X, Y concrete with
/// det X = det Y = 1 (require_unimodular relaxes this for the O_m variant).
EndoFamily generator_ad(const BuiltAlgebra& built, const MatG& X, const MatG& Y,
                        bool require_unimodular = true);

/// j(lambda) with symbolic lambda (inverse represented by mu, side relation
/// lambda*mu - 1) or at a concrete nonzero value.
EndoFamily generator_j(const BuiltAlgebra& built, const std::string& lambda_name = "lambda");
EndoFamily generator_j_const(const BuiltAlgebra& built, const GaussianRational& value);

/// Supertransposition (order 4).
EndoFamily generator_tau(const BuiltAlgebra& built);

/// Block swap on gl(n|n)-type families.
EndoFamily generator_pi(const BuiltAlgebra& built);

/// rho(a,b,c,d) on gl(2|2)/sl(2|2)/psl(2|2), symbolic with ad - bc = 1,
/// or at a concrete SL_2 matrix.
EndoFamily generator_rho(const BuiltAlgebra& built);
EndoFamily generator_rho_const(const BuiltAlgebra& built, const MatG& sl2);

/// q-supertransposition on Qt(n-1) / Q(n-1); zeta = (0,1).
EndoFamily generator_sigma_q(const BuiltAlgebra& built);

/// The Cartan-case ansatz of the paper's section-4 arguments: the g_{-1}
/// block carries a full symbolic matrix a_{ki} (sigma(d_i) = sum_k a_{ki} d_k),
/// identity on degrees >= 0.
EndoFamily generator_gminus1_ansatz(const BuiltAlgebra& built);

/// diag(-1, 1, ..., 1): the chosen det = -1 orthogonal reflection.
MatG osp_gamma(int m);

/// Restriction of a cover family to the quotient; verifies the ideal is
/// preserved, then forms projection . f . section.
EndoFamily descend_to_quotient(const EndoFamily& f, const Quotient& q, const AlgebraPtr& target);

/// Parses CLI generator syntax: "j:lambda", "j=5", "tau", "pi",
/// "rho:a,b,c,d", "sigma_q", "diag", "Ad:<matrix-file>".
EndoFamily generator_from_cli(const BuiltAlgebra& built, const std::string& text);

} // namespace superhom
