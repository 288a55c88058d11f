#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superhom/constraint_set.hpp"
#include "superhom/endo_family.hpp"

namespace superhom {

/// Hom-Jacobi residual of a parametrized even map on homogeneous vectors:
///   (-1)^{|x||z|}[s(x),[y,z]] + (-1)^{|y||x|}[s(y),[z,x]] + (-1)^{|z||y|}[s(z),[x,y]]
/// Entries are polynomials in the family parameters.
std::vector<Poly> hom_jacobi_residual(const SuperAlgebra& g, const MatP& sigma, const Vector& x,
                                      const Vector& y, const Vector& z);

inline std::vector<Poly> hom_jacobi_residual(const EndoFamily& f, const Vector& x,
                                             const Vector& y, const Vector& z) {
    return hom_jacobi_residual(*f.algebra, f.matrix, x, y, z);
}

struct HomSpaceOptions {
    int threads = 0; // 0: use SUPERHOM_THREADS or 1
};

struct HomSpaceResult {
    int unknowns = 0;      // parity-preserving matrix entries
    long equations = 0;    // rows fed to the eliminator
    bool early_exit = false;
    std::vector<LinearMap> basis; // canonical basis of the solution space
    int dim() const { return static_cast<int>(basis.size()); }
    /// True when the space is exactly the scalar line through the identity.
    bool scalar_only() const;
};

/// The linear space of ALL even maps satisfying the graded Hom-Jacobi
/// identity on every basis triple. Always contains the identity (when the
/// algebra satisfies Jacobi).
HomSpaceResult hom_jacobi_space(const SuperAlgebra& g, const HomSpaceOptions& opts = {});

/// Residual + multiplicativity constraints of a parametrized family over
/// all ordered triple representatives (i <= j <= k) and pairs (i <= j),
/// plus the family's side relations.
ConstraintSet family_constraints(const SuperAlgebra& g, const EndoFamily& fam,
                                 bool include_multiplicativity = true);

/// Constraints contributed by one specific (ordered) triple.
std::vector<std::string> named_triple_constraints(const SuperAlgebra& g, const EndoFamily& fam,
                                                  const Vector& x, const Vector& y,
                                                  const Vector& z);

enum class Verdict { Trivial, Nontrivial, Undecided };
std::string verdict_str(Verdict v);

struct NamedTriple {
    std::string label;
    std::vector<std::string> constraints;
};

struct FamilyResult {
    std::string name;
    std::vector<std::string> constraints; // normalized, deduplicated
    std::vector<std::string> solutions;   // rendered solution branches
    std::string status; // identity_only | excluded | nonidentity_solutions | undecided | valid
    std::vector<NamedTriple> named_triples;
};

struct HomReport {
    std::string algebra;
    int dim = 0;
    int hom_space_dim = 0;
    bool hom_space_scalar_only = false;
    std::vector<LinearMap> hom_basis;
    std::vector<FamilyResult> families;
    std::vector<std::string> findings;
    Verdict verdict = Verdict::Undecided;
    uint64_t seed = 0;
    int exit_code() const;
};

struct ReportOptions {
    uint64_t seed = 0;
    int max_dim = 80;
    int threads = 0;
};

/// Full Main-Theorem reproduction: axioms, hom-space tier, applicable
/// symbolic family analyses, verdict.
HomReport reproduce_main_theorem(const BuiltAlgebra& built, const ReportOptions& opts = {});

/// Hom-space + multiplicativity verdict for a bare algebra (no family tier);
/// used for algebras loaded from structure-constant files.
HomReport reproduce_for_algebra(const AlgebraPtr& g, const ReportOptions& opts = {});

} // namespace superhom
