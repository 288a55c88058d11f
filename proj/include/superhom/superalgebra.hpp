#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "superhom/echelon.hpp"
#include "superhom/super_space.hpp"

namespace superhom {

/// Sparse bracket table over a SuperSpace. Only pairs i <= j are stored;
/// i > j is derived from graded skew-symmetry, so (1.2)-style symmetry
/// holds by construction. Diagonal entries are kept for odd basis vectors
/// only (even diagonals vanish identically).
class StructureConstants {
public:
    explicit StructureConstants(SpacePtr space) : space_(std::move(space)) {}

    const SpacePtr& space() const { return space_; }

    void set(int i, int j, SparseEntries value);
    /// Table lookup with the sign rule applied for i > j.
    SparseEntries bracket_basis(int i, int j) const;
    /// Stored (i <= j) entries in (i, j) order.
    const std::map<std::pair<int, int>, SparseEntries>& table() const { return table_; }

private:
    SpacePtr space_;
    std::map<std::pair<int, int>, SparseEntries> table_;
};

struct AxiomViolation {
    std::string kind; // "homogeneity" or "jacobi"
    int i = -1, j = -1, k = -1;
    std::string detail;
};

struct AxiomReport {
    bool ok = true;
    long triples_checked = 0;
    std::vector<AxiomViolation> violations; // capped
    std::string str() const;
};

struct GradingIssue {
    int i = -1, j = -1;
    std::string detail;
};

struct GradingReport {
    bool has_degrees = false;
    bool ok = false;
    std::map<int, int> degree_dims; // degree -> dimension
    std::vector<GradingIssue> issues;
    std::string str() const;
};

/// Structure-constant Lie superalgebra. Immutable after construction.
class SuperAlgebra {
public:
    SuperAlgebra(std::string name, StructureConstants sc, bool z_graded)
        : name_(std::move(name)), sc_(std::move(sc)), z_graded_(z_graded) {}

    const std::string& name() const { return name_; }
    const SpacePtr& space() const { return sc_.space(); }
    int dim() const { return space()->dim; }
    const StructureConstants& sc() const { return sc_; }

    /// True when the z-degree array is an actual algebra grading (S~ carries
    /// degrees as a vector-space decomposition only).
    bool z_graded() const { return z_graded_; }

    bool jacobi_verified() const { return jacobi_verified_; }
    void mark_jacobi_verified(bool ok) const { jacobi_verified_ = ok; }

    SparseEntries bracket_basis(int i, int j) const { return sc_.bracket_basis(i, j); }
    Vector bracket(const Vector& x, const Vector& y) const;

private:
    std::string name_;
    StructureConstants sc_;
    bool z_graded_;
    mutable bool jacobi_verified_ = false;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

/// Checks homogeneity of all table entries and the graded Jacobi identity
/// (sigma = id) over ordered basis triples i <= j <= k; other triples follow
/// by the graded symmetry of the identity.
AxiomReport verify_axioms(const SuperAlgebra& g, size_t max_violations = 8);

/// Checks [g_i, g_j] in g_{i+j} and parity == degree mod 2.
GradingReport verify_grading(const SuperAlgebra& g, size_t max_issues = 8);

/// The map y -> [x, y] in the algebra basis.
LinearMap adjoint_matrix(const SuperAlgebra& g, const Vector& x);

struct Subspace {
    std::vector<Vector> basis; // echelonized
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vector& v) const;
};

/// Smallest subspace containing the seeds and closed under bracketing with
/// every basis element, computed by saturation.
Subspace ideal_generated(const SuperAlgebra& g, const std::vector<Vector>& seeds);

/// Saturation under the action of a fixed set of elements only (used for
/// the g0-module irreducibility checks).
Subspace submodule_generated(const SuperAlgebra& g, const std::vector<Vector>& seeds,
                             const std::vector<Vector>& actors);

/// Hom-Jacobi residual of a concrete even map on one basis triple:
///   (-1)^{|x||z|}[s(x),[y,z]] + (-1)^{|y||x|}[s(y),[z,x]] + (-1)^{|z||y|}[s(z),[x,y]]
Vector hom_jacobi_residual_basis(const SuperAlgebra& g, const LinearMap& sigma, int i, int j,
                                 int k);

} // namespace superhom
