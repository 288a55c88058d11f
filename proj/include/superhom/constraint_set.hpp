#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superhom/poly.hpp"

namespace superhom {

/// Canonical form of a constraint: denominators cleared, Z[i]-content
/// removed, and the graded-lex-leading coefficient unit-normalized to have
/// positive real part (positive imaginary part when the real part is zero).
Poly normalize_constraint(const Poly& p);

/// Polynomial equations in family parameters. `equations` must vanish;
/// `side_relations` are assumed to vanish (e.g. lambda*mu - 1) and double
/// as invertibility guards in the solver.
struct ConstraintSet {
    std::vector<std::string> parameters;
    std::vector<Poly> equations;      // normalized, deduplicated, no zeros
    std::vector<Poly> side_relations; // normalized

    /// Normalizes, drops zeros, deduplicates.
    void add_equation(const Poly& p);
    void add_side_relation(const Poly& p);

    std::vector<std::string> equation_strings() const;
};

/// One solution branch: closed-form values for the solved parameters
/// (polynomials in the free variables) plus the list of free variables.
struct SolutionBranch {
    std::map<std::string, Poly> assignment;
    std::vector<std::string> free_vars;

    bool is_identity_like(const std::map<std::string, GaussianRational>& identity_values) const;
    std::string str() const;
};

struct SolveResult {
    enum class Status { NoSolution, Finite, Parametrized, Undecided };
    Status status = Status::NoSolution;
    std::vector<SolutionBranch> solutions;
    std::vector<Poly> residual_generators; // for Undecided branches
    std::string str() const;
};

/// Applies, to fixpoint: linear-equation elimination by substitution,
/// univariate factorization over Q(i) (square-free + rational-root search),
/// and side-relation substitution, branching over the roots. Anything
/// harder is reported as Undecided with its residual generators.
SolveResult solve_constraints(const ConstraintSet& cs);

/// All Q(i) roots of a univariate polynomial, when it splits completely.
/// nullopt if a non-linear factor remains (or the search bound is exceeded).
std::optional<std::vector<GaussianRational>> univariate_roots(const Poly& p);

} // namespace superhom
