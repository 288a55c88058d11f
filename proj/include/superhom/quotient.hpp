#pragma once

#include <string>
#include <vector>

#include "superhom/echelon.hpp"

namespace superhom {

/// Quotient of a graded space by the span of parity-homogeneous vectors.
/// The quotient basis is the canonical complement: ambient coordinates that
/// are not pivotal for the echelonized ideal.
struct Quotient {
    SpacePtr ambient;
    std::vector<Vector> ideal_basis; // echelonized
    SpacePtr quotient_space;
    LinearMap projection; // ambient -> quotient
    LinearMap section;    // quotient -> ambient (coset representatives)
};

Quotient quotient_construct(const SpacePtr& ambient, const std::vector<Vector>& ideal);

} // namespace superhom
