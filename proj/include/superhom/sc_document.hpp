#pragma once

#include <string>

#include "superhom/superalgebra.hpp"

namespace superhom {

/// Canonical JSON structure-constant document: sorted keys, scalars in the
/// fixed string form, bracket records sorted by (i, j, k), i <= j only,
/// 0-based indices in the file.
std::string save_sc_string(const SuperAlgebra& g);
void save_sc(const SuperAlgebra& g, const std::string& path);

struct LoadedAlgebra {
    AlgebraPtr algebra;
    AxiomReport axioms; // loaded tables may violate axioms; flagged, not fatal
};

LoadedAlgebra load_sc_string(const std::string& text);
LoadedAlgebra load_sc(const std::string& path);

} // namespace superhom
