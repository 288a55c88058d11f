#pragma once

#include <string>

#include "superhom/homsolver.hpp"

namespace superhom {

inline constexpr const char* kToolVersion = "superhom 0.1.0";

/// Stable-key JSON document for a HomReport: keys sorted, deterministic for
/// a fixed seed.
std::string report_to_json(const HomReport& rep);

/// Human-readable rendering of the same content.
std::string report_to_text(const HomReport& rep);

} // namespace superhom
