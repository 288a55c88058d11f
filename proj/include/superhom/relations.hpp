#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "superhom/endo_family.hpp"

namespace superhom {

struct RelationResult {
    std::string id;          // "2.13", "3.8a", ...
    std::string description; // human-readable statement
    int instances = 0;
    bool ok = true;
    std::string failure;
};

/// Deterministic random unimodular matrix: a product of up to `factors`
/// elementary transvections I + c E_{pq} with small integer c.
MatG random_unimodular(int size, std::mt19937_64& rng, int factors = 6);

/// Nonzero random scalar with small numerator/denominator.
GaussianRational random_nonzero_scalar(std::mt19937_64& rng);

/// Relation ids applicable to a family ("2.3", ..., "3.9"); gl(m|n) carries
/// the generic ones, gl(n|n) adds the pi relations, gl(2|2) the rho ones,
/// Qt the sigma_q ones.
std::vector<std::string> applicable_relations(const FamilySpec& spec);

/// Runs one relation `instances` times with seeded randomness.
RelationResult verify_relation(const BuiltAlgebra& built, const std::string& id, uint64_t seed,
                               int instances = 5);

std::vector<RelationResult> relation_suite(const BuiltAlgebra& built, uint64_t seed,
                                           int instances = 5);

} // namespace superhom
