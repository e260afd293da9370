#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hyperq/hypergraph.hpp"

namespace hyperq {

enum class Family {
    complete_graph,   // n
    cycle,            // n
    fano,
    affine_plane,     // p
    projective_plane, // p
    steiner_triple,   // n
    random_linear,    // n m k seed
    random,           // n m size-range seed
};

/**
 * A generator request. Text form is the family name followed by its
 * parameters, separated by spaces or ':' (e.g. "affine-plane 3",
 * "random-linear:12:10:3:7", "random 8 6 2..4 1"). A trailing seed may
 * be omitted for the random families; the caller's default seed is used.
 */
struct FamilySpec {
    Family family = Family::fano;
    std::uint64_t n = 0; // points, or order p for planes
    std::uint64_t m = 0;
    std::uint64_t k = 0;
    std::uint64_t size_min = 0;
    std::uint64_t size_max = 0;
    std::uint64_t seed = 0;

    static FamilySpec parse(std::string_view text, std::uint64_t default_seed = 0);
    std::string to_string() const;

    /// GenerationError describing the first violated parameter constraint.
    void validate() const;
};

/// Deterministic in the FamilySpec, seed included.
Hypergraph generate(const FamilySpec& spec);

bool is_prime(std::uint64_t p);

} // namespace hyperq
