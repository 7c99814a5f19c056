#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "twoblocks/graph.hpp"

namespace twoblocks {

/// Uniform integer in [0, bound) by rejection; unlike
/// std::uniform_int_distribution the sequence is fixed across standard
/// libraries, so seeded fixtures are reproducible everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random strongly connected simple digraph: a Hamiltonian cycle through a
/// random permutation plus m - n distinct extra edges. Deterministic per seed.
/// Throws InputError unless 2 <= n and n <= m <= n(n-1).
DiGraph random_strong_graph(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace twoblocks
