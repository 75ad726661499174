#pragma once

// Seeded random structures for property tests and the fuzz command.

#include "foliate/assembly.hpp"

#include <cstdint>
#include <random>

namespace foliate {

using Rng = std::mt19937_64;

// Reeb-free when `allow_reeb` is false. Widths on a 1/16 grid.
AnnulusFoliation1D random_annulus(Rng& rng, int max_bands = 5, bool allow_reeb = true);
IntervalDynamics random_dynamics(Rng& rng, int max_segments = 5);

Block random_block(Rng& rng);

// Bounded or closed assemblies whose boundary is torus leaves, with no
// interior torus leaf, no Reeb annulus and a transverse orientation.
// `trivial_tori` forces at least one trivial solid torus.
Assembly random_hypothesis_assembly(Rng& rng, bool trivial_tori = false);

// Arbitrary connected assemblies of up to `max_blocks` blocks.
Assembly random_grammar_assembly(Rng& rng, int max_blocks = 6);

// Deterministic per-index seeding for sweeps.
inline Rng rng_for(std::uint64_t seed, std::uint64_t i) { return Rng(seed + i); }

}  // namespace foliate
