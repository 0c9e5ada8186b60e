#pragma once

// Seeded generators for the randomized sweeps. Draws go through rng() % n
// rather than std distributions so a seed gives the same stream everywhere.

#include <cstdint>
#include <random>

#include "convlab/algebra.hpp"
#include "convlab/convergence.hpp"
#include "convlab/cube.hpp"
#include "convlab/seqclass.hpp"
#include "convlab/topology.hpp"

namespace convlab::sampling {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t bound);

Element random_element(const Carrier& carrier, Rng& rng);
/// Preperiod of 0..max_pre terms, period of 1..max_period terms.
EPSeq random_epseq(const Carrier& carrier, Rng& rng, std::size_t max_pre = 3,
                   std::size_t max_period = 5);
InfClass random_class(const Carrier& carrier, Rng& rng);

/// Uniformly random class table.
Convergence random_convergence(const Carrier& carrier, Rng& rng);
/// Adds a to λ(⟨a⟩), then shrinks each λ(S) to ⋂ λ(S′) over S′ ⊆ S.
Convergence repair_L1_L2(const Convergence& lambda);

/// Topology generated by a random subbase of up to 2·|carrier| sets.
Topology random_topology(const Carrier& carrier, Rng& rng);

/// Finite or cofinite sets with supports inside {0, ..., window-1}.
cube::FCSet random_fcset(Rng& rng, std::uint32_t window = 8);
cube::FCSeq random_fcseq(Rng& rng, std::uint32_t window = 8, std::size_t max_pre = 3,
                         std::size_t max_period = 4);

}  // namespace convlab::sampling
