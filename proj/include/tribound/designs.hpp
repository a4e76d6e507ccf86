#pragma once

#include <cstdint>

#include "tribound/types.hpp"

namespace tribound {

// Steiner triple system on nu points (Bose for nu=3 mod 6, Skolem for
// nu=1 mod 6). Deterministic for fixed nu.
TripleSystem construct_sts(int nu);

// Triple system with every pair in exactly lambda triples.
TripleSystem construct_ts(int nu, int lambda, std::uint64_t seed = 0);

// Pairwise balanced design with one block of size 5 and the rest triples.
struct PBD35 {
    int nu = 0;
    std::array<int, 5> five_block{};
    std::vector<Triple> triples;
};

// The 5-block is pinned on points {0..4}.
PBD35 construct_pbd35(int nu, std::uint64_t seed = 0);

// PTS(nu, lambda) whose leave equals target exactly, found by seeded
// hill climbing (random block replacement). Deterministic for fixed seed.
TripleSystem complete_to_leave(int nu, int lambda, const Multigraph& target,
                               std::uint64_t seed = 0);

}  // namespace tribound
