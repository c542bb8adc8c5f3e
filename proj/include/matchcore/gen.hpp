#pragma once

#include <cstdint>

#include "matchcore/market.hpp"

namespace matchcore {

inline constexpr int kGenSideCap = 8;

struct GenSpec {
    int men = 0;
    int women = 0;
    double density = 1.0;  // probability of keeping each sampled strict pair
    std::uint32_t seed = 0;
};

// Deterministic-for-seed random market. Per agent: sample a random total
// order over the agent's alternatives (self included, so an agent may rank
// being single anywhere), keep each strict pair of it independently with
// probability `density`, and install the transitive closure of the kept
// pairs (always acyclic: any subset of a total order is).
//
// The keep decision for a pair depends on (seed, agent, pair) but not on
// `density`, so for a fixed seed the market at a higher density is
// "more complete" than at a lower one, agent by agent.
//
// density 1 keeps everything (complete preferences), density 0 drops
// everything (fully incomparable). Throws BadDensity outside [0,1] and
// CapExceeded when a side exceeds kGenSideCap.
Market generate_market(const GenSpec& spec);

}  // namespace matchcore
