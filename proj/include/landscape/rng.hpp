#pragma once

#include <cstdint>
#include <random>

namespace landscape {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Counter-based per-trial stream: the engine depends only on
/// (seed, trial_index), never on which thread runs the trial.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    return std::mt19937_64{splitmix64(splitmix64(seed) ^ splitmix64(trial_index + 1))};
}

} // namespace landscape
