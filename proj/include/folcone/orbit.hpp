#pragma once

// Seeded random orbits through a transition system, closed up at returns to
// the start letter, and the resulting empirical homology directions. All
// statistics are exact rationals; runs are reproducible bit for bit from the
// seed.

#include <cstdint>
#include <string>
#include <vector>

#include "folcone/cone.hpp"
#include "folcone/markov.hpp"

namespace folcone {

struct OrbitPath {
    std::uint64_t seed = 0;
    std::vector<int> letters;      // steps + 1 entries
    std::vector<ZVec> step_labels; // one label per step
    std::vector<ZVec> running;     // running[t] = sum of the first t labels
};

struct ClosedWalk {
    long start = 0;  // index into the path
    long length = 0; // number of steps back to the start letter
    ZVec cls;
};

struct SimulationConfig {
    long steps = 10000;
    int trials = 1;
    std::uint64_t seed = 1;
    // checkpoint pairs (2^(k-1), 2^k) with k >= window enter the statistic
    int window = 10;

    bool operator==(const SimulationConfig&) const = default;
};

struct TrialReport {
    std::uint64_t seed = 0;
    bool no_return = false;
    long walk_count = 0;
    bool all_walks_contained = true;
    std::vector<long> checkpoints;      // 1, 2, 4, ... up to the step count
    std::vector<QVec> directions;       // running class / t at each checkpoint
    std::vector<Rat> successive_diffs;  // max-norm gaps between consecutive checkpoints
    Rat statistic = 0;                  // max diff within the window

    bool operator==(const TrialReport&) const = default;
};

struct ConvergenceReport {
    std::string system_id;
    SimulationConfig config;
    std::vector<TrialReport> trials;
    Rat max_statistic = 0;
    bool all_contained = true;

    bool operator==(const ConvergenceReport&) const = default;
};

// Walks `steps` edges from the least-index letter lying on a cycle, choosing
// uniformly among out-edges whose target can still reach a cycle. Product
// type systems have no such starting letter and are rejected.
OrbitPath random_orbit(const MarkovSystem& sys, long steps, std::uint64_t seed);

// Maximal closed walks between successive visits to the initial letter. An
// orbit that never returns yields an empty list.
std::vector<ClosedWalk> close_at_returns(const OrbitPath& path);

// cls / length as an exact rational direction.
QVec empirical_direction(const ClosedWalk& walk, int rank);

// Runs config.trials orbits with seeds config.seed, config.seed + 1, ...,
// checks every closed-walk class against the homology cone and records the
// cumulative direction at dyadic checkpoints.
ConvergenceReport convergence_report(const MarkovSystem& sys, const Cone& homology,
                                     const SimulationConfig& config);

// Hull of the classes of every periodic string of length <= max_len. Agrees
// with the homology cone as soon as max_len reaches the letter count.
Cone brute_force_cone(const MarkovSystem& sys, int max_len, long budget = 1000000);

} // namespace folcone
