#pragma once

#include <cstdint>
#include <vector>

#include "sandpiles/families.hpp"
#include "sandpiles/multigraph.hpp"
#include "sandpiles/rng.hpp"

namespace sandpiles {

struct VerifyResult {
    int passed = 0;
    int failed = 0;
    // trial_seed() of every failing trial; rerun one with
    // --seed <value> --trials 1.
    std::vector<std::uint64_t> failure_seeds;
};

// Randomized property batches behind `sandpile verify`. Trials run in
// parallel, but trial t draws everything from SplitMix64(trial_seed(seed,
// t)) and results are collected by index, so output is identical whatever
// the thread count. The inner linear algebra uses the serial kernels;
// parallelism lives at the trial level here.

// Attachment-position independence: for a random F/G/cycle spec, the
// sandpile group of the attached graph is the same for every index i.
VerifyResult verify_theorem1(int trials, std::uint64_t seed);

// Recursive and closed-form tree counts agree: random n <= 8, arguments
// in [1, 20].
VerifyResult verify_theorem3(int trials, std::uint64_t seed);

// Chain-of-cycles groups are cyclic of order F: random n <= 5, cycle
// lengths in [2, 6].
VerifyResult verify_theorem4(int trials, std::uint64_t seed);

// Group order equals the brute-force spanning tree count: random connected
// multigraphs with 2..6 vertices and total multiplicity <= 14.
VerifyResult verify_matrix_tree(int trials, std::uint64_t seed);

// Instance generators, shared with the tests. random_connected_multigraph
// lays down a random spanning tree and then makes extra_attempts tries at
// raising a random pair's multiplicity (each by 1, capped at max_mult).
Multigraph random_connected_multigraph(SplitMix64& rng, int vertices,
                                       int extra_attempts,
                                       std::int64_t max_mult);

// Random H-family spec within the verification bounds: cycle length 3..8,
// |F|, |G| <= 4, per-vertex attachment counts <= 2, F/G edge multiplicities
// <= 2. attach_index is left at 0; theorem-1 checks sweep it.
HSpec random_h_spec(SplitMix64& rng);

}  // namespace sandpiles
