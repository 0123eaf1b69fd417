#pragma once

#include "tracklab/linalg.hpp"
#include "tracklab/track.hpp"

namespace tracklab {

// Result of trimming a branch subset down to a subtrack. The inclusion
// matrix maps child weights to parent weights (rows: all parent branches,
// deleted ones get zero rows).
struct Subtrack {
    bool valid = false;
    std::string reject_reason;
    TrainTrack track;
    IntMatrix inclusion;
    std::vector<bool> kept;  // parent branches surviving after dead-end recursion
    int missing = 0;         // parent branches not surviving

    // per child branch: ordered parent constituents (branch, direction)
    std::vector<std::vector<std::array<int, 2>>> contents;
};

// Deletes the complement of `keep`, recursively removes dead ends, smooths
// bivalent switches (legal only as LARGE+small), merges the complementary
// regions of everything deleted, and revalidates. Subsets whose trimming
// hits a cusped bivalent switch, empties the track, or produces an illegal
// region are reported invalid.
Subtrack trim(const TrainTrack& parent, std::vector<bool> keep);

// All proper nonempty branch subsets that trim to valid subtracks.
// Exhaustive over 2^E; refuses E > 20.
std::vector<Subtrack> enumerate_subtracks(const TrainTrack& parent);

}  // namespace tracklab
