#pragma once

#include "tracklab/cone.hpp"
#include "tracklab/track.hpp"
#include "tracklab/trim.hpp"

namespace tracklab {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "L" : "R"; }

struct SplitMove {
    int branch = -1;
    Side side = Side::Left;
};

// One split: the large branch is replaced by the diagonal (which keeps the
// branch index), the two end switches are resmoothed, regions carry over.
// carrying maps child weights to parent weights; for the LEFT child it is
// I + e_b (e_q + e_s)^T and membership of a parent measure w in the left
// image is exactly w_p >= w_s (p,q = small-left/right at end 0's switch,
// r,s = small-left/right at end 1's switch).
struct SplitResult {
    TrainTrack child;
    IntMatrix carrying;
};

SplitResult split(const TrainTrack& t, const SplitMove& m);

// Common subtrack of the two splits at `branch`: either child with the
// diagonal erased. `carrying` composes into parent coordinates.
struct CentralResult {
    TrainTrack track;
    IntMatrix carrying;
};

CentralResult central_subtrack(const TrainTrack& t, int branch);

struct FullSplitChild {
    std::vector<SplitMove> moves;
    TrainTrack child;
    IntMatrix carrying;
};

// All 2^l side assignments over the large branches, splitting at each
// exactly once, with composed carrying matrices.
std::vector<FullSplitChild> full_splits(const TrainTrack& t);

// Splits at every large branch, choosing for each the side whose child cone
// contains w. Degenerate when w lies on a cutting hyperplane.
struct SplitTowardResult {
    bool degenerate = false;
    int degenerate_branch = -1;
    CentralResult degenerate_common;     // carried by the common subtrack
    std::vector<SplitMove> moves;
    TrainTrack next;
    IntMatrix carrying;    // parent -> next over the whole full split
    RatVec next_measure;   // w expressed in child coordinates
};

SplitTowardResult split_toward(const TrainTrack& t, const RatVec& w);

}  // namespace tracklab
