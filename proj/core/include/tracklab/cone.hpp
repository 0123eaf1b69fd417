#pragma once

#include "tracklab/linalg.hpp"
#include "tracklab/lp.hpp"
#include "tracklab/track.hpp"

namespace tracklab {

// One row per switch: +1 at the LARGE occupant, -1 at each small occupant,
// accumulated when a branch fills several slots of the same switch.
RatMatrix switch_matrix(const TrainTrack& t);

struct RecurrenceResult {
    bool recurrent = false;
    RatVec point;   // strictly positive solution of A w = 0 when recurrent
    RatVec farkas;  // row multipliers otherwise: c = y^T A <= 0, sum(c) < 0
};

// A track is recurrent iff {A w = 0, w >= 1} is feasible (cone scaling).
RecurrenceResult is_recurrent(const TrainTrack& t);

struct TangentialResult {
    bool transversely_recurrent = false;
    RatVec measure;  // strictly positive tangential measure when it exists
    RatVec farkas;
    RatMatrix system;  // the face-inequality system F nu >= 0 that was decided
};

// Strictly positive tangential measure subject to, for every unpunctured
// complementary polygon, each side being no longer than the sum of the
// others. The inequality set is documented in docs/tangential-measures.md.
TangentialResult is_transversely_recurrent(const TrainTrack& t);

bool is_birecurrent(const TrainTrack& t);

// dim C(t) = E - rank(A); requires a recurrent track.
int cone_dim(const TrainTrack& t);

// Extreme rays of {A w = 0, w >= 0} as primitive integer vectors, sorted.
// Double description with fixed (branch-order) insertion.
std::vector<IntVec> extreme_rays(const TrainTrack& t);

struct MeasureCone {
    RatMatrix switch_system;
    std::vector<IntVec> rays;
    int dim = 0;

    // face of the support pattern: rays supported inside `support`
    std::vector<IntVec> face_rays(const std::vector<bool>& support) const;
    static std::vector<bool> support_of(const std::vector<IntVec>& rays, int nb);
};

MeasureCone measure_cone(const TrainTrack& t);

// --- generic pointed-cone computations --------------------------------------

// Extreme rays of {x : eq x = 0, ineq x >= 0}; the cone must be pointed.
std::vector<IntVec> dd_rays(const std::vector<RatVec>& eqs, const std::vector<RatVec>& ineqs, int n);

// H-representation of cone(rays): span equations plus facet inequalities.
struct HRep {
    int n = 0;
    std::vector<RatVec> eqs;
    std::vector<RatVec> ineqs;

    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const;
    // strict on every facet inequality (and on the span equations)
    bool contains_relint(const RatVec& x) const;
};

HRep hrep_of_rays(const std::vector<IntVec>& rays, int n);

// Filters generators down to the sorted extreme-ray list of their cone.
std::vector<IntVec> canonical_rays(std::vector<IntVec> gens, int n);

// Sum of extreme rays: a relative-interior point.
RatVec relint_point(const std::vector<IntVec>& rays, int n);

// max pairwise L1 distance between rays normalized to coordinate-sum 1
Rat projective_diameter(const std::vector<IntVec>& rays);

RatVec to_rat(const IntVec& v);

}  // namespace tracklab
