#pragma once

#include "tracklab/cone.hpp"
#include "tracklab/linalg.hpp"
#include "tracklab/track.hpp"

namespace tracklab {

struct ChildCone {
    const TrainTrack* track = nullptr;
    const IntMatrix* carrying = nullptr;
};

struct IdentityReport {
    bool containment_ok = true;
    bool union_ok = true;
    bool intersection_ok = true;
    std::string detail;
    std::vector<IntVec> witnesses;  // counterexample rays in parent coordinates

    bool ok() const { return containment_ok && union_ok && intersection_ok; }
};

// Decides exactly whether the images of the child cones cover the parent
// cone and (when a common subtrack is declared, for two children) whether
// the pairwise intersection is the image of the common cone. Throws on
// malformed carrying matrices (negative entries or kernel mismatch).
IdentityReport verify_cone_identity(const TrainTrack& parent, const std::vector<ChildCone>& children,
                                    const TrainTrack* common = nullptr,
                                    const IntMatrix* common_carrying = nullptr);

// Exact membership of w in {M x : A_child x = 0, x >= 0}.
struct MembershipResult {
    bool inside = false;
    RatVec preimage;
};
MembershipResult cone_image_membership(const TrainTrack& child, const IntMatrix& carrying,
                                       const RatVec& w);

// Do the relative interiors of two pointed cones (given by generators in a
// common ambient space) intersect?
bool relint_intersect(const std::vector<IntVec>& rays_a, const std::vector<IntVec>& rays_b, int n);

// cone(rays) contained in the cone with the given H-representation?
bool cone_subset(const std::vector<IntVec>& rays, const HRep& h);

// image generators M * extreme_rays(child), not canonicalized
std::vector<IntVec> image_rays(const TrainTrack& child, const IntMatrix& carrying);

}  // namespace tracklab
