#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tracklab/canonical.hpp"
#include "tracklab/classify.hpp"
#include "tracklab/split.hpp"

namespace tracklab {

struct PartitionMember {
    TrainTrack track;
    TrackClass kind = TrackClass::Other;
    int chart = -1;                  // index into Partition::charts
    IntMatrix to_chart;              // cone(track) -> chart weight coordinates
    CanonicalForm canon;
    std::vector<IntVec> chart_rays;  // canonicalized image rays in chart coordinates
    std::string history;
    int born_depth = 0;
    bool boundary_sigma = false;     // lies on the chart boundary (depth-0 face lineage)

    std::string dedup_key() const;
};

// A train track partition, sharded by reference chart: interiors of member
// cones are pairwise disjoint within each chart; disjointness across charts
// is assumed, not checked (recorded in provenance_note).
struct Partition {
    std::vector<TrainTrack> charts;
    std::vector<PartitionMember> complete;  // T
    std::vector<PartitionMember> nearly;    // S
    std::string provenance_note;
};

// One complete or nearly complete splitting move applied to a member.
struct MoveOutcome {
    std::vector<PartitionMember> children;
    std::optional<PartitionMember> sigma;  // common subtrack when added to S
};

MoveOutcome apply_splitting_move(const PartitionMember& m, int branch, bool nearly_move,
                                 int child_depth);

// The spec-level single-move operation: splits the target member along the
// branch and rebuilds the partition per the complete / nearly complete case
// analysis. target indexes into p.complete or p.nearly.
Partition partition_move(const Partition& p, TrackClass which, int target, int branch);

PartitionMember make_chart_member(const TrainTrack& chart_track, int chart_index);

std::vector<IntVec> member_chart_rays(const TrainTrack& track, const IntMatrix& to_chart);

}  // namespace tracklab
