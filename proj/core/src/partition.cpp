#include "tracklab/partition.hpp"

#include <algorithm>
#include <sstream>

namespace tracklab {

std::string PartitionMember::dedup_key() const {
    std::ostringstream os;
    os << chart << "#" << canon.encoding << "#";
    for (const IntVec& r : chart_rays) os << vec_to_string(r) << ";";
    return os.str();
}

std::vector<IntVec> member_chart_rays(const TrainTrack& track, const IntMatrix& to_chart) {
    std::vector<IntVec> gens;
    for (const IntVec& r : extreme_rays(track)) gens.push_back(primitive_integer(to_rat(to_chart.apply(r))));
    return canonical_rays(gens, to_chart.rows);
}

PartitionMember make_chart_member(const TrainTrack& chart_track, int chart_index) {
    PartitionMember m;
    m.track = chart_track;
    m.kind = TrackClass::Complete;
    m.chart = chart_index;
    m.to_chart = IntMatrix::identity(chart_track.num_branches());
    m.canon = canonical_form(chart_track);
    m.chart_rays = member_chart_rays(chart_track, m.to_chart);
    m.history = "chart" + std::to_string(chart_index);
    return m;
}

MoveOutcome apply_splitting_move(const PartitionMember& m, int branch, bool nearly_move,
                                 int child_depth) {
    MoveOutcome out;
    TrackClass want = nearly_move ? TrackClass::NearlyComplete : TrackClass::Complete;

    SplitResult left = split(m.track, SplitMove{branch, Side::Left});
    SplitResult right = split(m.track, SplitMove{branch, Side::Right});
    Classification cl = classify_track(left.child);
    Classification cr = classify_track(right.child);

    auto make_child = [&](SplitResult& sr, Side side, TrackClass kind) {
        PartitionMember c;
        c.track = std::move(sr.child);
        c.kind = kind;
        c.chart = m.chart;
        c.to_chart = m.to_chart.times(sr.carrying);
        c.canon = canonical_form(c.track);
        c.chart_rays = member_chart_rays(c.track, c.to_chart);
        c.history = m.history + " b" + std::to_string(branch) + side_name(side);
        c.born_depth = child_depth;
        c.boundary_sigma = m.boundary_sigma;
        return c;
    };

    int kept = 0;
    if (cl.kind == want) {
        out.children.push_back(make_child(left, Side::Left, cl.kind));
        ++kept;
    }
    if (cr.kind == want) {
        out.children.push_back(make_child(right, Side::Right, cr.kind));
        ++kept;
    }
    if (kept == 0)
        throw Error("splitting move at branch " + std::to_string(branch) +
                    " produced no child of the expected class (left " +
                    track_class_name(cl.kind) + ", right " + track_class_name(cr.kind) + ")");

    if (!nearly_move && kept == 2) {
        CentralResult central = central_subtrack(m.track, branch);
        Classification cc = classify_track(central.track);
        if (cc.kind == TrackClass::NearlyComplete) {
            PartitionMember s;
            s.track = std::move(central.track);
            s.kind = TrackClass::NearlyComplete;
            s.chart = m.chart;
            s.to_chart = m.to_chart.times(central.carrying);
            s.canon = canonical_form(s.track);
            s.chart_rays = member_chart_rays(s.track, s.to_chart);
            s.history = m.history + " s(b" + std::to_string(branch) + ")";
            s.born_depth = child_depth;
            s.boundary_sigma = m.boundary_sigma;
            out.sigma = std::move(s);
        }
    }
    return out;
}

Partition partition_move(const Partition& p, TrackClass which, int target, int branch) {
    Partition out = p;
    bool nearly_move = (which == TrackClass::NearlyComplete);
    const std::vector<PartitionMember>& pool = nearly_move ? p.nearly : p.complete;
    if (target < 0 || target >= static_cast<int>(pool.size()))
        throw Error("partition_move: bad target index");
    const PartitionMember& m = pool[target];
    std::vector<int> larges = large_branches(m.track);
    if (std::find(larges.begin(), larges.end(), branch) == larges.end())
        throw Error("partition_move: branch " + std::to_string(branch) + " is not large");

    MoveOutcome mo = apply_splitting_move(m, branch, nearly_move, m.born_depth);
    if (nearly_move) {
        out.nearly.erase(out.nearly.begin() + target);
        for (PartitionMember& c : mo.children) out.nearly.push_back(std::move(c));
    } else {
        out.complete.erase(out.complete.begin() + target);
        for (PartitionMember& c : mo.children) out.complete.push_back(std::move(c));
        if (mo.sigma) out.nearly.push_back(std::move(*mo.sigma));
    }
    return out;
}

}  // namespace tracklab
