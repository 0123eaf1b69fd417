#include "tracklab/classify.hpp"

namespace tracklab {

Classification classify_track(const TrainTrack& t) {
    Classification out;
    out.census = region_census(t);
    bool complete_census = out.census.is_complete_census();
    bool nearly_census = out.census.is_nearly_complete_census();
    if (!complete_census && !nearly_census) return out;

    out.recurrence = is_recurrent(t);
    if (!out.recurrence.recurrent) return out;
    out.tangential = is_transversely_recurrent(t);
    if (!out.tangential.transversely_recurrent) return out;

    if (complete_census) {
        out.kind = TrackClass::Complete;
        return out;
    }
    out.cone_dimension = t.num_branches() - rank(switch_matrix(t));
    if (out.cone_dimension == 3) out.kind = TrackClass::NearlyComplete;
    return out;
}

}  // namespace tracklab
