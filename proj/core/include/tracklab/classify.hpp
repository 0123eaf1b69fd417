#pragma once

#include "tracklab/cone.hpp"
#include "tracklab/track.hpp"

namespace tracklab {

enum class TrackClass { Complete, NearlyComplete, Other };

inline const char* track_class_name(TrackClass c) {
    switch (c) {
        case TrackClass::Complete: return "COMPLETE";
        case TrackClass::NearlyComplete: return "NEARLY_COMPLETE";
        default: return "OTHER";
    }
}

// Evidence bundle: the census plus the LP certificates that were computed
// on the way to the verdict.
struct Classification {
    TrackClass kind = TrackClass::Other;
    RegionCensus census;
    RecurrenceResult recurrence;
    TangentialResult tangential;
    int cone_dimension = -1;  // only filled when the census made it relevant
};

// On the five-punctured sphere:
//   COMPLETE        <=> census {5 once-punctured monogons, 1 triangle},
//                       recurrent and transversely recurrent
//   NEARLY_COMPLETE <=> census {4 once-punctured monogons, 1 once-punctured
//                       bigon}, birecurrent, cone dimension 3
Classification classify_track(const TrainTrack& t);

}  // namespace tracklab
