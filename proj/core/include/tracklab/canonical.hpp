#pragma once

#include <cstdint>
#include <string>

#include "tracklab/track.hpp"

namespace tracklab {

// Canonical encoding of a track up to ribbon-graph isomorphism respecting
// slots and puncture counts: lexicographically minimal breadth-first slot
// encoding over all root half-edges (and over component orderings / loop
// side flips for disconnected tracks).
struct CanonicalForm {
    std::string encoding;
    uint64_t hash = 0;

    bool operator==(const CanonicalForm& other) const { return encoding == other.encoding; }
    bool operator<(const CanonicalForm& other) const { return encoding < other.encoding; }
};

CanonicalForm canonical_form(const TrainTrack& t);

uint64_t fnv1a64(const std::string& s);

}  // namespace tracklab
