#pragma once

#include <map>

#include "tracklab/partition.hpp"

namespace tracklab {

struct FamilyMember {
    TrainTrack track;
    std::string construction;  // block-grammar descriptor
    CanonicalForm canon;
};

struct NearlyOccurrence {
    int parent;              // index into complete members
    std::vector<bool> kept;  // branch subset of the parent realizing it
};

struct StandardTrackFamily {
    Surface surface{0, 5};
    std::vector<FamilyMember> complete;
    std::vector<FamilyMember> nearly;
    std::vector<std::vector<NearlyOccurrence>> nearly_parents;  // per nearly member
};

// Enumerates the block grammar (teardrop caterpillars and the spiral-core
// assemblies), keeps the candidates that validate and classify COMPLETE,
// and dedups by canonical form. Nearly complete subtracks are collected
// from all members.
StandardTrackFamily build_standard_family();

struct FamilyValidation {
    bool ok = false;
    std::vector<std::string> problems;
};

// Full revalidation: every member validates and classifies as declared,
// no duplicate canonical forms, each nearly member is a cone face of at
// least one complete member, and the family is closed under puncture
// relabelings (automatic with count-based assignments; checked anyway).
FamilyValidation validate_family(const StandardTrackFamily& f);

// Assembles the depth-0 partition: every complete member spans its own
// chart; each nearly member enters once per chart it is a face of.
// Verifies the face-lattice structure exactly; throws on violation.
Partition standard_partition(const StandardTrackFamily& f);

}  // namespace tracklab
