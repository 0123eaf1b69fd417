#include <doctest.h>

#include "fixtures.hpp"
#include "tracklab/track.hpp"

using namespace tracklab;

// Hand boundary-walk oracle for the theta track, worked out on paper from
// the slot table before the walk code existed:
//   circle 0 = sides (a forward, c backward), smooth
//   circle 1 = sides (a backward, b forward), smooth
//   circle 2 = sides (b backward, c forward), both cusps
TEST_CASE("theta boundary walks match the hand oracle") {
    TrainTrack t = fixtures::theta();
    std::vector<Circle> walks = boundary_walks(t);
    REQUIRE(walks.size() == 3);

    CHECK(walks[0].steps.size() == 2);
    CHECK(walks[0].cusps == 0);
    CHECK(walks[0].steps[0].branch == 0);
    CHECK(walks[0].steps[0].end == 0);
    CHECK(walks[0].steps[1].branch == 2);
    CHECK(walks[0].steps[1].end == 1);

    CHECK(walks[1].cusps == 0);
    CHECK(walks[1].steps[0].branch == 0);
    CHECK(walks[1].steps[0].end == 1);
    CHECK(walks[1].steps[1].branch == 1);
    CHECK(walks[1].steps[1].end == 0);

    CHECK(walks[2].cusps == 2);
    CHECK(walks[2].steps[0].branch == 1);
    CHECK(walks[2].steps[0].end == 1);
    CHECK(walks[2].steps[1].branch == 2);
    CHECK(walks[2].steps[1].end == 0);
}

TEST_CASE("theta validates and satisfies the Euler identity") {
    TrainTrack t = fixtures::theta();
    ValidationReport rep = validate_track(t);
    CHECK(rep.ok());
    RegionCensus census = region_census(t);
    REQUIRE(census.faces.size() == 3);
    int total_cusps = 0;
    for (const FaceInfo& f : census.faces) total_cusps += f.cusps;
    CHECK(total_cusps == 2);
}

TEST_CASE("twisted theta fails the genus check") {
    TrainTrack t = fixtures::theta_twisted();
    ValidationReport rep = validate_track(t);
    REQUIRE_FALSE(rep.ok());
    bool genus_issue = false;
    for (const ValidationIssue& i : rep.issues)
        if (i.code == "ribbon-genus") genus_issue = true;
    CHECK(genus_issue);
}

TEST_CASE("deleting a branch end is reported as an unused slot") {
    TrainTrack t = fixtures::theta();
    t.switches[0].slots[SLOT_SMALL_RIGHT] = BranchEnd{};
    ValidationReport rep = validate_track(t);
    REQUIRE_FALSE(rep.ok());
    bool unused = false;
    for (const ValidationIssue& i : rep.issues)
        if (i.code == "unused-slot") unused = true;
    CHECK(unused);
}

TEST_CASE("puncture sum mismatch is reported") {
    TrainTrack t = fixtures::theta();
    t.regions[0].punctures = 5;
    ValidationReport rep = validate_track(t);
    REQUIRE_FALSE(rep.ok());
}

TEST_CASE("branch classification of the theta track") {
    TrainTrack t = fixtures::theta();
    std::vector<BranchKind> kinds = classify_branches(t);
    CHECK(kinds[0] == BranchKind::Large);
    CHECK(kinds[1] == BranchKind::Small);
    CHECK(kinds[2] == BranchKind::Small);
    CHECK(large_branches(t) == std::vector<int>{0});
}

TEST_CASE("free loop around two punctures is valid but not filling") {
    TrainTrack t = fixtures::loop_around_two();
    CHECK(validate_track(t).ok());
    FillingResult f = is_filling(t);
    CHECK_FALSE(f.filling);
    CHECK(f.witness_region >= 0);
}

TEST_CASE("theta with one puncture per face fills") {
    CHECK(is_filling(fixtures::theta()).filling);
}

TEST_CASE("is_filling rejects positive genus") {
    TrainTrack t = fixtures::theta();
    t.surface.genus = 1;
    CHECK_THROWS_AS((void)is_filling(t), Error);
}

TEST_CASE("pinched fixture validates") {
    CHECK(validate_track(fixtures::pinched()).ok());
}
