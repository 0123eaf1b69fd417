#include <doctest.h>

#include "fixtures.hpp"
#include "tracklab/trim.hpp"

using namespace tracklab;

TEST_CASE("theta subtracks are exactly the two smooth closed curves") {
    TrainTrack t = fixtures::theta();
    std::vector<Subtrack> subs = enumerate_subtracks(t);
    // a u b and a u c survive; b u c meets in a cusp and is rejected;
    // single branches die by the dead-end recursion
    REQUIRE(subs.size() == 2);
    for (const Subtrack& s : subs) {
        CHECK(s.track.num_branches() == 1);
        CHECK(s.track.branches[0].is_loop());
        CHECK(s.track.num_switches() == 0);
        CHECK(s.kept[0]);  // both contain the large branch a
    }
    CHECK(subs[0].kept[1] != subs[1].kept[1]);
}

TEST_CASE("theta loop subtrack regions merge punctures correctly") {
    TrainTrack t = fixtures::theta();  // faces (a,c):1  (a,b):1  (b,c):1
    std::vector<bool> keep = {true, true, false};  // delete c
    Subtrack s = trim(t, keep);
    REQUIRE(s.valid);
    REQUIRE(s.track.regions.size() == 2);
    // deleting c joins face (a,c) with face (b,c): one disc region with two
    // punctures, the untouched (a,b) face keeps one
    int m0 = s.track.regions[0].punctures;
    int m1 = s.track.regions[1].punctures;
    CHECK(((m0 == 1 && m1 == 2) || (m0 == 2 && m1 == 1)));
    for (const Region& r : s.track.regions) CHECK(r.euler_compact() == 1);
}

TEST_CASE("cusped two-small subset is rejected") {
    TrainTrack t = fixtures::theta();
    std::vector<bool> keep = {false, true, true};  // b u c
    Subtrack s = trim(t, keep);
    CHECK_FALSE(s.valid);
}

TEST_CASE("inclusion matrix maps loop weight over both merged branches") {
    TrainTrack t = fixtures::theta();
    Subtrack s = trim(t, {true, true, false});
    REQUIRE(s.valid);
    REQUIRE(s.inclusion.rows == 3);
    REQUIRE(s.inclusion.cols == 1);
    CHECK(s.inclusion.at(0, 0) == 1);  // a
    CHECK(s.inclusion.at(1, 0) == 1);  // b
    CHECK(s.inclusion.at(2, 0) == 0);  // c deleted
}

TEST_CASE("single-branch subsets trim to nothing") {
    TrainTrack t = fixtures::theta();
    CHECK_FALSE(trim(t, {true, false, false}).valid);
    CHECK_FALSE(trim(t, {false, true, false}).valid);
}

TEST_CASE("deleting everything around the pinched loop leaves the loop") {
    TrainTrack t = fixtures::pinched();
    // keep only g: its switch loses h, becomes bivalent (large+small on the
    // same branch) and smooths into a free loop
    Subtrack s = trim(t, {true, false, false});
    REQUIRE(s.valid);
    CHECK(s.track.num_branches() == 1);
    CHECK(s.track.branches[0].is_loop());
    // regions: the outer face A (1) merged with teardrop interior C (1) and
    // face B keeps 1... the loop on S0,3 must carry (1,2) in some order
    REQUIRE(s.track.regions.size() == 2);
    int total = s.track.regions[0].punctures + s.track.regions[1].punctures;
    CHECK(total == 3);
}
