#pragma once

#include "tracklab/track.hpp"

namespace tracklab::fixtures {

// Theta track on the thrice-punctured sphere: switches u,v; branch a large
// at both ends, b and c small. Boundary circles in walk order: (a,c) smooth,
// (a,b) smooth, (b,c) with both cusps.
inline TrainTrack theta() {
    TrackBuilder tb(Surface{0, 3});
    int u = tb.add_switch();
    int v = tb.add_switch();
    tb.add_branch(u, SLOT_LARGE, v, SLOT_LARGE);
    tb.add_branch(u, SLOT_SMALL_LEFT, v, SLOT_SMALL_RIGHT);
    tb.add_branch(u, SLOT_SMALL_RIGHT, v, SLOT_SMALL_LEFT);
    return tb.finish_connected({1, 1, 1});
}

// Same slot table except both small-left slots host b: the ribbon structure
// closes up with genus one.
inline TrainTrack theta_twisted() {
    TrackBuilder tb(Surface{0, 3});
    int u = tb.add_switch();
    int v = tb.add_switch();
    tb.add_branch(u, SLOT_LARGE, v, SLOT_LARGE);
    tb.add_branch(u, SLOT_SMALL_LEFT, v, SLOT_SMALL_LEFT);
    tb.add_branch(u, SLOT_SMALL_RIGHT, v, SLOT_SMALL_RIGHT);
    return tb.finish_connected({3});  // one boundary circle: genus 1
}

// A single closed curve on the five-punctured sphere enclosing two
// punctures.
inline TrainTrack loop_around_two() {
    TrackBuilder tb(Surface{0, 5});
    tb.add_loop();
    return tb.finish_connected({2, 3});
}

// A track whose switch conditions pinch a branch to weight zero: a loop g
// occupying both the large and small-left slot of one switch (w_g = w_g +
// w_h forces w_h = 0), with the pinched branch h feeding a teardrop.
inline TrainTrack pinched() {
    TrackBuilder tb(Surface{0, 3});
    int x = tb.add_switch();
    int y = tb.add_switch();
    tb.add_branch(x, SLOT_LARGE, x, SLOT_SMALL_LEFT);         // g
    tb.add_branch(x, SLOT_SMALL_RIGHT, y, SLOT_LARGE);        // h
    tb.add_branch(y, SLOT_SMALL_LEFT, y, SLOT_SMALL_RIGHT);   // teardrop loop i
    return tb.finish_connected({1, 1, 1});
}

}  // namespace tracklab::fixtures
