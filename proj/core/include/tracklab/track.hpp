#pragma once

#include <array>
#include <string>
#include <vector>

#include "tracklab/rational.hpp"

namespace tracklab {

// Slot order at a switch is fixed counterclockwise: LARGE, SMALL_LEFT,
// SMALL_RIGHT. The single cusp of a trivalent switch is the corner between
// SMALL_LEFT and SMALL_RIGHT.
enum Slot : int { SLOT_LARGE = 0, SLOT_SMALL_LEFT = 1, SLOT_SMALL_RIGHT = 2 };

struct Surface {
    int genus = 0;
    int punctures = 5;

    int euler_char() const { return 2 - 2 * genus - punctures; }
    int complexity() const { return 3 * genus - 3 + punctures; }
    bool operator==(const Surface&) const = default;
};

struct BranchEnd {
    int branch = -1;
    int end = -1;
    bool valid() const { return branch >= 0; }
    bool operator==(const BranchEnd&) const = default;
};

struct Attach {
    int sw = -1;
    int slot = -1;
    bool valid() const { return sw >= 0; }
    bool operator==(const Attach&) const = default;
};

struct Switch {
    std::array<BranchEnd, 3> slots;
};

struct Branch {
    std::array<Attach, 2> ends;
    bool is_loop() const { return !ends[0].valid() && !ends[1].valid(); }
};

// A complementary region: a union of boundary circles bounding one component
// of the complement. Connected tracks on the sphere have one circle per
// region; multi-circle regions arise for trimmed subtracks.
struct Region {
    int punctures = 0;
    std::vector<int> circles;

    int euler_compact() const { return 2 - static_cast<int>(circles.size()); }
};

// One directed traversal in a boundary walk: along `branch` starting from
// `end`, arriving at the opposite end's switch; `cusp_after` marks whether
// the corner crossed there is the switch cusp.
struct WalkStep {
    int branch = -1;
    int end = -1;
    bool cusp_after = false;
};

struct Circle {
    std::vector<WalkStep> steps;
    int cusps = 0;
};

struct TrainTrack {
    Surface surface;
    std::vector<Switch> switches;
    std::vector<Branch> branches;
    std::vector<Region> regions;

    int num_switches() const { return static_cast<int>(switches.size()); }
    int num_branches() const { return static_cast<int>(branches.size()); }
};

// Boundary circles in a deterministic order (orbit of the smallest unvisited
// directed branch-end). A free loop yields two one-step circles.
std::vector<Circle> boundary_walks(const TrainTrack& t);

// circle index containing the directed traversal (branch, end).
std::vector<std::array<int, 2>> circle_of_side(const TrainTrack& t, const std::vector<Circle>& walks);

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Checks slot/end tables, trivalence, ribbon genus 0 per component,
// region/circle consistency, puncture totals, the generalized Euler census
// identity, and region legality. Problems are reported, never thrown.
ValidationReport validate_track(const TrainTrack& t);

enum class FaceLabel { Triangle, OncePuncturedMonogon, OncePuncturedBigon, Other };

struct FaceInfo {
    int cusps = 0;
    int punctures = 0;
    int euler_compact = 1;
    FaceLabel label() const;
};

struct RegionCensus {
    std::vector<FaceInfo> faces;

    int count(FaceLabel label) const;
    bool is_complete_census() const;        // 5 once-punctured monogons + 1 triangle
    bool is_nearly_complete_census() const; // 4 once-punctured monogons + 1 once-punctured bigon
    std::string to_string() const;
};

RegionCensus region_census(const TrainTrack& t);

enum class BranchKind { Large, Small, Mixed };

std::vector<BranchKind> classify_branches(const TrainTrack& t);
std::vector<int> large_branches(const TrainTrack& t);

struct FillingResult {
    bool filling = false;
    int witness_region = -1;
    std::string reason;
};

// A track fills iff every complementary region is a disc with at most one
// puncture; on genus 0 this is decided by the region data.
FillingResult is_filling(const TrainTrack& t);

// Connected components over switches/branches; each loop is its own
// component. Returns component id per branch.
std::vector<int> branch_components(const TrainTrack& t, int* num_components = nullptr);

bool is_connected(const TrainTrack& t);

// --- construction helper ---------------------------------------------------

// Builds switch/branch tables; regions are attached afterwards, once the
// circle structure is known.
class TrackBuilder {
  public:
    explicit TrackBuilder(Surface s) { t_.surface = s; }

    int add_switch();
    int add_branch(int sw0, int slot0, int sw1, int slot1);
    int add_loop();

    // Finishes the combinatorial part. Punctures are assigned per circle
    // (canonical walk order); every circle becomes its own region.
    TrainTrack finish_connected(const std::vector<int>& punctures_per_circle);

    // Access for callers that need to inspect circles before assigning.
    TrainTrack&& take() { return std::move(t_); }
    const TrainTrack& peek() const { return t_; }

  private:
    TrainTrack t_;
};

}  // namespace tracklab
