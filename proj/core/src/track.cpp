#include "tracklab/track.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tracklab {

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const ValidationIssue& i : issues) os << "[" << i.code << "] " << i.detail << "\n";
    return os.str();
}

FaceLabel FaceInfo::label() const {
    if (euler_compact != 1) return FaceLabel::Other;
    if (cusps == 3 && punctures == 0) return FaceLabel::Triangle;
    if (cusps == 1 && punctures == 1) return FaceLabel::OncePuncturedMonogon;
    if (cusps == 2 && punctures == 1) return FaceLabel::OncePuncturedBigon;
    return FaceLabel::Other;
}

int RegionCensus::count(FaceLabel label) const {
    int n = 0;
    for (const FaceInfo& f : faces)
        if (f.label() == label) ++n;
    return n;
}

bool RegionCensus::is_complete_census() const {
    return faces.size() == 6 && count(FaceLabel::OncePuncturedMonogon) == 5 &&
           count(FaceLabel::Triangle) == 1;
}

bool RegionCensus::is_nearly_complete_census() const {
    return faces.size() == 5 && count(FaceLabel::OncePuncturedMonogon) == 4 &&
           count(FaceLabel::OncePuncturedBigon) == 1;
}

std::string RegionCensus::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < faces.size(); ++i) {
        const FaceInfo& f = faces[i];
        os << (i ? " " : "") << "(chi=" << f.euler_compact << ",m=" << f.punctures
           << ",k=" << f.cusps << ")";
    }
    return os.str();
}

namespace {

bool structure_ok(const TrainTrack& t, ValidationReport& rep) {
    bool ok = true;
    auto bad = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
        ok = false;
    };

    int nb = t.num_branches();
    for (int s = 0; s < t.num_switches(); ++s) {
        for (int i = 0; i < 3; ++i) {
            const BranchEnd& be = t.switches[s].slots[i];
            if (!be.valid()) {
                bad("unused-slot", "switch " + std::to_string(s) + " slot " + std::to_string(i));
                continue;
            }
            if (be.branch >= nb || be.end < 0 || be.end > 1) {
                bad("bad-slot-ref", "switch " + std::to_string(s) + " slot " + std::to_string(i));
                continue;
            }
            const Attach& at = t.branches[be.branch].ends[be.end];
            if (at.sw != s || at.slot != i)
                bad("slot-end-mismatch",
                    "switch " + std::to_string(s) + " slot " + std::to_string(i) + " names branch " +
                        std::to_string(be.branch) + ":" + std::to_string(be.end));
        }
    }
    for (int b = 0; b < nb; ++b) {
        const Branch& br = t.branches[b];
        if (br.is_loop()) continue;
        for (int e = 0; e < 2; ++e) {
            const Attach& at = br.ends[e];
            if (!at.valid() || at.sw >= t.num_switches() || at.slot < 0 || at.slot > 2) {
                bad("dangling-end", "branch " + std::to_string(b) + ":" + std::to_string(e));
                continue;
            }
            if (t.switches[at.sw].slots[at.slot] != BranchEnd{b, e})
                bad("end-slot-mismatch", "branch " + std::to_string(b) + ":" + std::to_string(e));
        }
    }
    return ok;
}

}  // namespace

ValidationReport validate_track(const TrainTrack& t) {
    ValidationReport rep;
    auto bad = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
    };

    if (t.surface.genus != 0) bad("surface-genus", "only genus 0 is supported");
    if (t.surface.punctures < 3) bad("surface-punctures", "need at least 3 punctures (chi <= -1)");
    if (t.num_branches() == 0) {
        bad("empty", "track has no branches");
        return rep;
    }
    if (!structure_ok(t, rep)) return rep;  // walks need a sound slot table

    std::vector<Circle> walks = boundary_walks(t);

    // per-component ribbon genus
    int ncomp = 0;
    std::vector<int> comp = branch_components(t, &ncomp);
    std::vector<int> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0), loopcomp(ncomp, 0);
    for (int b = 0; b < t.num_branches(); ++b) {
        ++ecnt[comp[b]];
        if (t.branches[b].is_loop()) loopcomp[comp[b]] = 1;
    }
    for (int s = 0; s < t.num_switches(); ++s) {
        const BranchEnd& be = t.switches[s].slots[0];
        if (be.valid()) ++vcnt[comp[be.branch]];
    }
    for (const Circle& c : walks) ++fcnt[comp[c.steps[0].branch]];
    for (int k = 0; k < ncomp; ++k) {
        if (loopcomp[k]) continue;  // a free loop is planar by definition
        int twice_genus = 2 - (vcnt[k] - ecnt[k] + fcnt[k]);
        if (twice_genus != 0)
            bad("ribbon-genus", "component " + std::to_string(k) + " has genus " +
                                    std::to_string(twice_genus / 2));
    }

    // region bookkeeping
    std::vector<int> region_of_circle(walks.size(), -1);
    for (size_t r = 0; r < t.regions.size(); ++r) {
        for (int ci : t.regions[r].circles) {
            if (ci < 0 || ci >= static_cast<int>(walks.size())) {
                bad("region-circle-range", "region " + std::to_string(r));
                continue;
            }
            if (region_of_circle[ci] != -1) bad("region-overlap", "circle " + std::to_string(ci));
            region_of_circle[ci] = static_cast<int>(r);
        }
    }
    for (size_t ci = 0; ci < walks.size(); ++ci)
        if (region_of_circle[ci] < 0) bad("region-missing", "circle " + std::to_string(ci));
    if (!rep.ok()) return rep;

    int total_punctures = 0;
    for (const Region& r : t.regions) {
        if (r.punctures < 0) bad("region-punctures", "negative count");
        total_punctures += r.punctures;
    }
    if (total_punctures != t.surface.punctures)
        bad("puncture-sum", "regions carry " + std::to_string(total_punctures) + " punctures, surface has " +
                                std::to_string(t.surface.punctures));

    // generalized Euler identity and region legality
    Rat census_sum = 0;
    int total_cusps = 0;
    for (const Region& r : t.regions) {
        int k = 0;
        for (int ci : r.circles) k += walks[ci].cusps;
        total_cusps += k;
        int chi = r.euler_compact();
        census_sum += Rat(chi - r.punctures) - rat(k, 2);
        if (r.punctures == 0 && chi == 1 && k <= 2)
            bad("illegal-face", "unpunctured disc with " + std::to_string(k) + " cusps");
        if (r.punctures == 0 && chi == 0 && k == 0) bad("illegal-face", "smooth unpunctured annulus");
    }
    if (census_sum != Rat(t.surface.euler_char()))
        bad("euler-identity", "census sum " + rat_to_string(census_sum) + " != chi(S) = " +
                                  std::to_string(t.surface.euler_char()));
    if (total_cusps != t.num_switches())
        bad("cusp-count", "total cusps " + std::to_string(total_cusps) + " != switches " +
                              std::to_string(t.num_switches()));
    return rep;
}

RegionCensus region_census(const TrainTrack& t) {
    std::vector<Circle> walks = boundary_walks(t);
    RegionCensus census;
    census.faces.reserve(t.regions.size());
    for (const Region& r : t.regions) {
        FaceInfo f;
        f.punctures = r.punctures;
        f.euler_compact = r.euler_compact();
        for (int ci : r.circles) f.cusps += walks[ci].cusps;
        census.faces.push_back(f);
    }
    return census;
}

std::vector<BranchKind> classify_branches(const TrainTrack& t) {
    std::vector<BranchKind> out(t.num_branches(), BranchKind::Small);
    for (int b = 0; b < t.num_branches(); ++b) {
        const Branch& br = t.branches[b];
        if (br.is_loop()) continue;  // loops carry no split site
        bool l0 = br.ends[0].slot == SLOT_LARGE;
        bool l1 = br.ends[1].slot == SLOT_LARGE;
        out[b] = (l0 && l1) ? BranchKind::Large : (l0 || l1) ? BranchKind::Mixed : BranchKind::Small;
    }
    return out;
}

std::vector<int> large_branches(const TrainTrack& t) {
    std::vector<BranchKind> kinds = classify_branches(t);
    std::vector<int> out;
    for (int b = 0; b < t.num_branches(); ++b)
        if (kinds[b] == BranchKind::Large) out.push_back(b);
    return out;
}

FillingResult is_filling(const TrainTrack& t) {
    if (t.surface.genus != 0) throw Error("is_filling: genus > 0 unsupported");
    FillingResult res;
    for (size_t r = 0; r < t.regions.size(); ++r) {
        const Region& reg = t.regions[r];
        if (reg.euler_compact() != 1) {
            res.witness_region = static_cast<int>(r);
            res.reason = "region is not a disc (chi=" + std::to_string(reg.euler_compact()) +
                         "); its boundary contains an essential curve";
            return res;
        }
        if (reg.punctures > 1) {
            res.witness_region = static_cast<int>(r);
            res.reason = "disc region with " + std::to_string(reg.punctures) + " punctures";
            return res;
        }
    }
    res.filling = true;
    return res;
}

int TrackBuilder::add_switch() {
    t_.switches.push_back(Switch{});
    return t_.num_switches() - 1;
}

int TrackBuilder::add_branch(int sw0, int slot0, int sw1, int slot1) {
    int b = t_.num_branches();
    Branch br;
    br.ends[0] = Attach{sw0, slot0};
    br.ends[1] = Attach{sw1, slot1};
    t_.branches.push_back(br);
    auto hook = [&](int sw, int slot, int end) {
        if (t_.switches[sw].slots[slot].valid())
            throw Error("TrackBuilder: slot already used (switch " + std::to_string(sw) + " slot " +
                        std::to_string(slot) + ")");
        t_.switches[sw].slots[slot] = BranchEnd{b, end};
    };
    hook(sw0, slot0, 0);
    hook(sw1, slot1, 1);
    return b;
}

int TrackBuilder::add_loop() {
    t_.branches.push_back(Branch{});
    return t_.num_branches() - 1;
}

TrainTrack TrackBuilder::finish_connected(const std::vector<int>& punctures_per_circle) {
    std::vector<Circle> walks = boundary_walks(t_);
    if (walks.size() != punctures_per_circle.size())
        throw Error("finish_connected: expected " + std::to_string(walks.size()) +
                    " puncture entries, got " + std::to_string(punctures_per_circle.size()));
    t_.regions.clear();
    for (size_t i = 0; i < walks.size(); ++i) {
        Region r;
        r.punctures = punctures_per_circle[i];
        r.circles = {static_cast<int>(i)};
        t_.regions.push_back(std::move(r));
    }
    return std::move(t_);
}

}  // namespace tracklab
