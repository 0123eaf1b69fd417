#include "tracklab/standard_family.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tracklab/cone_checks.hpp"
#include "tracklab/trim.hpp"

namespace tracklab {

namespace {

// Assembly scratchpad: switches hold (branch, end) triples in slot order.
struct Assembly {
    int num_switches = 0;
    int num_branches = 0;
    std::vector<std::array<BranchEnd, 3>> slots;
    std::vector<bool> loop;

    int add_switch() {
        slots.push_back({});
        return num_switches++;
    }
    int add_branch(bool is_loop = false) {
        loop.push_back(is_loop);
        return num_branches++;
    }
    void place(int sw, int slot, int branch, int end) { slots[sw][slot] = BranchEnd{branch, end}; }

    TrainTrack build(Surface surface) const {
        TrainTrack t;
        t.surface = surface;
        t.branches.resize(num_branches);
        t.switches.resize(num_switches);
        for (int s = 0; s < num_switches; ++s)
            for (int i = 0; i < 3; ++i) {
                const BranchEnd& be = slots[s][i];
                if (!be.valid()) throw Error("assembly: empty slot");
                t.switches[s].slots[i] = be;
                t.branches[be.branch].ends[be.end] = Attach{s, i};
            }
        return t;
    }
};

// Teardrop around one puncture: returns the stem branch (end 1 dangling).
int add_teardrop(Assembly& a) {
    int ts = a.add_switch();
    int stem = a.add_branch();
    int loop = a.add_branch();
    a.place(ts, SLOT_LARGE, stem, 0);
    a.place(ts, SLOT_SMALL_LEFT, loop, 0);
    a.place(ts, SLOT_SMALL_RIGHT, loop, 1);
    return stem;
}

// Attempts the complete-census puncture assignment: every one-cusp circle
// is a once-punctured monogon, the three-cusp circle is the triangle.
bool assign_complete_punctures(TrainTrack& t) {
    std::vector<Circle> walks = boundary_walks(t);
    if (walks.size() != 6u) return false;
    int monogons = 0, triangles = 0;
    t.regions.clear();
    for (size_t i = 0; i < walks.size(); ++i) {
        Region r;
        r.circles = {static_cast<int>(i)};
        if (walks[i].cusps == 1) {
            r.punctures = 1;
            ++monogons;
        } else if (walks[i].cusps == 3) {
            r.punctures = 0;
            ++triangles;
        } else {
            return false;
        }
        t.regions.push_back(std::move(r));
    }
    return monogons == 5 && triangles == 1;
}

using Perm = std::array<int, 3>;  // incident-end index per slot (L, SL, SR)

const std::array<Perm, 6> kPerms = {
    Perm{0, 1, 2}, Perm{0, 2, 1}, Perm{1, 0, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{2, 1, 0}};

void place_perm(Assembly& a, int sw, const Perm& perm, const std::array<BranchEnd, 3>& ends) {
    for (int slot = 0; slot < 3; ++slot) a.place(sw, slot, ends[perm[slot]].branch, ends[perm[slot]].end);
}

void emit_candidate(TrainTrack t, const std::string& descr, std::vector<FamilyMember>& out) {
    if (!assign_complete_punctures(t)) return;
    if (!validate_track(t).ok()) return;
    Classification cl = classify_track(t);
    if (cl.kind != TrackClass::Complete) return;
    FamilyMember m;
    m.track = std::move(t);
    m.construction = descr;
    m.canon = canonical_form(m.track);
    out.push_back(std::move(m));
}

// Five teardrops on a three-switch spine.
void enumerate_caterpillars(std::vector<FamilyMember>& out) {
    for (int p1 = 0; p1 < 6; ++p1)
        for (int p2 = 0; p2 < 6; ++p2)
            for (int p3 = 0; p3 < 6; ++p3) {
                Assembly a;
                std::array<int, 5> stems;
                for (int i = 0; i < 5; ++i) stems[i] = add_teardrop(a);
                int s1 = a.add_switch(), s2 = a.add_switch(), s3 = a.add_switch();
                int f1 = a.add_branch(), f2 = a.add_branch();
                place_perm(a, s1, kPerms[p1],
                           {BranchEnd{stems[0], 1}, BranchEnd{stems[1], 1}, BranchEnd{f1, 0}});
                place_perm(a, s2, kPerms[p2],
                           {BranchEnd{f1, 1}, BranchEnd{stems[2], 1}, BranchEnd{f2, 0}});
                place_perm(a, s3, kPerms[p3],
                           {BranchEnd{f2, 1}, BranchEnd{stems[3], 1}, BranchEnd{stems[4], 1}});
                std::ostringstream descr;
                descr << "caterpillar spine-slots=" << p1 << "," << p2 << "," << p3;
                emit_candidate(a.build(Surface{0, 5}), descr.str(), out);
            }
}

// Four teardrop stems spiraling onto one core circle; the fifth puncture
// lives in a core-flank monogon.
void enumerate_core4(std::vector<FamilyMember>& out) {
    for (int p0 = 0; p0 < 6; ++p0)
        for (int p1 = 0; p1 < 6; ++p1)
            for (int p2 = 0; p2 < 6; ++p2)
                for (int p3 = 0; p3 < 6; ++p3) {
                    Assembly a;
                    std::array<int, 4> stems;
                    for (int i = 0; i < 4; ++i) stems[i] = add_teardrop(a);
                    std::array<int, 4> z;
                    for (int i = 0; i < 4; ++i) z[i] = a.add_switch();
                    std::array<int, 4> arc;
                    for (int i = 0; i < 4; ++i) arc[i] = a.add_branch();
                    std::array<int, 4> perm = {p0, p1, p2, p3};
                    for (int j = 0; j < 4; ++j) {
                        // incident: upstream arc end 1, downstream arc end 0, strand
                        place_perm(a, z[j], kPerms[perm[j]],
                                   {BranchEnd{arc[(j + 3) % 4], 1}, BranchEnd{arc[j], 0},
                                    BranchEnd{stems[j], 1}});
                    }
                    std::ostringstream descr;
                    descr << "core4 spiral-slots=" << p0 << "," << p1 << "," << p2 << "," << p3;
                    emit_candidate(a.build(Surface{0, 5}), descr.str(), out);
                }
}

// Two stems merged into one strand plus two direct stems, three strands
// spiraling onto a core; punctures five = four teardrops + one flank.
void enumerate_core3(std::vector<FamilyMember>& out) {
    for (int pm = 0; pm < 6; ++pm)
        for (int p0 = 0; p0 < 6; ++p0)
            for (int p1 = 0; p1 < 6; ++p1)
                for (int p2 = 0; p2 < 6; ++p2) {
                    Assembly a;
                    std::array<int, 4> stems;
                    for (int i = 0; i < 4; ++i) stems[i] = add_teardrop(a);
                    int ms = a.add_switch();
                    int h = a.add_branch();
                    place_perm(a, ms, kPerms[pm],
                               {BranchEnd{stems[0], 1}, BranchEnd{stems[1], 1}, BranchEnd{h, 0}});
                    std::array<int, 3> z;
                    for (int i = 0; i < 3; ++i) z[i] = a.add_switch();
                    std::array<int, 3> arc;
                    for (int i = 0; i < 3; ++i) arc[i] = a.add_branch();
                    std::array<BranchEnd, 3> strands = {BranchEnd{h, 1}, BranchEnd{stems[2], 1},
                                                        BranchEnd{stems[3], 1}};
                    std::array<int, 3> perm = {p0, p1, p2};
                    for (int j = 0; j < 3; ++j) {
                        place_perm(a, z[j], kPerms[perm[j]],
                                   {BranchEnd{arc[(j + 2) % 3], 1}, BranchEnd{arc[j], 0}, strands[j]});
                    }
                    std::ostringstream descr;
                    descr << "core3 merge-slots=" << pm << " spiral-slots=" << p0 << "," << p1 << ","
                          << p2;
                    emit_candidate(a.build(Surface{0, 5}), descr.str(), out);
                }
}

}  // namespace

StandardTrackFamily build_standard_family() {
    StandardTrackFamily fam;
    std::vector<FamilyMember> candidates;
    enumerate_caterpillars(candidates);
    enumerate_core4(candidates);
    enumerate_core3(candidates);

    std::map<std::string, int> seen;
    for (FamilyMember& m : candidates) {
        if (seen.count(m.canon.encoding)) continue;
        seen[m.canon.encoding] = static_cast<int>(fam.complete.size());
        fam.complete.push_back(std::move(m));
    }

    // nearly complete subtracks have 3-dimensional cones, hence arise as
    // facets of the chart cones; enumerate facet supports instead of all
    // branch subsets
    std::map<std::string, int> nearly_seen;
    for (size_t ci = 0; ci < fam.complete.size(); ++ci) {
        const TrainTrack& parent = fam.complete[ci].track;
        int nb = parent.num_branches();
        MeasureCone mc = measure_cone(parent);
        HRep h = hrep_of_rays(mc.rays, nb);
        std::vector<std::vector<bool>> supports;
        for (const RatVec& facet : h.ineqs) {
            std::vector<IntVec> tight;
            for (const IntVec& r : mc.rays) {
                Rat dot = 0;
                for (int i = 0; i < nb; ++i) dot += facet[i] * Rat(r[i]);
                if (dot == 0) tight.push_back(r);
            }
            supports.push_back(MeasureCone::support_of(tight, nb));
        }
        std::sort(supports.begin(), supports.end());
        supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
        for (const std::vector<bool>& keep : supports) {
            Subtrack st = trim(parent, keep);
            if (!st.valid) continue;
            Classification cl = classify_track(st.track);
            if (cl.kind != TrackClass::NearlyComplete) continue;
            CanonicalForm canon = canonical_form(st.track);
            auto it = nearly_seen.find(canon.encoding);
            int idx;
            if (it == nearly_seen.end()) {
                idx = static_cast<int>(fam.nearly.size());
                nearly_seen[canon.encoding] = idx;
                FamilyMember m;
                m.track = st.track;
                m.construction = "face of " + fam.complete[ci].construction;
                m.canon = canon;
                fam.nearly.push_back(std::move(m));
                fam.nearly_parents.push_back({});
            } else {
                idx = it->second;
            }
            fam.nearly_parents[idx].push_back(NearlyOccurrence{static_cast<int>(ci), st.kept});
        }
    }
    return fam;
}

FamilyValidation validate_family(const StandardTrackFamily& f) {
    FamilyValidation out;
    std::map<std::string, int> canon_seen;
    for (size_t i = 0; i < f.complete.size(); ++i) {
        const FamilyMember& m = f.complete[i];
        ValidationReport rep = validate_track(m.track);
        if (!rep.ok()) out.problems.push_back("complete member " + std::to_string(i) + ": " + rep.to_string());
        if (classify_track(m.track).kind != TrackClass::Complete)
            out.problems.push_back("complete member " + std::to_string(i) + " does not classify COMPLETE");
        if (canonical_form(m.track).encoding != m.canon.encoding)
            out.problems.push_back("complete member " + std::to_string(i) + " has a stale canonical form");
        if (canon_seen.count(m.canon.encoding))
            out.problems.push_back("duplicate canonical form between complete members " +
                                   std::to_string(canon_seen[m.canon.encoding]) + " and " + std::to_string(i));
        canon_seen[m.canon.encoding] = static_cast<int>(i);
    }
    std::map<std::string, int> nearly_canon;
    for (size_t i = 0; i < f.nearly.size(); ++i) {
        const FamilyMember& m = f.nearly[i];
        ValidationReport rep = validate_track(m.track);
        if (!rep.ok()) out.problems.push_back("nearly member " + std::to_string(i) + ": " + rep.to_string());
        if (classify_track(m.track).kind != TrackClass::NearlyComplete)
            out.problems.push_back("nearly member " + std::to_string(i) + " does not classify NEARLY_COMPLETE");
        if (nearly_canon.count(m.canon.encoding))
            out.problems.push_back("duplicate canonical form among nearly members");
        nearly_canon[m.canon.encoding] = static_cast<int>(i);
        if (i >= f.nearly_parents.size() || f.nearly_parents[i].empty())
            out.problems.push_back("nearly member " + std::to_string(i) +
                                   " is not a face of any complete member");
    }
    // occurrence subsets must reproduce the member up to isomorphism
    for (size_t i = 0; i < f.nearly_parents.size() && i < f.nearly.size(); ++i) {
        for (const NearlyOccurrence& occ : f.nearly_parents[i]) {
            Subtrack st = trim(f.complete[occ.parent].track, occ.kept);
            if (!st.valid || canonical_form(st.track).encoding != f.nearly[i].canon.encoding)
                out.problems.push_back("occurrence record of nearly member " + std::to_string(i) +
                                       " does not reproduce it");
        }
    }
    out.ok = out.problems.empty();
    return out;
}

Partition standard_partition(const StandardTrackFamily& f) {
    FamilyValidation fv = validate_family(f);
    if (!fv.ok) {
        std::string msg = "standard_partition: family rejected:";
        for (const std::string& p : fv.problems) msg += "\n  " + p;
        throw Error(msg);
    }

    Partition p;
    p.provenance_note =
        "within-chart disjointness verified exactly; disjointness across charts is an assumption "
        "of the reference-chart model and is not checked";
    for (size_t i = 0; i < f.complete.size(); ++i) {
        p.charts.push_back(f.complete[i].track);
        p.complete.push_back(make_chart_member(f.complete[i].track, static_cast<int>(i)));
    }

    for (size_t i = 0; i < f.nearly.size(); ++i) {
        if (f.nearly_parents[i].empty())
            throw Error("standard_partition: nearly member without a parent face");
        // one partition entry per chart the subtrack is a face of
        std::vector<bool> chart_done(f.complete.size(), false);
        for (const NearlyOccurrence& occ : f.nearly_parents[i]) {
            if (chart_done[occ.parent]) continue;
            chart_done[occ.parent] = true;
            Subtrack st = trim(f.complete[occ.parent].track, occ.kept);
            if (!st.valid) throw Error("standard_partition: occurrence fails to trim");
            PartitionMember m;
            m.track = st.track;
            m.kind = TrackClass::NearlyComplete;
            m.chart = occ.parent;
            m.to_chart = st.inclusion;
            m.canon = f.nearly[i].canon;
            m.chart_rays = member_chart_rays(m.track, m.to_chart);
            m.history = "chart" + std::to_string(occ.parent) + " face" + std::to_string(i);
            m.boundary_sigma = true;

            // exact face-lattice check: the image cone must equal the face of
            // the chart cone cut out by the surviving support
            MeasureCone chart_cone = measure_cone(f.complete[occ.parent].track);
            std::vector<IntVec> face = chart_cone.face_rays(st.kept);
            std::vector<IntVec> image = m.chart_rays;
            std::sort(face.begin(), face.end());
            if (face != image)
                throw Error("standard_partition: face-lattice violation for nearly member " +
                            std::to_string(i));
            p.nearly.push_back(std::move(m));
        }
    }

    // relative interiors of distinct faces within one chart must be disjoint
    for (size_t a = 0; a < p.nearly.size(); ++a)
        for (size_t b = a + 1; b < p.nearly.size(); ++b) {
            if (p.nearly[a].chart != p.nearly[b].chart) continue;
            int n = p.charts[p.nearly[a].chart].num_branches();
            if (relint_intersect(p.nearly[a].chart_rays, p.nearly[b].chart_rays, n))
                throw Error("standard_partition: overlapping nearly faces in one chart");
        }
    return p;
}

}  // namespace tracklab
