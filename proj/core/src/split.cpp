#include "tracklab/split.hpp"

#include <algorithm>

namespace tracklab {

namespace {

struct Quadrants {
    int u, v;           // switches at end 0 / end 1 of the large branch
    BranchEnd p, q;     // small-left / small-right at u
    BranchEnd r, s;     // small-left / small-right at v
};

Quadrants quadrants_of(const TrainTrack& t, int branch) {
    const Branch& br = t.branches[branch];
    if (br.is_loop() || br.ends[0].slot != SLOT_LARGE || br.ends[1].slot != SLOT_LARGE)
        throw Error("split: branch " + std::to_string(branch) + " is not large");
    Quadrants qd;
    qd.u = br.ends[0].sw;
    qd.v = br.ends[1].sw;
    qd.p = t.switches[qd.u].slots[SLOT_SMALL_LEFT];
    qd.q = t.switches[qd.u].slots[SLOT_SMALL_RIGHT];
    qd.r = t.switches[qd.v].slots[SLOT_SMALL_LEFT];
    qd.s = t.switches[qd.v].slots[SLOT_SMALL_RIGHT];
    return qd;
}

void set_slot(TrainTrack& t, int sw, int slot, BranchEnd be) {
    t.switches[sw].slots[slot] = be;
    t.branches[be.branch].ends[be.end] = Attach{sw, slot};
}

// Punctures carry over by matching each child circle to the parent circle
// seen along any surviving branch side (the diagonal keeps the old index
// and is excluded from the matching).
void transfer_regions(const TrainTrack& parent, TrainTrack& child, int diagonal) {
    std::vector<Circle> pwalks = boundary_walks(parent);
    std::vector<std::array<int, 2>> pside = circle_of_side(parent, pwalks);
    std::vector<int> pregion(pwalks.size(), -1);
    for (size_t r = 0; r < parent.regions.size(); ++r) {
        if (parent.regions[r].circles.size() != 1u)
            throw Error("split: parent regions must be single-circle");
        pregion[parent.regions[r].circles[0]] = static_cast<int>(r);
    }

    std::vector<Circle> cwalks = boundary_walks(child);
    child.regions.clear();
    for (size_t ci = 0; ci < cwalks.size(); ++ci) {
        int from_parent = -1;
        for (const WalkStep& st : cwalks[ci].steps) {
            if (st.branch == diagonal) continue;
            int pc = pside[st.branch][st.end];
            if (from_parent < 0) from_parent = pc;
            if (from_parent != pc)
                throw Error("split: inconsistent region transfer");
        }
        if (from_parent < 0) throw Error("split: circle with only diagonal sides");
        Region reg;
        reg.punctures = parent.regions[pregion[from_parent]].punctures;
        reg.circles = {static_cast<int>(ci)};
        child.regions.push_back(std::move(reg));
    }
    if (child.regions.size() != parent.regions.size())
        throw Error("split: region count changed");
}

}  // namespace

SplitResult split(const TrainTrack& t, const SplitMove& m) {
    Quadrants qd = quadrants_of(t, m.branch);
    SplitResult out;
    out.child = t;
    out.child.regions.clear();
    int d = m.branch;  // diagonal reuses the index

    if (m.side == Side::Left) {
        set_slot(out.child, qd.u, SLOT_LARGE, qd.p);
        set_slot(out.child, qd.u, SLOT_SMALL_LEFT, BranchEnd{d, 0});
        set_slot(out.child, qd.u, SLOT_SMALL_RIGHT, qd.s);
        set_slot(out.child, qd.v, SLOT_LARGE, qd.r);
        set_slot(out.child, qd.v, SLOT_SMALL_LEFT, BranchEnd{d, 1});
        set_slot(out.child, qd.v, SLOT_SMALL_RIGHT, qd.q);
    } else {
        set_slot(out.child, qd.u, SLOT_LARGE, qd.s);
        set_slot(out.child, qd.u, SLOT_SMALL_LEFT, qd.p);
        set_slot(out.child, qd.u, SLOT_SMALL_RIGHT, BranchEnd{d, 0});
        set_slot(out.child, qd.v, SLOT_LARGE, qd.q);
        set_slot(out.child, qd.v, SLOT_SMALL_LEFT, qd.r);
        set_slot(out.child, qd.v, SLOT_SMALL_RIGHT, BranchEnd{d, 1});
    }

    transfer_regions(t, out.child, d);

    out.carrying = IntMatrix::identity(t.num_branches());
    if (m.side == Side::Left) {
        out.carrying.at(m.branch, qd.q.branch) += 1;
        out.carrying.at(m.branch, qd.s.branch) += 1;
    } else {
        out.carrying.at(m.branch, qd.p.branch) += 1;
        out.carrying.at(m.branch, qd.r.branch) += 1;
    }
    return out;
}

CentralResult central_subtrack(const TrainTrack& t, int branch) {
    SplitResult left = split(t, SplitMove{branch, Side::Left});
    std::vector<bool> keep(left.child.num_branches(), true);
    keep[branch] = false;
    Subtrack st = trim(left.child, keep);
    if (!st.valid) throw Error("central_subtrack: " + st.reject_reason);
    CentralResult out;
    out.track = std::move(st.track);
    out.carrying = left.carrying.times(st.inclusion);
    return out;
}

std::vector<FullSplitChild> full_splits(const TrainTrack& t) {
    std::vector<int> larges = large_branches(t);
    int l = static_cast<int>(larges.size());
    if (l > 20) throw Error("full_splits: too many large branches");
    std::vector<FullSplitChild> out;
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        FullSplitChild fc;
        fc.child = t;
        fc.carrying = IntMatrix::identity(t.num_branches());
        for (int i = 0; i < l; ++i) {
            SplitMove mv{larges[i], ((mask >> i) & 1u) ? Side::Right : Side::Left};
            SplitResult sr = split(fc.child, mv);
            fc.child = std::move(sr.child);
            fc.carrying = fc.carrying.times(sr.carrying);
            fc.moves.push_back(mv);
        }
        out.push_back(std::move(fc));
    }
    return out;
}

SplitTowardResult split_toward(const TrainTrack& t, const RatVec& w) {
    if (static_cast<int>(w.size()) != t.num_branches()) throw Error("split_toward: size mismatch");
    for (const Rat& x : w)
        if (sgn(x) <= 0) throw Error("split_toward: measure must be strictly positive");
    {
        RatMatrix a = switch_matrix(t);
        for (const Rat& v : a.apply(w))
            if (v != 0) throw Error("split_toward: measure violates the switch conditions");
    }

    SplitTowardResult out;
    out.next = t;
    out.carrying = IntMatrix::identity(t.num_branches());
    out.next_measure = w;

    std::vector<int> larges = large_branches(t);
    for (int b : larges) {
        Quadrants qd = quadrants_of(out.next, b);
        const Rat& wp = out.next_measure[qd.p.branch];
        const Rat& ws = out.next_measure[qd.s.branch];
        if (wp == ws) {
            out.degenerate = true;
            out.degenerate_branch = b;
            CentralResult central = central_subtrack(out.next, b);
            central.carrying = out.carrying.times(central.carrying);
            out.degenerate_common = std::move(central);
            return out;
        }
        SplitMove mv{b, wp > ws ? Side::Left : Side::Right};
        SplitResult sr = split(out.next, mv);
        Rat diag = wp > ws ? wp - ws : ws - wp;
        out.next_measure[b] = diag;
        out.next = std::move(sr.child);
        out.carrying = out.carrying.times(sr.carrying);
        out.moves.push_back(mv);
    }
    return out;
}

}  // namespace tracklab
