#include "tracklab/trim.hpp"

#include <algorithm>
#include <map>

namespace tracklab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Subtrack trim(const TrainTrack& parent, std::vector<bool> keep) {
    Subtrack out;
    int nb = parent.num_branches();
    if (static_cast<int>(keep.size()) != nb) throw Error("trim: keep mask size mismatch");

    auto reject = [&](const std::string& why) {
        out.valid = false;
        out.reject_reason = why;
        return out;
    };

    // dead-end recursion: a switch left with exactly one survivor kills it
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < parent.num_switches(); ++s) {
            int count = 0;
            int lone = -1;
            for (int i = 0; i < 3; ++i) {
                const BranchEnd& be = parent.switches[s].slots[i];
                if (keep[be.branch]) {
                    ++count;
                    lone = be.branch;
                }
            }
            if (count == 1) {
                keep[lone] = false;
                changed = true;
            }
        }
    }
    out.kept = keep;
    out.missing = 0;
    for (int b = 0; b < nb; ++b)
        if (!keep[b]) ++out.missing;
    int surviving = nb - out.missing;
    if (surviving == 0) return reject("empty after trimming");

    // classify switches
    enum class SwFate { Gone, Smooth, Keep };
    std::vector<SwFate> fate(parent.num_switches());
    std::vector<std::array<BranchEnd, 2>> smooth_pair(parent.num_switches());
    for (int s = 0; s < parent.num_switches(); ++s) {
        std::vector<std::pair<int, BranchEnd>> live;  // (slot, occupant)
        for (int i = 0; i < 3; ++i) {
            const BranchEnd& be = parent.switches[s].slots[i];
            if (keep[be.branch]) live.push_back({i, be});
        }
        if (live.empty()) {
            fate[s] = SwFate::Gone;
        } else if (live.size() == 3u) {
            fate[s] = SwFate::Keep;
        } else {
            // exactly two (one is impossible after the recursion)
            if (live[0].first != SLOT_LARGE)
                return reject("cusped bivalent switch " + std::to_string(s));
            fate[s] = SwFate::Smooth;
            smooth_pair[s] = {live[0].second, live[1].second};
        }
    }

    // chains: surviving non-loop branches joined through smoothed switches
    // joined_to[b][e] = the branch-end fused with (b,e), or invalid
    std::vector<std::array<BranchEnd, 2>> joined(nb);
    for (int s = 0; s < parent.num_switches(); ++s) {
        if (fate[s] != SwFate::Smooth) continue;
        const BranchEnd& x = smooth_pair[s][0];
        const BranchEnd& y = smooth_pair[s][1];
        joined[x.branch][x.end] = y;
        joined[y.branch][y.end] = x;
    }

    auto terminal = [&](int b, int e) {
        const Attach& at = parent.branches[b].ends[e];
        return fate[at.sw] == SwFate::Keep;
    };

    std::vector<bool> used(nb, false);
    struct ChainRec {
        std::vector<std::array<int, 2>> content;  // (parent branch, direction)
        bool is_cycle = false;
        Attach a0, a1;  // terminal attachments when not a cycle
    };
    std::vector<ChainRec> chains;

    auto walk_chain = [&](int b0, int e0) {
        // traverse starting at terminal end (b0,e0), exiting through 1-e0
        ChainRec rec;
        int b = b0, e = e0;
        rec.a0 = parent.branches[b0].ends[e0];
        for (;;) {
            used[b] = true;
            rec.content.push_back({b, e});
            if (terminal(b, 1 - e)) {
                rec.a1 = parent.branches[b].ends[1 - e];
                return rec;
            }
            BranchEnd nxt = joined[b][1 - e];
            b = nxt.branch;
            e = nxt.end;
        }
    };

    for (int b = 0; b < nb; ++b) {
        if (!keep[b] || used[b] || parent.branches[b].is_loop()) continue;
        if (terminal(b, 0))
            chains.push_back(walk_chain(b, 0));
        else if (terminal(b, 1))
            chains.push_back(walk_chain(b, 1));
    }
    // remaining survivors: all-bivalent cycles -> free loops
    for (int b = 0; b < nb; ++b) {
        if (!keep[b] || used[b] || parent.branches[b].is_loop()) continue;
        ChainRec rec;
        rec.is_cycle = true;
        int cb = b, ce = 0;
        do {
            used[cb] = true;
            rec.content.push_back({cb, ce});
            BranchEnd nxt = joined[cb][1 - ce];
            cb = nxt.branch;
            ce = nxt.end;
        } while (cb != b || ce != 0);
        chains.push_back(std::move(rec));
    }
    // parent loops survive as loops
    for (int b = 0; b < nb; ++b) {
        if (!keep[b] || !parent.branches[b].is_loop()) continue;
        ChainRec rec;
        rec.is_cycle = true;
        rec.content.push_back({b, 0});
        chains.push_back(std::move(rec));
    }

    std::sort(chains.begin(), chains.end(), [](const ChainRec& a, const ChainRec& b) {
        int ma = a.content[0][0], mb = b.content[0][0];
        for (const auto& c : a.content) ma = std::min(ma, c[0]);
        for (const auto& c : b.content) mb = std::min(mb, c[0]);
        return ma < mb;
    });

    // assemble the child track
    TrainTrack child;
    child.surface = parent.surface;
    std::vector<int> sw_map(parent.num_switches(), -1);
    for (int s = 0; s < parent.num_switches(); ++s)
        if (fate[s] == SwFate::Keep) {
            sw_map[s] = child.num_switches();
            child.switches.push_back(Switch{});
        }
    for (size_t c = 0; c < chains.size(); ++c) {
        const ChainRec& rec = chains[c];
        Branch br;
        if (!rec.is_cycle) {
            br.ends[0] = Attach{sw_map[rec.a0.sw], rec.a0.slot};
            br.ends[1] = Attach{sw_map[rec.a1.sw], rec.a1.slot};
            child.switches[br.ends[0].sw].slots[br.ends[0].slot] = BranchEnd{static_cast<int>(c), 0};
            child.switches[br.ends[1].sw].slots[br.ends[1].slot] = BranchEnd{static_cast<int>(c), 1};
        }
        child.branches.push_back(br);
        out.contents.push_back(rec.content);
    }

    // region merging over deleted pieces
    int nregions = static_cast<int>(parent.regions.size());
    std::vector<Circle> pwalks = boundary_walks(parent);
    std::vector<std::array<int, 2>> pside = circle_of_side(parent, pwalks);
    std::vector<int> region_of_circle(pwalks.size(), -1);
    for (int r = 0; r < nregions; ++r)
        for (int ci : parent.regions[r].circles) region_of_circle[ci] = r;
    auto side_region = [&](int b, int dir) { return region_of_circle[pside[b][dir]]; };

    UnionFind uf(nregions);
    std::vector<int> del_branches_in(nregions, 0), del_switches_in(nregions, 0);
    for (int b = 0; b < nb; ++b) {
        if (keep[b]) continue;
        if (parent.branches[b].is_loop()) {
            uf.unite(side_region(b, 0), side_region(b, 1));
        } else {
            uf.unite(side_region(b, 0), side_region(b, 1));
        }
    }
    for (int b = 0; b < nb; ++b)
        if (!keep[b]) ++del_branches_in[uf.find(side_region(b, 0))];
    for (int s = 0; s < parent.num_switches(); ++s) {
        if (fate[s] != SwFate::Gone) continue;
        int b = parent.switches[s].slots[0].branch;
        ++del_switches_in[uf.find(side_region(b, 0))];
    }

    // accumulate per-class data
    std::map<int, int> class_index;
    struct ClassData {
        int chi_cw = 0;
        int punctures = 0;
        std::vector<int> circles;
    };
    std::vector<ClassData> classes;
    for (int r = 0; r < nregions; ++r) {
        int root = uf.find(r);
        if (!class_index.count(root)) {
            class_index[root] = static_cast<int>(classes.size());
            ClassData cd;
            cd.chi_cw = -del_branches_in[root] + del_switches_in[root];
            classes.push_back(cd);
        }
        ClassData& cd = classes[class_index[root]];
        cd.chi_cw += parent.regions[r].euler_compact();
        cd.punctures += parent.regions[r].punctures;
    }

    // map child circles to classes via parent sides
    std::vector<Circle> cwalks = boundary_walks(child);
    for (size_t ci = 0; ci < cwalks.size(); ++ci) {
        const WalkStep& st = cwalks[ci].steps[0];
        const ChainRec& rec = chains[st.branch];
        int pb, pdir;
        if (st.end == 0) {
            pb = rec.content[0][0];
            pdir = rec.content[0][1];
        } else {
            pb = rec.content.back()[0];
            pdir = 1 - rec.content.back()[1];
        }
        int cls = class_index.at(uf.find(side_region(pb, pdir)));
        classes[cls].circles.push_back(static_cast<int>(ci));
    }

    for (const ClassData& cd : classes) {
        if (cd.circles.empty())
            return reject("internal: region class with no surviving boundary");
        if (cd.chi_cw != 2 - static_cast<int>(cd.circles.size()))
            throw Error("trim: region Euler bookkeeping mismatch (chi=" + std::to_string(cd.chi_cw) +
                        ", circles=" + std::to_string(cd.circles.size()) + ")");
        Region r;
        r.punctures = cd.punctures;
        r.circles = cd.circles;
        child.regions.push_back(std::move(r));
    }

    ValidationReport rep = validate_track(child);
    if (!rep.ok()) return reject("invalid subtrack: " + rep.to_string());

    // inclusion matrix: child weights -> parent weights
    out.inclusion = IntMatrix(nb, child.num_branches());
    for (int c = 0; c < child.num_branches(); ++c)
        for (const auto& pc : out.contents[c]) out.inclusion.at(pc[0], c) += 1;

    out.track = std::move(child);
    out.valid = true;
    return out;
}

std::vector<Subtrack> enumerate_subtracks(const TrainTrack& parent) {
    int nb = parent.num_branches();
    if (nb > 20) throw Error("enumerate_subtracks: too many branches for exhaustive enumeration");
    std::vector<Subtrack> out;
    for (unsigned mask = 1; mask + 1 < (1u << nb); ++mask) {
        std::vector<bool> keep(nb);
        for (int b = 0; b < nb; ++b) keep[b] = (mask >> b) & 1u;
        Subtrack st = trim(parent, keep);
        if (!st.valid) continue;
        // dead-end recursion may shrink the subset to one already covered by
        // a smaller mask; keep only masks that equal their own closure
        bool closed = true;
        for (int b = 0; b < nb; ++b)
            if (keep[b] != st.kept[b]) closed = false;
        if (closed) out.push_back(std::move(st));
    }
    return out;
}

}  // namespace tracklab
