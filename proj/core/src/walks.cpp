#include "tracklab/track.hpp"

namespace tracklab {

namespace {

// phi(h) = sigma(alpha(h)): cross the branch, then turn through the CCW-next
// slot at the arrival switch. Orbits are the boundary circles.
WalkStep next_step(const TrainTrack& t, int branch, int end, bool* cusp) {
    const Attach& arrive = t.branches[branch].ends[1 - end];
    int next_slot = (arrive.slot + 1) % 3;
    *cusp = (arrive.slot == SLOT_SMALL_LEFT);  // corner SMALL_LEFT -> SMALL_RIGHT
    BranchEnd occ = t.switches[arrive.sw].slots[next_slot];
    return WalkStep{occ.branch, occ.end, false};
}

}  // namespace

std::vector<Circle> boundary_walks(const TrainTrack& t) {
    std::vector<Circle> out;
    int nb = t.num_branches();
    std::vector<std::array<bool, 2>> seen(nb, {false, false});

    for (int b = 0; b < nb; ++b) {
        for (int e = 0; e < 2; ++e) {
            if (seen[b][e]) continue;
            if (t.branches[b].is_loop()) {
                seen[b][e] = true;
                Circle c;
                c.steps.push_back(WalkStep{b, e, false});
                out.push_back(std::move(c));
                continue;
            }
            Circle c;
            int cb = b, ce = e;
            do {
                seen[cb][ce] = true;
                bool cusp = false;
                WalkStep nxt = next_step(t, cb, ce, &cusp);
                c.steps.push_back(WalkStep{cb, ce, cusp});
                if (cusp) ++c.cusps;
                cb = nxt.branch;
                ce = nxt.end;
            } while (!(cb == b && ce == e));
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<std::array<int, 2>> circle_of_side(const TrainTrack& t, const std::vector<Circle>& walks) {
    std::vector<std::array<int, 2>> side(t.num_branches(), {-1, -1});
    for (size_t ci = 0; ci < walks.size(); ++ci)
        for (const WalkStep& s : walks[ci].steps) side[s.branch][s.end] = static_cast<int>(ci);
    return side;
}

std::vector<int> branch_components(const TrainTrack& t, int* num_components) {
    int nb = t.num_branches();
    int ns = t.num_switches();
    std::vector<int> parent(nb + ns);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int b = 0; b < nb; ++b)
        for (int e = 0; e < 2; ++e)
            if (t.branches[b].ends[e].valid()) unite(b, nb + t.branches[b].ends[e].sw);

    std::vector<int> comp(nb, -1);
    std::vector<int> labels;
    for (int b = 0; b < nb; ++b) {
        int root = find(b);
        int lab = -1;
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == root) lab = static_cast<int>(i);
        if (lab < 0) {
            lab = static_cast<int>(labels.size());
            labels.push_back(root);
        }
        comp[b] = lab;
    }
    if (num_components) *num_components = static_cast<int>(labels.size());
    return comp;
}

bool is_connected(const TrainTrack& t) {
    if (t.num_branches() == 0) return false;
    int n = 0;
    branch_components(t, &n);
    return n == 1;
}

}  // namespace tracklab
