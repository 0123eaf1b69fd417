#include "tracklab/canonical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace tracklab {

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

struct Labeling {
    std::vector<int> sw_label;      // parent switch -> label
    std::vector<int> br_label;      // parent branch -> label
    std::vector<int> end_flip;      // parent branch -> 0/1 (which end is canonical end 0)
};

// BFS relabeling rooted at half-edge (b0,e0); only for components with
// switches. Returns the structural encoding and the labeling.
std::string bfs_encode(const TrainTrack& t, const std::vector<int>& comp_branches,
                       const std::vector<int>& comp_switches, int b0, int e0, Labeling& lab) {
    lab.sw_label.assign(t.num_switches(), -1);
    lab.br_label.assign(t.num_branches(), -1);
    lab.end_flip.assign(t.num_branches(), 0);

    int next_sw = 0, next_br = 0;
    std::deque<int> queue;
    int s0 = t.branches[b0].ends[e0].sw;
    lab.sw_label[s0] = next_sw++;
    lab.br_label[b0] = next_br++;
    lab.end_flip[b0] = e0;
    queue.push_back(s0);

    std::vector<int> order;  // switches in label order
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        order.push_back(s);
        for (int i = 0; i < 3; ++i) {
            const BranchEnd& be = t.switches[s].slots[i];
            if (lab.br_label[be.branch] < 0) {
                lab.br_label[be.branch] = next_br++;
                lab.end_flip[be.branch] = be.end;
            }
            int other_sw = t.branches[be.branch].ends[1 - be.end].sw;
            if (lab.sw_label[other_sw] < 0) {
                lab.sw_label[other_sw] = next_sw++;
                queue.push_back(other_sw);
            }
        }
    }
    if (next_sw != static_cast<int>(comp_switches.size()) ||
        next_br != static_cast<int>(comp_branches.size()))
        throw Error("bfs_encode: component not reached entirely");

    std::ostringstream os;
    os << "s" << next_sw << "b" << next_br << ":";
    for (int s : order) {
        for (int i = 0; i < 3; ++i) {
            const BranchEnd& be = t.switches[s].slots[i];
            int canon_end = (be.end == lab.end_flip[be.branch]) ? 0 : 1;
            os << lab.br_label[be.branch] << "." << canon_end << (i < 2 ? "," : ";");
        }
    }
    return os.str();
}

}  // namespace

CanonicalForm canonical_form(const TrainTrack& t) {
    int ncomp = 0;
    std::vector<int> comp = branch_components(t, &ncomp);
    std::vector<Circle> walks = boundary_walks(t);
    std::vector<std::array<int, 2>> side = circle_of_side(t, walks);
    std::vector<int> region_of_circle(walks.size(), -1);
    for (size_t r = 0; r < t.regions.size(); ++r)
        for (int ci : t.regions[r].circles) region_of_circle[ci] = static_cast<int>(r);

    struct CompInfo {
        std::vector<int> branches;
        std::vector<int> switches;
        bool is_loop = false;
        std::string best;                    // structural encoding
        std::vector<Labeling> best_labels;   // all labelings attaining it
    };
    std::vector<CompInfo> comps(ncomp);
    for (int b = 0; b < t.num_branches(); ++b) comps[comp[b]].branches.push_back(b);
    for (int s = 0; s < t.num_switches(); ++s) {
        const BranchEnd& be = t.switches[s].slots[0];
        comps[comp[be.branch]].switches.push_back(s);
    }

    for (CompInfo& ci : comps) {
        if (ci.switches.empty()) {
            ci.is_loop = true;
            ci.best = "loop";
            continue;
        }
        for (int b : ci.branches) {
            for (int e = 0; e < 2; ++e) {
                Labeling lab;
                std::string enc = bfs_encode(t, ci.branches, ci.switches, b, e, lab);
                if (ci.best.empty() || enc < ci.best) {
                    ci.best = enc;
                    ci.best_labels.clear();
                    ci.best_labels.push_back(std::move(lab));
                } else if (enc == ci.best) {
                    ci.best_labels.push_back(std::move(lab));
                }
            }
        }
    }

    // component order: sorted by structural encoding; ties explored below
    std::vector<int> comp_order(ncomp);
    for (int i = 0; i < ncomp; ++i) comp_order[i] = i;
    std::sort(comp_order.begin(), comp_order.end(), [&](int a, int b) {
        if (comps[a].best != comps[b].best) return comps[a].best < comps[b].best;
        return a < b;
    });

    // Enumerate region encodings over: permutations within tied component
    // groups, labeling choices for switched components, side flips for loops.
    // Circles of a component in canonical order: recompute walk order under
    // the labeling and record circle ranks.
    auto circle_ranks = [&](const CompInfo& ci, const Labeling* lab, int flip,
                            std::map<int, std::pair<int, int>>& out, int comp_pos) {
        // maps global circle id -> (component position, circle rank)
        if (ci.is_loop) {
            int b = ci.branches[0];
            out[side[b][flip]] = {comp_pos, 0};
            out[side[b][1 - flip]] = {comp_pos, 1};
            return;
        }
        // canonical circle order: orbit of smallest unvisited (label, canon-end)
        std::vector<std::pair<std::array<int, 2>, int>> keyed;  // ((label, canon_end), circle)
        for (int b : ci.branches)
            for (int e = 0; e < 2; ++e) {
                int canon_end = (e == lab->end_flip[b]) ? 0 : 1;
                keyed.push_back({{lab->br_label[b], canon_end}, side[b][e]});
            }
        std::sort(keyed.begin(), keyed.end());
        int rank = 0;
        std::map<int, int> seen;
        for (const auto& kv : keyed) {
            if (seen.count(kv.second)) continue;
            seen[kv.second] = rank++;
        }
        for (const auto& kv : seen) out[kv.first] = {comp_pos, kv.second};
    };

    std::string best_total;
    // bounded search over tie permutations / labelings / flips
    long combos = 1;
    for (const CompInfo& ci : comps)
        combos *= ci.is_loop ? 2 : static_cast<long>(ci.best_labels.size());
    std::vector<std::vector<int>> groups;  // positions in comp_order with equal encoding
    for (int i = 0; i < ncomp;) {
        int j = i;
        while (j < ncomp && comps[comp_order[j]].best == comps[comp_order[i]].best) ++j;
        std::vector<int> g;
        for (int k = i; k < j; ++k) g.push_back(k);
        groups.push_back(g);
        long fact = 1;
        for (size_t k = 2; k <= g.size(); ++k) fact *= static_cast<long>(k);
        combos *= fact;
        i = j;
    }
    if (combos > 200000) throw Error("canonical_form: too many symmetric components");

    std::vector<int> arrangement = comp_order;

    std::function<void(size_t, std::vector<int>&)> rec_groups = [&](size_t gi, std::vector<int>& arr) {
        if (gi == groups.size()) {
            // per-component choice recursion
            std::function<void(size_t, std::map<int, std::pair<int, int>>&)> rec_choice =
                [&](size_t pos, std::map<int, std::pair<int, int>>& ranks) {
                    if (pos == arr.size()) {
                        // encode: structure + regions
                        std::ostringstream os;
                        for (int idx : arr) os << comps[idx].best << "|";
                        std::vector<std::string> region_strs;
                        for (const Region& r : t.regions) {
                            std::vector<std::pair<int, int>> cs;
                            for (int ci : r.circles) cs.push_back(ranks.at(ci));
                            std::sort(cs.begin(), cs.end());
                            std::ostringstream rs;
                            rs << "m" << r.punctures << "@";
                            for (auto& p : cs) rs << p.first << "." << p.second << ",";
                            region_strs.push_back(rs.str());
                        }
                        std::sort(region_strs.begin(), region_strs.end());
                        for (const std::string& rs : region_strs) os << rs << "/";
                        std::string enc = os.str();
                        if (best_total.empty() || enc < best_total) best_total = enc;
                        return;
                    }
                    const CompInfo& ci = comps[arr[pos]];
                    if (ci.is_loop) {
                        for (int flip = 0; flip < 2; ++flip) {
                            std::map<int, std::pair<int, int>> r2 = ranks;
                            circle_ranks(ci, nullptr, flip, r2, static_cast<int>(pos));
                            rec_choice(pos + 1, r2);
                        }
                    } else {
                        for (const Labeling& lab : ci.best_labels) {
                            std::map<int, std::pair<int, int>> r2 = ranks;
                            circle_ranks(ci, &lab, 0, r2, static_cast<int>(pos));
                            rec_choice(pos + 1, r2);
                        }
                    }
                };
            std::map<int, std::pair<int, int>> ranks;
            rec_choice(0, ranks);
            return;
        }
        std::vector<int>& g = groups[gi];
        std::vector<int> vals;
        for (int p : g) vals.push_back(arr[p]);
        std::sort(vals.begin(), vals.end());
        do {
            for (size_t k = 0; k < g.size(); ++k) arr[g[k]] = vals[k];
            rec_groups(gi + 1, arr);
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    rec_groups(0, arrangement);

    CanonicalForm cf;
    cf.encoding = best_total;
    cf.hash = fnv1a64(best_total);
    return cf;
}

}  // namespace tracklab
