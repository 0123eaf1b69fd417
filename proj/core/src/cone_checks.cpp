#include "tracklab/cone_checks.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tracklab/lp.hpp"

namespace tracklab {

std::vector<IntVec> image_rays(const TrainTrack& child, const IntMatrix& carrying) {
    std::vector<IntVec> out;
    for (const IntVec& r : extreme_rays(child)) {
        IntVec g = carrying.apply(r);
        IntVec prim = primitive_integer(to_rat(g));
        out.push_back(std::move(prim));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MembershipResult cone_image_membership(const TrainTrack& child, const IntMatrix& carrying,
                                       const RatVec& w) {
    // { M x = w, A x = 0, x >= 0 }
    RatMatrix a = switch_matrix(child);
    RatMatrix sys(carrying.rows + a.rows, carrying.cols);
    RatVec rhs(carrying.rows + a.rows, Rat(0));
    for (int r = 0; r < carrying.rows; ++r) {
        for (int c = 0; c < carrying.cols; ++c) sys.at(r, c) = Rat(carrying.at(r, c));
        rhs[r] = w[r];
    }
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) sys.at(carrying.rows + r, c) = a.at(r, c);
    LPFeas feas = lp_feasible(sys, rhs);
    MembershipResult out;
    out.inside = feas.feasible;
    if (feas.feasible) out.preimage = feas.x;
    return out;
}

bool cone_subset(const std::vector<IntVec>& rays, const HRep& h) {
    for (const IntVec& r : rays)
        if (!h.contains(r)) return false;
    return true;
}

bool relint_intersect(const std::vector<IntVec>& rays_a, const std::vector<IntVec>& rays_b, int n) {
    if (rays_a.empty() || rays_b.empty()) return false;
    HRep ha = hrep_of_rays(rays_a, n);
    HRep hb = hrep_of_rays(rays_b, n);
    // equations as two-sided inequalities with rhs 0, facets strict via >= 1
    std::vector<RatVec> rows;
    RatVec rhs;
    auto add = [&](const RatVec& row, const Rat& lo) {
        rows.push_back(row);
        rhs.push_back(lo);
    };
    for (const HRep* h : {&ha, &hb}) {
        for (const RatVec& e : h->eqs) {
            RatVec neg(e.size());
            for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
            add(e, Rat(0));
            add(neg, Rat(0));
        }
        for (const RatVec& f : h->ineqs) add(f, Rat(1));
    }
    RatMatrix f(static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n; ++c) f.at(static_cast<int>(r), c) = rows[r][c];
    return lp_feasible_ineq_free(f, rhs).feasible;
}

namespace {

RatVec normalize_row(const RatVec& row) {
    IntVec prim = primitive_integer(row);
    int lead = -1;
    for (size_t i = 0; i < prim.size(); ++i)
        if (prim[i] != 0) { lead = static_cast<int>(i); break; }
    if (lead >= 0 && prim[lead] < 0)
        for (Int& v : prim) v = -v;
    return to_rat(prim);
}

}  // namespace

IdentityReport verify_cone_identity(const TrainTrack& parent, const std::vector<ChildCone>& children,
                                    const TrainTrack* common, const IntMatrix* common_carrying) {
    IdentityReport rep;
    RatMatrix ap = switch_matrix(parent);
    int nb = parent.num_branches();

    // carrying matrices must be nonnegative and map kernels into the kernel
    for (size_t i = 0; i < children.size(); ++i) {
        const ChildCone& ch = children[i];
        if (!ch.carrying->nonnegative()) throw Error("verify_cone_identity: negative carrying entry");
        if (ch.carrying->rows != nb || ch.carrying->cols != ch.track->num_branches())
            throw Error("verify_cone_identity: carrying shape mismatch");
        RatMatrix ac = switch_matrix(*ch.track);
        KernelBasis kb = kernel_basis(ac);
        for (int j = 0; j < kb.basis.cols; ++j) {
            RatVec v(ac.cols);
            for (int r = 0; r < ac.cols; ++r) v[r] = kb.basis.at(r, j);
            RatVec img = ch.carrying->to_rational().apply(v);
            for (const Rat& x : ap.apply(img))
                if (x != 0) throw Error("verify_cone_identity: carrying does not map kernel to kernel");
        }
    }

    std::vector<std::vector<IntVec>> gens(children.size());
    std::vector<HRep> hreps(children.size());
    for (size_t i = 0; i < children.size(); ++i) {
        gens[i] = image_rays(*children[i].track, *children[i].carrying);
        hreps[i] = hrep_of_rays(gens[i], nb);
        for (const IntVec& g : gens[i]) {
            bool ok = true;
            for (const Int& x : g)
                if (x < 0) ok = false;
            RatVec res = ap.apply(to_rat(g));
            for (const Rat& x : res)
                if (x != 0) ok = false;
            if (!ok) {
                rep.containment_ok = false;
                rep.witnesses.push_back(g);
                rep.detail += "child " + std::to_string(i) + " image ray leaves the parent cone\n";
            }
        }
    }

    // --- union over the parent kernel coordinates ---------------------------
    KernelBasis kb = kernel_basis(ap);
    int d = kb.basis.cols;
    std::vector<RatVec> b_rows;  // nonnegativity in kernel coordinates
    for (int b = 0; b < nb; ++b) {
        RatVec row(d);
        for (int j = 0; j < d; ++j) row[j] = kb.basis.at(b, j);
        b_rows.push_back(std::move(row));
    }
    auto to_kernel_row = [&](const RatVec& amb) {
        RatVec row(d, Rat(0));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < nb; ++i)
                if (amb[i] != 0 && kb.basis.at(i, j) != 0) row[j] += amb[i] * kb.basis.at(i, j);
        return row;
    };

    std::set<std::string> seen;
    std::vector<RatVec> hyper;
    for (const HRep& h : hreps)
        for (const RatVec& f : h.ineqs) {
            RatVec row = normalize_row(to_kernel_row(f));
            bool zero = true;
            for (const Rat& x : row)
                if (x != 0) zero = false;
            if (zero) continue;
            std::string key = vec_to_string(row);
            if (seen.insert(key).second) hyper.push_back(row);
        }

    auto feasible_point = [&](const std::vector<std::pair<RatVec, int>>& signed_rows, RatVec* point) {
        std::vector<RatVec> rows;
        RatVec rhs;
        for (const RatVec& br : b_rows) {
            rows.push_back(br);
            rhs.push_back(Rat(1));
        }
        for (const auto& sr : signed_rows) {
            RatVec row(d);
            for (int j = 0; j < d; ++j) row[j] = sr.second > 0 ? sr.first[j] : -sr.first[j];
            rows.push_back(std::move(row));
            rhs.push_back(Rat(1));
        }
        RatMatrix f(static_cast<int>(rows.size()), d);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < d; ++c) f.at(static_cast<int>(r), c) = rows[r][c];
        LPFeas feas = lp_feasible_ineq_free(f, rhs);
        if (feas.feasible && point) *point = feas.x;
        return feas.feasible;
    };

    auto lift = [&](const RatVec& y) {
        RatVec x(nb, Rat(0));
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < d; ++j)
                if (kb.basis.at(i, j) != 0) x[i] += kb.basis.at(i, j) * y[j];
        return x;
    };

    std::function<void(size_t, std::vector<std::pair<RatVec, int>>&)> dfs =
        [&](size_t idx, std::vector<std::pair<RatVec, int>>& chosen) {
            if (!rep.union_ok) return;
            if (idx == hyper.size()) {
                RatVec y;
                if (!feasible_point(chosen, &y)) return;  // cell degenerate against C_p
                RatVec w = lift(y);
                for (size_t i = 0; i < children.size(); ++i)
                    if (hreps[i].contains(w)) return;
                rep.union_ok = false;
                rep.witnesses.push_back(primitive_integer(w));
                rep.detail += "uncovered cell witness " + vec_to_string(primitive_integer(w)) + "\n";
                return;
            }
            for (int sign : {+1, -1}) {
                chosen.push_back({hyper[idx], sign});
                if (feasible_point(chosen, nullptr)) dfs(idx + 1, chosen);
                chosen.pop_back();
                if (!rep.union_ok) return;
            }
        };
    {
        std::vector<std::pair<RatVec, int>> chosen;
        if (feasible_point(chosen, nullptr))  // parent cone full-dimensional
            dfs(0, chosen);
    }

    // --- pairwise intersection vs the declared common subtrack --------------
    if (common != nullptr) {
        if (children.size() != 2u) {
            rep.intersection_ok = false;
            rep.detail += "common subtrack declared but child count != 2\n";
        } else {
            std::vector<RatVec> eqs, ineqs;
            for (const HRep& h : {hreps[0], hreps[1]}) {
                for (const RatVec& e : h.eqs) eqs.push_back(e);
                for (const RatVec& f : h.ineqs) ineqs.push_back(f);
            }
            std::vector<IntVec> inter = dd_rays(eqs, ineqs, nb);
            std::vector<IntVec> inter_canon = canonical_rays(inter, nb);
            std::vector<IntVec> common_gens = image_rays(*common, *common_carrying);
            std::vector<IntVec> common_canon = canonical_rays(common_gens, nb);
            std::sort(inter_canon.begin(), inter_canon.end());
            std::sort(common_canon.begin(), common_canon.end());
            if (inter_canon != common_canon) {
                rep.intersection_ok = false;
                rep.detail += "intersection of child images differs from the common subtrack cone\n";
                for (const IntVec& r : inter_canon)
                    if (!std::binary_search(common_canon.begin(), common_canon.end(), r))
                        rep.witnesses.push_back(r);
                for (const IntVec& r : common_canon)
                    if (!std::binary_search(inter_canon.begin(), inter_canon.end(), r))
                        rep.witnesses.push_back(r);
            }
        }
    }
    return rep;
}

}  // namespace tracklab
