#include "tracklab/cone.hpp"

#include <algorithm>
#include <map>

namespace tracklab {

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

RatMatrix switch_matrix(const TrainTrack& t) {
    RatMatrix a(t.num_switches(), t.num_branches());
    for (int s = 0; s < t.num_switches(); ++s) {
        for (int i = 0; i < 3; ++i) {
            const BranchEnd& be = t.switches[s].slots[i];
            if (!be.valid()) throw Error("switch_matrix: unused slot");
            a.at(s, be.branch) += (i == SLOT_LARGE) ? Rat(1) : Rat(-1);
        }
    }
    return a;
}

RecurrenceResult is_recurrent(const TrainTrack& t) {
    RatMatrix a = switch_matrix(t);
    LPFeas feas = lp_positive_kernel_point(a);
    RecurrenceResult out;
    out.recurrent = feas.feasible;
    if (feas.feasible) {
        out.point = feas.x;
    } else {
        out.farkas = feas.y;
        // check the derived certificate: c = y^T A <= 0 with negative sum
        RatVec c = a.apply_left(out.farkas);
        Rat sum = 0;
        for (const Rat& v : c) {
            if (sgn(v) > 0) throw Error("is_recurrent: bad Farkas certificate");
            sum += v;
        }
        if (sgn(sum) >= 0) throw Error("is_recurrent: bad Farkas certificate");
    }
    return out;
}

namespace {

// Sides of the unpunctured faces: one inequality row per side, stating that
// the rest of the region boundary is at least as long.
RatMatrix tangential_system(const TrainTrack& t) {
    std::vector<Circle> walks = boundary_walks(t);
    std::vector<RatVec> rows;
    for (const Region& reg : t.regions) {
        if (reg.punctures > 0) continue;
        // collect the sides of every circle of the region
        std::vector<std::vector<int>> sides;  // branch lists, multiplicity kept
        for (int ci : reg.circles) {
            const Circle& c = walks[ci];
            std::vector<int> cusp_at;
            for (size_t i = 0; i < c.steps.size(); ++i)
                if (c.steps[i].cusp_after) cusp_at.push_back(static_cast<int>(i));
            if (cusp_at.empty()) {
                std::vector<int> side;
                for (const WalkStep& s : c.steps) side.push_back(s.branch);
                sides.push_back(std::move(side));
                continue;
            }
            int k = static_cast<int>(cusp_at.size());
            int n = static_cast<int>(c.steps.size());
            for (int j = 0; j < k; ++j) {
                // side runs from the step after cusp j to the step of cusp j+1
                std::vector<int> side;
                int start = (cusp_at[j] + 1) % n;
                int stop = cusp_at[(j + 1) % k];
                for (int i = start;; i = (i + 1) % n) {
                    side.push_back(c.steps[i].branch);
                    if (i == stop) break;
                }
                sides.push_back(std::move(side));
            }
        }
        if (sides.size() < 2) continue;  // single side constrains nothing here
        for (size_t i = 0; i < sides.size(); ++i) {
            RatVec row(t.num_branches(), Rat(0));
            for (size_t j = 0; j < sides.size(); ++j) {
                Rat sign = (i == j) ? Rat(-1) : Rat(1);
                for (int b : sides[j]) row[b] += sign;
            }
            rows.push_back(std::move(row));
        }
    }
    RatMatrix f(static_cast<int>(rows.size()), t.num_branches());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < t.num_branches(); ++c) f.at(static_cast<int>(r), c) = rows[r][c];
    return f;
}

}  // namespace

TangentialResult is_transversely_recurrent(const TrainTrack& t) {
    TangentialResult out;
    out.system = tangential_system(t);
    RatVec zero(out.system.rows, Rat(0));
    LPFeas feas = lp_feasible_ineq(out.system, zero, Rat(1));
    out.transversely_recurrent = feas.feasible;
    if (feas.feasible)
        out.measure = feas.x;
    else
        out.farkas = feas.y;
    return out;
}

bool is_birecurrent(const TrainTrack& t) {
    return is_recurrent(t).recurrent && is_transversely_recurrent(t).transversely_recurrent;
}

int cone_dim(const TrainTrack& t) {
    if (!is_recurrent(t).recurrent) throw Error("cone_dim: track is not recurrent");
    RatMatrix a = switch_matrix(t);
    return t.num_branches() - rank(a);
}

namespace {

std::vector<int> tight_rows(const std::vector<RatVec>& processed, const RatVec& ray) {
    std::vector<int> out;
    for (size_t i = 0; i < processed.size(); ++i) {
        Rat dot = 0;
        for (size_t j = 0; j < ray.size(); ++j) dot += processed[i][j] * ray[j];
        if (dot == 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool adjacent_rays(const std::vector<RatVec>& processed, const RatVec& p, const RatVec& n, int dim) {
    // rank of the common tight constraints must be dim-2
    std::vector<int> tp = tight_rows(processed, p), tn = tight_rows(processed, n);
    std::vector<int> common;
    std::set_intersection(tp.begin(), tp.end(), tn.begin(), tn.end(), std::back_inserter(common));
    if (common.empty()) return dim <= 2;
    RatMatrix m(static_cast<int>(common.size()), static_cast<int>(p.size()));
    for (size_t r = 0; r < common.size(); ++r)
        for (size_t c = 0; c < p.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = processed[common[r]][c];
    return rank(m) == dim - 2;
}

}  // namespace

std::vector<IntVec> dd_rays(const std::vector<RatVec>& eqs, const std::vector<RatVec>& ineqs, int n) {
    // restrict to the kernel of the equations
    RatMatrix eqm(static_cast<int>(eqs.size()), n);
    for (size_t r = 0; r < eqs.size(); ++r)
        for (int c = 0; c < n; ++c) eqm.at(static_cast<int>(r), c) = eqs[r][c];
    KernelBasis kb = kernel_basis(eqm);
    int d = kb.basis.cols;
    if (d == 0) return {};

    // inequality rows in kernel coordinates
    std::vector<RatVec> g;
    for (const RatVec& row : ineqs) {
        RatVec gr(d, Rat(0));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i)
                if (row[i] != 0 && kb.basis.at(i, j) != 0) gr[j] += row[i] * kb.basis.at(i, j);
        g.push_back(std::move(gr));
    }

    // initial simplicial subcone from the first d independent rows
    std::vector<int> init;
    {
        RatMatrix probe(0, d);
        for (size_t i = 0; i < g.size() && static_cast<int>(init.size()) < d; ++i) {
            RatMatrix trial(static_cast<int>(init.size()) + 1, d);
            for (size_t r = 0; r < init.size(); ++r)
                for (int c = 0; c < d; ++c) trial.at(static_cast<int>(r), c) = g[init[r]][c];
            for (int c = 0; c < d; ++c) trial.at(static_cast<int>(init.size()), c) = g[i][c];
            if (rank(trial) == static_cast<int>(init.size()) + 1) init.push_back(static_cast<int>(i));
        }
        if (static_cast<int>(init.size()) < d)
            throw Error("dd_rays: cone is not pointed (inequalities do not span)");
        (void)probe;
    }

    // rays of the initial cone: columns of S^{-1}
    std::vector<RatVec> rays;
    {
        RatMatrix s(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) s.at(r, c) = g[init[r]][c];
        for (int col = 0; col < d; ++col) {
            RatVec e(d, Rat(0));
            e[col] = 1;
            RatVec x;
            if (!solve(s, e, x)) throw Error("dd_rays: singular initial basis");
            rays.push_back(x);
        }
    }

    std::vector<RatVec> processed;
    for (int idx : init) processed.push_back(g[idx]);

    std::vector<bool> is_init(g.size(), false);
    for (int idx : init) is_init[idx] = true;

    for (size_t hi = 0; hi < g.size(); ++hi) {
        if (is_init[hi]) continue;
        const RatVec& h = g[hi];
        std::vector<RatVec> pos, zer, neg;
        std::vector<Rat> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            Rat dot = 0;
            for (int j = 0; j < d; ++j) dot += h[j] * rays[i][j];
            val[i] = dot;
            if (sgn(dot) > 0)
                pos.push_back(rays[i]);
            else if (sgn(dot) < 0)
                neg.push_back(rays[i]);
            else
                zer.push_back(rays[i]);
        }
        if (neg.empty()) {
            processed.push_back(h);
            continue;
        }
        std::vector<RatVec> next = pos;
        for (const RatVec& z : zer) next.push_back(z);
        for (const RatVec& p : pos) {
            for (const RatVec& nv : neg) {
                if (!adjacent_rays(processed, p, nv, d)) continue;
                Rat hp = 0, hn = 0;
                for (int j = 0; j < d; ++j) {
                    hp += h[j] * p[j];
                    hn += h[j] * nv[j];
                }
                RatVec comb(d);
                for (int j = 0; j < d; ++j) comb[j] = hp * nv[j] - hn * p[j];
                next.push_back(std::move(comb));
            }
        }
        processed.push_back(h);
        rays = std::move(next);
    }

    // back to ambient coordinates, primitive + dedup + sorted
    std::vector<IntVec> out;
    for (const RatVec& y : rays) {
        RatVec x(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j)
                if (kb.basis.at(i, j) != 0) x[i] += kb.basis.at(i, j) * y[j];
        out.push_back(primitive_integer(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntVec> extreme_rays(const TrainTrack& t) {
    RatMatrix a = switch_matrix(t);
    std::vector<RatVec> eqs;
    for (int r = 0; r < a.rows; ++r) {
        RatVec row(a.cols);
        for (int c = 0; c < a.cols; ++c) row[c] = a.at(r, c);
        eqs.push_back(std::move(row));
    }
    std::vector<RatVec> ineqs;
    for (int b = 0; b < t.num_branches(); ++b) {
        RatVec row(t.num_branches(), Rat(0));
        row[b] = 1;
        ineqs.push_back(std::move(row));
    }
    return dd_rays(eqs, ineqs, t.num_branches());
}

MeasureCone measure_cone(const TrainTrack& t) {
    MeasureCone mc;
    mc.switch_system = switch_matrix(t);
    mc.rays = extreme_rays(t);
    mc.dim = t.num_branches() - rank(mc.switch_system);
    return mc;
}

std::vector<IntVec> MeasureCone::face_rays(const std::vector<bool>& support) const {
    std::vector<IntVec> out;
    for (const IntVec& r : rays) {
        bool inside = true;
        for (size_t b = 0; b < r.size(); ++b)
            if (r[b] != 0 && !support[b]) inside = false;
        if (inside) out.push_back(r);
    }
    return out;
}

std::vector<bool> MeasureCone::support_of(const std::vector<IntVec>& rays, int nb) {
    std::vector<bool> s(nb, false);
    for (const IntVec& r : rays)
        for (int b = 0; b < nb; ++b)
            if (r[b] != 0) s[b] = true;
    return s;
}

HRep hrep_of_rays(const std::vector<IntVec>& rays, int n) {
    HRep h;
    h.n = n;
    RatMatrix span(static_cast<int>(rays.size()), n);
    for (size_t r = 0; r < rays.size(); ++r)
        for (int c = 0; c < n; ++c) span.at(static_cast<int>(r), c) = Rat(rays[r][c]);
    // z is a valid equation iff z . ray = 0 for every ray, i.e. span z = 0
    KernelBasis eqk = kernel_basis(span);
    for (int j = 0; j < eqk.basis.cols; ++j) {
        RatVec z(n);
        for (int i = 0; i < n; ++i) z[i] = eqk.basis.at(i, j);
        h.eqs.push_back(to_rat(primitive_integer(z)));
    }

    // facets: polar double description inside the span. Coordinates on the
    // span: restriction to a column set where the ray matrix has full rank.
    int s = n - static_cast<int>(h.eqs.size());
    if (s == 0) return h;
    std::vector<int> pivots;
    {
        std::vector<RatVec> chosen;
        for (int c = 0; c < n && static_cast<int>(pivots.size()) < s; ++c) {
            RatMatrix trial(static_cast<int>(chosen.size()) + 1, static_cast<int>(rays.size()));
            for (size_t r = 0; r < chosen.size(); ++r)
                for (size_t k = 0; k < rays.size(); ++k)
                    trial.at(static_cast<int>(r), static_cast<int>(k)) = chosen[r][k];
            RatVec col(rays.size());
            for (size_t k = 0; k < rays.size(); ++k) col[k] = Rat(rays[k][c]);
            for (size_t k = 0; k < rays.size(); ++k)
                trial.at(static_cast<int>(chosen.size()), static_cast<int>(k)) = col[k];
            if (rank(trial) == static_cast<int>(chosen.size()) + 1) {
                pivots.push_back(c);
                chosen.push_back(col);
            }
        }
    }
    if (static_cast<int>(pivots.size()) != s) throw Error("hrep_of_rays: span coordinate failure");

    // polar cone in R^s: { z : (ray|pivots) . z >= 0 } -> extreme rays are facet normals
    std::vector<RatVec> polar_ineqs;
    for (const IntVec& r : rays) {
        RatVec row(s);
        for (int j = 0; j < s; ++j) row[j] = Rat(r[pivots[j]]);
        polar_ineqs.push_back(std::move(row));
    }
    std::vector<IntVec> normals = dd_rays({}, polar_ineqs, s);
    for (const IntVec& z : normals) {
        RatVec row(n, Rat(0));
        for (int j = 0; j < s; ++j) row[pivots[j]] = Rat(z[j]);
        // re-express within the span: the inequality z . coords(x) >= 0 is
        // only valid together with the span equations, which HRep carries.
        h.ineqs.push_back(std::move(row));
    }
    return h;
}

bool HRep::contains(const RatVec& x) const {
    for (const RatVec& e : eqs) {
        Rat dot = 0;
        for (int i = 0; i < n; ++i) dot += e[i] * x[i];
        if (dot != 0) return false;
    }
    for (const RatVec& f : ineqs) {
        Rat dot = 0;
        for (int i = 0; i < n; ++i) dot += f[i] * x[i];
        if (sgn(dot) < 0) return false;
    }
    return true;
}

bool HRep::contains(const IntVec& x) const { return contains(to_rat(x)); }

bool HRep::contains_relint(const RatVec& x) const {
    for (const RatVec& e : eqs) {
        Rat dot = 0;
        for (int i = 0; i < n; ++i) dot += e[i] * x[i];
        if (dot != 0) return false;
    }
    for (const RatVec& f : ineqs) {
        Rat dot = 0;
        for (int i = 0; i < n; ++i) dot += f[i] * x[i];
        if (sgn(dot) <= 0) return false;
    }
    return true;
}

std::vector<IntVec> canonical_rays(std::vector<IntVec> gens, int n) {
    // drop duplicates and non-extreme generators
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<IntVec> keep;
    for (size_t i = 0; i < gens.size(); ++i) {
        // r extreme iff not a nonnegative combination of the others
        RatMatrix m(n, static_cast<int>(gens.size()) - 1);
        int col = 0;
        for (size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            for (int r = 0; r < n; ++r) m.at(r, col) = Rat(gens[j][r]);
            ++col;
        }
        LPFeas feas = lp_feasible(m, to_rat(gens[i]));
        if (!feas.feasible) keep.push_back(gens[i]);
    }
    return keep;
}

RatVec relint_point(const std::vector<IntVec>& rays, int n) {
    RatVec x(n, Rat(0));
    for (const IntVec& r : rays)
        for (int i = 0; i < n; ++i) x[i] += Rat(r[i]);
    return x;
}

Rat projective_diameter(const std::vector<IntVec>& rays) {
    if (rays.empty()) throw Error("projective_diameter: empty ray list");
    std::vector<RatVec> norm;
    for (const IntVec& r : rays) {
        Rat sum = 0;
        for (const Int& v : r) sum += Rat(v);
        if (sgn(sum) <= 0) throw Error("projective_diameter: ray with nonpositive coordinate sum");
        RatVec x(r.size());
        for (size_t i = 0; i < r.size(); ++i) x[i] = Rat(r[i]) / sum;
        norm.push_back(std::move(x));
    }
    Rat best = 0;
    for (size_t i = 0; i < norm.size(); ++i)
        for (size_t j = i + 1; j < norm.size(); ++j) {
            Rat dist = 0;
            for (size_t k = 0; k < norm[i].size(); ++k) dist += abs(norm[i][k] - norm[j][k]);
            if (dist > best) best = dist;
        }
    return best;
}

}  // namespace tracklab
