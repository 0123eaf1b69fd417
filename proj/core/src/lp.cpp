#include "tracklab/lp.hpp"

namespace tracklab {

namespace {

struct Tableau {
    int m, n;           // constraints, original variables
    RatMatrix t;        // m rows, n + m + 1 cols (artificials, rhs)
    RatVec red;         // reduced cost row, n + m entries
    Rat obj;            // current phase-1 objective
    std::vector<int> basis;

    Tableau(const RatMatrix& a, const RatVec& b) : m(a.rows), n(a.cols), t(a.rows, a.cols + a.rows + 1) {
        for (int r = 0; r < m; ++r) {
            bool neg = sgn(b[r]) < 0;
            for (int c = 0; c < n; ++c) t.at(r, c) = neg ? -a.at(r, c) : a.at(r, c);
            t.at(r, n + r) = 1;
            t.at(r, n + m) = neg ? -b[r] : b[r];
        }
        basis.resize(m);
        red.assign(n + m, Rat(0));
        obj = 0;
        for (int r = 0; r < m; ++r) {
            basis[r] = n + r;
            obj += t.at(r, n + m);
        }
        // phase-1 costs: 0 on originals, 1 on artificials
        for (int c = 0; c < n + m; ++c) {
            Rat z = 0;
            for (int r = 0; r < m; ++r) z += t.at(r, c);
            red[c] = (c >= n ? Rat(1) : Rat(0)) - z;
        }
    }

    void pivot(int pr, int pc) {
        Rat inv = t.at(pr, pc);
        for (int c = 0; c <= n + m; ++c) t.at(pr, c) /= inv;
        for (int r = 0; r < m; ++r) {
            if (r == pr || t.at(r, pc) == 0) continue;
            Rat f = t.at(r, pc);
            for (int c = 0; c <= n + m; ++c) t.at(r, c) -= f * t.at(pr, c);
        }
        if (red[pc] != 0) {
            Rat f = red[pc];
            for (int c = 0; c < n + m; ++c) red[c] -= f * t.at(pr, c);
            obj += f * t.at(pr, n + m);
        }
        basis[pr] = pc;
    }

    // Bland's rule; minimizes the phase-1 objective to its exact optimum.
    void run() {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < n + m; ++c)
                if (sgn(red[c]) < 0) { enter = c; break; }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (int r = 0; r < m; ++r) {
                if (sgn(t.at(r, enter)) <= 0) continue;
                Rat ratio = t.at(r, n + m) / t.at(r, enter);
                if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) throw Error("phase-1 simplex unbounded");
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPFeas lp_feasible(const RatMatrix& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows) throw Error("lp_feasible: size mismatch");
    Tableau tab(a, b);
    tab.run();

    LPFeas out;
    if (tab.obj == 0) {
        out.feasible = true;
        out.x.assign(a.cols, Rat(0));
        for (int r = 0; r < tab.m; ++r)
            if (tab.basis[r] < tab.n) out.x[tab.basis[r]] = tab.t.at(r, tab.n + tab.m);
        return out;
    }
    out.feasible = false;
    // Dual values from artificial reduced costs: y'_k = 1 - red[art_k],
    // valid for the sign-fixed rows; undo the row negations.
    out.y.assign(a.rows, Rat(0));
    for (int r = 0; r < a.rows; ++r) {
        Rat yk = Rat(1) - tab.red[tab.n + r];
        out.y[r] = sgn(b[r]) < 0 ? -yk : yk;
    }
    if (!verify_farkas(a, b, out.y)) throw Error("internal: Farkas certificate failed verification");
    return out;
}

bool verify_farkas(const RatMatrix& m, const RatVec& b, const RatVec& y) {
    RatVec ym = m.apply_left(y);
    for (const Rat& v : ym)
        if (sgn(v) > 0) return false;
    Rat yb = 0;
    for (int r = 0; r < m.rows; ++r) yb += y[r] * b[r];
    return sgn(yb) > 0;
}

LPFeas lp_positive_kernel_point(const RatMatrix& a) {
    // w = 1 + x, x >= 0:  A x = -A 1
    RatVec b(a.rows, Rat(0));
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) b[r] -= a.at(r, c);
    LPFeas res = lp_feasible(a, b);
    if (res.feasible)
        for (int c = 0; c < a.cols; ++c) res.x[c] += 1;
    return res;
}

namespace {

// {F x >= g} with x = pos - neg (only when free_vars), plus slack: F x - s = g.
LPFeas ineq_to_standard(const RatMatrix& f, const RatVec& g, bool free_vars) {
    int n = f.cols, m = f.rows;
    int width = (free_vars ? 2 * n : n) + m;
    RatMatrix a(m, width);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            a.at(r, c) = f.at(r, c);
            if (free_vars) a.at(r, n + c) = -f.at(r, c);
        }
        a.at(r, (free_vars ? 2 * n : n) + r) = -1;
    }
    LPFeas res = lp_feasible(a, g);
    if (res.feasible) {
        RatVec x(n);
        for (int c = 0; c < n; ++c) x[c] = free_vars ? res.x[c] - res.x[n + c] : res.x[c];
        res.x = x;
    }
    return res;
}

}  // namespace

LPFeas lp_feasible_ineq(const RatMatrix& f, const RatVec& g, const Rat& low) {
    // x = low + x', x' >= 0:  F x' >= g - F (low 1)
    RatVec g2 = g;
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c) g2[r] -= f.at(r, c) * low;
    LPFeas res = ineq_to_standard(f, g2, /*free_vars=*/false);
    if (res.feasible)
        for (Rat& v : res.x) v += low;
    return res;
}

LPFeas lp_feasible_ineq_free(const RatMatrix& f, const RatVec& g) {
    return ineq_to_standard(f, g, /*free_vars=*/true);
}

}  // namespace tracklab
