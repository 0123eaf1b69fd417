#include "tracklab/linalg.hpp"

#include <sstream>

namespace tracklab {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

IntVec primitive_integer(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec out(v.size());
    Int gcd = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[i].get_mpz_t());
    }
    if (gcd > 1)
        for (Int& x : out) x /= gcd;
    return out;
}

std::string vec_to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << rat_to_string(v[i]);
    os << ")";
    return os.str();
}

std::string vec_to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].get_str();
    os << ")";
    return os.str();
}

RatVec RatMatrix::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols) throw Error("apply: size mismatch");
    RatVec y(rows, Rat(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c) != 0) y[r] += at(r, c) * x[c];
    return y;
}

RatVec RatMatrix::apply_left(const RatVec& y) const {
    if (static_cast<int>(y.size()) != rows) throw Error("apply_left: size mismatch");
    RatVec out(cols, Rat(0));
    for (int r = 0; r < rows; ++r)
        if (y[r] != 0)
            for (int c = 0; c < cols; ++c)
                if (at(r, c) != 0) out[c] += y[r] * at(r, c);
    return out;
}

RatMatrix RatMatrix::times(const RatMatrix& other) const {
    if (cols != other.rows) throw Error("times: size mismatch");
    RatMatrix out(rows, other.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k)
            if (at(r, k) != 0)
                for (int c = 0; c < other.cols; ++c)
                    if (other.at(k, c) != 0) out.at(r, c) += at(r, k) * other.at(k, c);
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
    return out;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatVec IntMatrix::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols) throw Error("apply: size mismatch");
    RatVec y(rows, Rat(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c) != 0) y[r] += Rat(at(r, c)) * x[c];
    return y;
}

IntVec IntMatrix::apply(const IntVec& x) const {
    if (static_cast<int>(x.size()) != cols) throw Error("apply: size mismatch");
    IntVec y(rows, Int(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c) != 0) y[r] += at(r, c) * x[c];
    return y;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
    if (cols != other.rows) throw Error("times: size mismatch");
    IntMatrix out(rows, other.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k)
            if (at(r, k) != 0)
                for (int c = 0; c < other.cols; ++c)
                    if (other.at(k, c) != 0) out.at(r, c) += at(r, k) * other.at(k, c);
    return out;
}

RatMatrix IntMatrix::to_rational() const {
    RatMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = Rat(at(r, c));
    return out;
}

bool IntMatrix::nonnegative() const {
    for (const Int& x : a)
        if (x < 0) return false;
    return true;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) swap(m.at(p, c), m.at(row, c));
        Rat inv = m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMatrix m) { return static_cast<int>(echelon(m).size()); }

KernelBasis kernel_basis(const RatMatrix& a) {
    RatMatrix m = a;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    KernelBasis kb;
    for (int c = 0; c < a.cols; ++c)
        if (!is_pivot[c]) kb.free_cols.push_back(c);
    kb.basis = RatMatrix(a.cols, static_cast<int>(kb.free_cols.size()));
    for (size_t j = 0; j < kb.free_cols.size(); ++j) {
        int fc = kb.free_cols[j];
        kb.basis.at(fc, static_cast<int>(j)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            kb.basis.at(pivots[r], static_cast<int>(j)) = -m.at(static_cast<int>(r), fc);
    }
    return kb;
}

RatVec KernelBasis::coords_of(const RatVec& x) const {
    RatVec out(free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) out[j] = x[free_cols[j]];
    return out;
}

bool solve(const RatMatrix& a, const RatVec& b, RatVec& x) {
    RatMatrix m(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) m.at(r, c) = a.at(r, c);
        m.at(r, a.cols) = b[r];
    }
    std::vector<int> pivots = echelon(m);
    for (int c : pivots)
        if (c == a.cols) return false;  // 0 = 1 row
    x.assign(a.cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(static_cast<int>(r), a.cols);
    return true;
}

}  // namespace tracklab
