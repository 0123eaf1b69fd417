#pragma once

#include <cstddef>
#include <vector>

#include "tracklab/rational.hpp"

namespace tracklab {

// Dense rational matrix, row-major. Sizes here are tiny (switch systems
// have at most ~32 columns), so no sparsity games.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    RatVec a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    RatVec apply(const RatVec& x) const;      // A x
    RatVec apply_left(const RatVec& y) const; // y^T A
    RatMatrix times(const RatMatrix& other) const;
    RatMatrix transposed() const;
};

// Nonnegative integer matrix for carrying maps; rows = parent branches,
// cols = child branches.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    IntVec a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n);

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    RatVec apply(const RatVec& x) const;
    IntVec apply(const IntVec& x) const;
    IntMatrix times(const IntMatrix& other) const;
    RatMatrix to_rational() const;
    bool nonnegative() const;
    bool operator==(const IntMatrix& other) const = default;
};

int rank(RatMatrix m);  // by exact Gaussian elimination (copy is intentional)

// Basis of the nullspace {x : A x = 0} as columns. Also reports the free
// column indices: the basis is in "identity on free coordinates" form, so
// restricting a kernel vector to the free coordinates inverts the basis map.
struct KernelBasis {
    RatMatrix basis;             // cols = dim of kernel
    std::vector<int> free_cols;  // size = basis.cols
    RatVec coords_of(const RatVec& x) const;  // restriction to free coords
};
KernelBasis kernel_basis(const RatMatrix& a);

// Solves A x = b exactly. Returns false when inconsistent; when the system
// is underdetermined returns one solution (free variables set to 0).
bool solve(const RatMatrix& a, const RatVec& b, RatVec& x);

}  // namespace tracklab
