#include <doctest.h>

#include "tracklab/linalg.hpp"

using namespace tracklab;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3/6") == rat(1, 2));
    CHECK(rat_from_string("-4/2") == rat(-2));
    CHECK(rat_to_string(rat(7, 3)) == "7/3");
    CHECK(rat_to_string(rat(4, 2)) == "2");
    CHECK_THROWS_AS((void)rat_from_string("x"), Error);
}

TEST_CASE("pow2") {
    CHECK(pow2(0) == rat(1));
    CHECK(pow2(3) == rat(8));
    CHECK(pow2(-2) == rat(1, 4));
}

TEST_CASE("primitive integer scaling") {
    RatVec v = {rat(1, 2), rat(3, 4), rat(0)};
    IntVec p = primitive_integer(v);
    CHECK(p[0] == 2);
    CHECK(p[1] == 3);
    CHECK(p[2] == 0);
}

TEST_CASE("rank and kernel") {
    RatMatrix a(2, 3);
    for (int r = 0; r < 2; ++r) {
        a.at(r, 0) = 1;
        a.at(r, 1) = -1;
        a.at(r, 2) = -1;
    }
    CHECK(rank(a) == 1);
    KernelBasis kb = kernel_basis(a);
    CHECK(kb.basis.cols == 2);
    for (int j = 0; j < 2; ++j) {
        RatVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = kb.basis.at(i, j);
        for (const Rat& x : a.apply(v)) CHECK(x == 0);
    }
}

TEST_CASE("solve") {
    RatMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -1;
    RatVec x;
    CHECK(solve(a, {rat(5), rat(1)}, x));
    CHECK(x[0] == rat(2));
    CHECK(x[1] == rat(1));

    RatMatrix s(2, 1);
    s.at(0, 0) = 1;
    s.at(1, 0) = 1;
    CHECK_FALSE(solve(s, {rat(0), rat(1)}, x));
}

TEST_CASE("integer matrix compose") {
    IntMatrix m = IntMatrix::identity(3);
    m.at(0, 1) += 1;
    IntMatrix sq = m.times(m);
    CHECK(sq.at(0, 1) == 2);
    CHECK(m.nonnegative());
}
