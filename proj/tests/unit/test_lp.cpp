#include <doctest.h>

#include "tracklab/lp.hpp"

using namespace tracklab;

TEST_CASE("feasible standard system") {
    // x0 + x1 = 2, x0 - x1 = 0 -> x = (1,1)
    RatMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -1;
    LPFeas r = lp_feasible(a, {rat(2), rat(0)});
    REQUIRE(r.feasible);
    CHECK(r.x[0] == rat(1));
    CHECK(r.x[1] == rat(1));
}

TEST_CASE("infeasible yields verified Farkas") {
    // x0 + x1 = -1 with x >= 0
    RatMatrix a(1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    LPFeas r = lp_feasible(a, {rat(-1)});
    REQUIRE_FALSE(r.feasible);
    CHECK(verify_farkas(a, {rat(-1)}, r.y));
}

TEST_CASE("infeasible equality pair") {
    // x0 = 1 and x0 = 2
    RatMatrix a(2, 1);
    a.at(0, 0) = 1;
    a.at(1, 0) = 1;
    LPFeas r = lp_feasible(a, {rat(1), rat(2)});
    REQUIRE_FALSE(r.feasible);
    CHECK(verify_farkas(a, {rat(1), rat(2)}, r.y));
}

TEST_CASE("positive kernel point on the theta system") {
    RatMatrix a(2, 3);
    for (int r = 0; r < 2; ++r) {
        a.at(r, 0) = 1;
        a.at(r, 1) = -1;
        a.at(r, 2) = -1;
    }
    LPFeas r = lp_positive_kernel_point(a);
    REQUIRE(r.feasible);
    for (const Rat& v : r.x) CHECK(v >= 1);
    for (const Rat& v : a.apply(r.x)) CHECK(v == 0);
}

TEST_CASE("positive kernel point rejected when a weight is pinched to zero") {
    // w0 = w0 + w1 forces w1 = 0
    RatMatrix a(1, 2);
    a.at(0, 0) = 0;  // w0 - w0
    a.at(0, 1) = -1;
    LPFeas r = lp_positive_kernel_point(a);
    REQUIRE_FALSE(r.feasible);
    // certificate: c = y^T A <= 0 with negative sum
    RatVec c = a.apply_left(r.y);
    Rat sum = 0;
    for (const Rat& v : c) {
        CHECK(sgn(v) <= 0);
        sum += v;
    }
    CHECK(sgn(sum) < 0);
}

TEST_CASE("inequality feasibility with lower bound") {
    // x0 - x1 >= 0, x >= 1
    RatMatrix f(1, 2);
    f.at(0, 0) = 1;
    f.at(0, 1) = -1;
    LPFeas r = lp_feasible_ineq(f, {rat(0)}, rat(1));
    REQUIRE(r.feasible);
    CHECK(r.x[0] >= 1);
    CHECK(r.x[1] >= 1);
    CHECK(r.x[0] >= r.x[1]);
}

TEST_CASE("free-variable inequalities") {
    // x >= 1  and  -x >= 0 is infeasible
    RatMatrix f(2, 1);
    f.at(0, 0) = 1;
    f.at(1, 0) = -1;
    CHECK_FALSE(lp_feasible_ineq_free(f, {rat(1), rat(0)}).feasible);
    // x >= -5, -x >= -5 feasible (x free in [-5,5])
    CHECK(lp_feasible_ineq_free(f, {rat(-5), rat(-5)}).feasible);
}
