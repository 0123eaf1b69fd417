#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tracklab/cone.hpp"

using namespace tracklab;

namespace {

// Independent oracle: extreme rays by exhaustive support-pattern
// enumeration. A support S carries an extreme ray iff the system
// {A w = 0, w = 0 off S} has a one-dimensional solution space whose
// generator is sign-definite and supported on exactly S.
std::vector<IntVec> rays_by_supports(const TrainTrack& t) {
    RatMatrix a = switch_matrix(t);
    int nb = t.num_branches();
    std::set<IntVec> found;
    for (unsigned mask = 1; mask < (1u << nb); ++mask) {
        RatMatrix sys(a.rows + nb, nb);
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < nb; ++c) sys.at(r, c) = a.at(r, c);
        int extra = a.rows;
        for (int b = 0; b < nb; ++b)
            if (!((mask >> b) & 1u)) sys.at(extra++, b) = 1;
        KernelBasis kb = kernel_basis(sys);
        if (kb.basis.cols != 1) continue;
        RatVec v(nb);
        for (int i = 0; i < nb; ++i) v[i] = kb.basis.at(i, 0);
        int pos = 0, neg = 0, in_support = 0;
        for (int b = 0; b < nb; ++b) {
            if (sgn(v[b]) > 0) ++pos;
            if (sgn(v[b]) < 0) ++neg;
            if (((mask >> b) & 1u) && v[b] != 0) ++in_support;
        }
        if (pos && neg) continue;
        if (neg)
            for (Rat& x : v) x = -x;
        int support_size = 0;
        for (int b = 0; b < nb; ++b)
            if ((mask >> b) & 1u) ++support_size;
        if (in_support != support_size) continue;  // support not exact
        found.insert(primitive_integer(v));
    }
    return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("theta recurrence with the expected witness shape") {
    RecurrenceResult r = is_recurrent(fixtures::theta());
    REQUIRE(r.recurrent);
    // w = (2,1,1) works; any certificate must satisfy the switch rows
    RatMatrix a = switch_matrix(fixtures::theta());
    RatVec w = {rat(2), rat(1), rat(1)};
    for (const Rat& v : a.apply(w)) CHECK(v == 0);
}

TEST_CASE("pinched track is not recurrent, certificate verifies") {
    RecurrenceResult r = is_recurrent(fixtures::pinched());
    REQUIRE_FALSE(r.recurrent);
    RatMatrix a = switch_matrix(fixtures::pinched());
    RatVec c = a.apply_left(r.farkas);
    Rat sum = 0;
    for (const Rat& v : c) {
        CHECK(sgn(v) <= 0);
        sum += v;
    }
    CHECK(sgn(sum) < 0);
}

TEST_CASE("theta cone dimension is 2") { CHECK(cone_dim(fixtures::theta()) == 2); }

TEST_CASE("cone_dim rejects non-recurrent input") {
    CHECK_THROWS_AS((void)cone_dim(fixtures::pinched()), Error);
}

TEST_CASE("theta extreme rays are (1,1,0) and (1,0,1)") {
    std::vector<IntVec> rays = extreme_rays(fixtures::theta());
    REQUIRE(rays.size() == 2);
    CHECK(rays[0] == IntVec{1, 0, 1});
    CHECK(rays[1] == IntVec{1, 1, 0});
}

TEST_CASE("double description agrees with the support oracle on fixtures") {
    for (const TrainTrack& t :
         {fixtures::theta(), fixtures::pinched(), fixtures::loop_around_two()}) {
        std::vector<IntVec> dd = extreme_rays(t);
        std::vector<IntVec> oracle = rays_by_supports(t);
        CHECK(dd == oracle);
    }
}

TEST_CASE("single closed curve is transversely recurrent (vacuous system)") {
    TangentialResult r = is_transversely_recurrent(fixtures::loop_around_two());
    CHECK(r.transversely_recurrent);
    CHECK(r.system.rows == 0);
}

TEST_CASE("theta is transversely recurrent") {
    // all faces punctured: no polygon constraints
    CHECK(is_transversely_recurrent(fixtures::theta()).transversely_recurrent);
}

TEST_CASE("projective diameter basics") {
    CHECK(projective_diameter({IntVec{1, 1, 0}}) == rat(0));
    CHECK(projective_diameter({IntVec{1, 1, 0}, IntVec{1, 0, 1}}) == rat(1));
    CHECK_THROWS_AS((void)projective_diameter({}), Error);
}

TEST_CASE("hrep round trip") {
    std::vector<IntVec> rays = {IntVec{1, 1, 0}, IntVec{1, 0, 1}};
    HRep h = hrep_of_rays(rays, 3);
    CHECK(h.contains(IntVec{2, 1, 1}));       // sum of rays
    CHECK_FALSE(h.contains(IntVec{1, 1, 1})); // not on the kernel plane
    CHECK_FALSE(h.contains(IntVec{1, 2, -1}));
    CHECK(h.contains_relint(to_rat(IntVec{2, 1, 1})));
    CHECK_FALSE(h.contains_relint(to_rat(IntVec{1, 1, 0})));
}

TEST_CASE("canonical_rays filters non-extreme generators") {
    std::vector<IntVec> gens = {IntVec{1, 1, 0}, IntVec{1, 0, 1}, IntVec{2, 1, 1}};
    std::vector<IntVec> ext = canonical_rays(gens, 3);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == IntVec{1, 0, 1});
    CHECK(ext[1] == IntVec{1, 1, 0});
}

TEST_CASE("face rays by support pattern") {
    MeasureCone mc = measure_cone(fixtures::theta());
    CHECK(mc.dim == 2);
    std::vector<bool> support = {true, true, false};
    std::vector<IntVec> face = mc.face_rays(support);
    REQUIRE(face.size() == 1);
    CHECK(face[0] == IntVec{1, 1, 0});
}
