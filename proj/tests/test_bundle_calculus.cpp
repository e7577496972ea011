#include <doctest.h>

#include "oracle.hpp"
#include "schurcalc/bundle_calculus.hpp"

using namespace schurcalc;

TEST_SUITE("bundle_calculus") {

TEST_CASE("normal bundle model") {
    const NormalBundleModel m = normal_bundle_model(5);
    CHECK(m.nprime == RepElement(Weight{2, -1}));
    CHECK(m.nprime == det_twist(RepElement(Weight{3, 0}), -1));
    CHECK(dimension(m.nprime) == 4);
    CHECK(m.sub == fibre::q_dual());
    CHECK(m.middle == m.sub + m.quotient);
    CHECK_THROWS_AS(normal_bundle_model(2), std::invalid_argument);
}

TEST_CASE("exterior powers of N'") {
    CHECK(wedge_nprime(0) == RepElement::trivial(2));
    CHECK(wedge_nprime(1) == RepElement(Weight{2, -1}));
    CHECK(wedge_nprime(2) == RepElement(Weight{3, -1}) + RepElement(Weight{1, 1}));
    CHECK(wedge_nprime(3) == RepElement(Weight{3, 0}));
    CHECK(wedge_nprime(4) == RepElement(Weight{2, 2}));
    for (int q = 0; q <= 4; ++q) {
        CHECK(wedge_nprime(q).is_effective());
        CHECK(dimension(wedge_nprime(q)) == oracle::choose(4, q));
        CHECK(wedge_nprime(q) == wedge_nprime_by_filtration(q));
    }
    CHECK_THROWS_AS(wedge_nprime(5), std::invalid_argument);
    CHECK_THROWS_AS(wedge_nprime(-1), std::invalid_argument);
}

TEST_CASE("det N' and Lambda^3 N' = det N' (x) dual N'") {
    const RepElement det = wedge_nprime(4);
    CHECK(det == fibre::det_q_dual(2));
    CHECK(wedge_nprime(3) == tensor(det, dual(wedge_nprime(1))));
}

TEST_CASE("Lambda^2 of the middle term") {
    RepElement expected(2);
    expected.add(Weight{3, -1}, 2);
    expected.add(Weight{1, 1}, 2);
    expected.add(Weight{2, 0}, 1);
    CHECK(wedge2_middle() == expected);
    CHECK(dimension(wedge2_middle()) == 15);
    const MiddleSplit s = middle_split();
    CHECK(wedge2_middle() == ext_power(s.nprime + s.q_dual, 2));
    CHECK(wedge2_middle() == ext_power(tensor(fibre::q(), RepElement(Weight{2, 0})), 2));
}

TEST_CASE("middle term splitting") {
    const MiddleSplit s = middle_split();
    CHECK(s.nprime == RepElement(Weight{2, -1}));
    CHECK(s.q_dual == RepElement(Weight{1, 0}));
    CHECK(dimension(s.nprime) + dimension(s.q_dual) == 6);
    CHECK(tensor(RepElement(Weight{0, -1}), RepElement(Weight{2, 0})) == s.nprime + s.q_dual);
}

TEST_CASE("Cauchy identity route") {
    const RepElement v = fibre::q();
    const RepElement w(Weight{2, 0});
    for (int m = 0; m <= 6; ++m) CHECK(cauchy_exterior(v, w, m) == ext_power(tensor(v, w), m));
}

TEST_CASE("planar rank identity") {
    CHECK(planar_rank_identity(5, 2) == 6);
    CHECK(planar_rank_identity(4, 3) == 7);
    for (int d = 1; d <= 12; ++d) {
        CHECK(planar_rank_identity(d, 1) == d);
        for (int l = 1; l <= d; ++l) CHECK(planar_rank_identity(d, l) == oracle::planar_by_monomials(d, l));
    }
    CHECK_THROWS_AS(planar_rank_identity(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(planar_rank_identity(3, 0), std::invalid_argument);
}

}
