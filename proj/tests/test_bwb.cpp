#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "schurcalc/bwb.hpp"

using namespace schurcalc;

namespace {

Weight adjoint(int rank) {
    std::vector<Int> e(static_cast<std::size_t>(rank), 0);
    e.front() = 1;
    e.back() = -1;
    return Weight(e);
}

Weight random_weight(std::mt19937& rng, int rank, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::vector<Int> e(static_cast<std::size_t>(rank));
    for (Int& x : e) x = entry(rng);
    std::sort(e.rbegin(), e.rend());
    return Weight(e);
}

}  // namespace

TEST_SUITE("bwb") {

TEST_CASE("repeated entry gives zero") {
    const BwbOutcome o = bwb_single(5, 2, Weight::trivial(3), Weight{1, 0});
    CHECK(o.is_zero());
    CHECK(o.repeated_value() == 3);
    CHECK(to_string(o) == "Zero (repeat at value 3)");
}

TEST_CASE("structure sheaf") {
    for (int d = 2; d <= 7; ++d)
        for (int k = 1; k < d; ++k) {
            const BwbOutcome o = bwb_single(d, k, Weight::trivial(d - k), Weight::trivial(k));
            REQUIRE_FALSE(o.is_zero());
            CHECK(o.degree() == 0);
            CHECK(o.beta() == Weight::trivial(d));
            const GradedCohomology h = cohomology(BundleExpr::structure_sheaf(d, k));
            CHECK(h.dimension(0) == 1);
            CHECK(h.groups().size() == 1);
        }
}

TEST_CASE("adjoint weights on both factors") {
    for (int d = 4; d <= 7; ++d)
        for (int k = 2; k <= d - 2; ++k) {
            const BwbOutcome o = bwb_single(d, k, adjoint(d - k), adjoint(k));
            REQUIRE_FALSE(o.is_zero());
            CHECK(o.degree() == 1);
            CHECK(o.beta() == adjoint(d));
            CHECK(o.dimension() == d * d - 1);
        }
}

TEST_CASE("P^1 line bundle O(-2)") {
    const BwbOutcome o = bwb_single(2, 1, Weight{0}, Weight{2});
    REQUIRE_FALSE(o.is_zero());
    CHECK(o.degree() == 1);
    CHECK(o.beta() == Weight{1, 1});
    CHECK(o.dimension() == 1);
}

TEST_CASE("Sigma^{a,-a} Q^vee vanishes on G(2,d) for 1 <= a <= d-2") {
    for (int d = 3; d <= 10; ++d)
        for (Int a = 1; a <= d - 2; ++a) CHECK(cohomology(BundleExpr::from_q_dual(d, 2, RepElement(Weight{a, -a}))).is_zero());
}

TEST_CASE("cotangent bundle has H^1 = k") {
    for (int d = 2; d <= 7; ++d)
        for (int k = 1; k < d; ++k) {
            const GradedCohomology h = cohomology(BundleExpr::cotangent(d, k));
            CHECK(h.groups().size() == 1);
            CHECK(h.at(1) == RepElement::trivial(d));
        }
}

TEST_CASE("canonical bundle") {
    // H^top(omega) = k, and H^0(omega^vee) = H^0(anticanonical) is nonzero.
    for (int d = 3; d <= 6; ++d)
        for (int k = 1; k < d; ++k) {
            const GradedCohomology h = cohomology(BundleExpr::canonical(d, k));
            CHECK(h.groups().size() == 1);
            CHECK(h.at(k * (d - k)) == RepElement::trivial(d));
            CHECK(cohomology(dual(BundleExpr::canonical(d, k))).dimension(0) > 0);
        }
}

TEST_CASE("tautological bundles") {
    // H^0(Q^vee) = 0 for quotients, H^0(K^vee) = V^vee.
    for (int d = 3; d <= 6; ++d)
        for (int k = 1; k < d; ++k) {
            const Weight e1 = pad_to_rank(Weight{1}, d - k);
            const BundleExpr k_bundle = BundleExpr::from_parts(d, k, RepElement(e1), RepElement::trivial(k));
            CHECK(cohomology(k_bundle).is_zero());
            const GradedCohomology kd = cohomology(dual(k_bundle));
            CHECK(kd.groups().size() == 1);
            CHECK(kd.at(0) == RepElement(pad_to_rank(Weight{1}, d)));
        }
}

TEST_CASE("Bott formula on projective spaces") {
    for (int d = 2; d <= 6; ++d) {
        const int n = d - 1;
        for (Int m = -2 * d; m <= 2 * d; ++m) {
            // Sigma^(m) Q^vee on the quotient P^n is O(-m).
            const GradedCohomology h = cohomology(BundleExpr::from_q_dual(d, 1, RepElement(Weight{m})));
            CAPTURE(d);
            CAPTURE(m);
            CHECK(h.dimension(0) == (m <= 0 ? oracle::choose(d - 1 - m, d - 1) : 0));
            CHECK(h.dimension(n) == (m >= d ? oracle::choose(m - 1, n) : 0));
            for (int p = 1; p < n; ++p) CHECK(h.dimension(p) == 0);
        }
    }
}

TEST_CASE("Serre duality") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> dd(2, 7);
        const int d = dd(rng);
        std::uniform_int_distribution<int> kk(1, d - 1);
        const int k = kk(rng);
        const Weight gamma = random_weight(rng, d - k, 3);
        const Weight delta = random_weight(rng, k, 3);
        const BwbOutcome o = bwb_single(d, k, gamma, delta);
        // dual bundle tensor omega = (det K)^k (x) (det Q^vee)^(d-k)
        const BwbOutcome s = bwb_single(d, k, det_twist(dual(gamma), k), det_twist(dual(delta), d - k));
        CAPTURE(d);
        CAPTURE(k);
        CHECK(o.is_zero() == s.is_zero());
        if (!o.is_zero() && !s.is_zero()) {
            CHECK(o.degree() + s.degree() == k * (d - k));
            CHECK(s.beta() == dual(o.beta()));
        }
    }
}

TEST_CASE("degree is the inversion count and 0 iff dominant") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> dd(1, 6), entry(-4, 4);
        const int d = dd(rng);
        std::vector<Int> a(static_cast<std::size_t>(d));
        for (Int& x : a) x = entry(rng);
        const BwbOutcome o = bwb_weight(a);
        std::vector<Int> shifted(a);
        for (int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] += d - i;
        int inversions = 0;
        bool repeat = false;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (shifted[static_cast<std::size_t>(i)] < shifted[static_cast<std::size_t>(j)]) ++inversions;
                if (shifted[static_cast<std::size_t>(i)] == shifted[static_cast<std::size_t>(j)]) repeat = true;
            }
        CHECK(o.is_zero() == repeat);
        if (!repeat) {
            CHECK(o.degree() == inversions);
            CHECK((o.degree() == 0) == std::is_sorted(a.rbegin(), a.rend()));
        }
    }
}

TEST_CASE("Euler characteristic is the termwise alternating sum") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 5, k = 2;
        BundleExpr e(d, k);
        std::uniform_int_distribution<int> coeff(1, 3);
        for (int t = 0; t < 4; ++t) e.add(random_weight(rng, d - k, 2), random_weight(rng, k, 3), coeff(rng));
        const GradedCohomology h = cohomology(e);
        BigInt chi = 0;
        for (const auto& [key, c] : e.terms()) {
            const BwbOutcome o = bwb_single(d, k, key.first, key.second);
            if (!o.is_zero()) chi += (o.degree() % 2 == 0 ? 1 : -1) * c * o.dimension();
        }
        CHECK(h.euler_characteristic() == chi);
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(BundleExpr(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(BundleExpr(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(bwb_single(5, 2, Weight{0, 0}, Weight{1, 0}), std::invalid_argument);
    BundleExpr virt(4, 2);
    virt.add(Weight{0, 0}, Weight{1, 0}, -1);
    CHECK_THROWS_AS(cohomology(virt), std::invalid_argument);
}

}
