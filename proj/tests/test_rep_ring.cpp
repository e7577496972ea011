#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "schurcalc/rep_ring.hpp"

using namespace schurcalc;

namespace {

RepElement sum(std::initializer_list<Weight> ws) {
    RepElement out(static_cast<int>(ws.begin()->rank()));
    for (const Weight& w : ws) out.add(w, 1);
    return out;
}

std::vector<Int> vec(const Weight& w) { return {w.entries().begin(), w.entries().end()}; }

// Character of an element, through the tableau oracle.
oracle::Poly oracle_char(const RepElement& a) {
    oracle::Poly out;
    for (const auto& [w, c] : a.terms())
        for (const auto& [e, m] : oracle::ssyt_character(vec(w))) out[e] += c * m;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Weight random_weight(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> entry(-4, 4);
    std::vector<Int> e(static_cast<std::size_t>(rank));
    for (Int& x : e) x = entry(rng);
    std::sort(e.rbegin(), e.rend());
    return Weight(e);
}

RepElement random_effective(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> terms(1, 3), coeff(1, 2);
    RepElement out(rank);
    for (int i = terms(rng); i > 0; --i) out.add(random_weight(rng, rank), coeff(rng));
    return out;
}

}  // namespace

TEST_SUITE("rep_ring") {

TEST_CASE("elements never store zero coefficients") {
    RepElement a(Weight{1, 0});
    a.add(Weight{1, 0}, -1);
    CHECK(a.is_zero());
    CHECK(a.num_terms() == 0);
    CHECK_THROWS_AS(a.add(Weight{1, 0, 0}, 1), std::invalid_argument);
    RepElement v = RepElement(Weight{2, 0}) - RepElement(Weight{1, 1});
    CHECK_FALSE(v.is_effective());
    CHECK(to_string(RepElement(Weight{2, 0}) + 2 * RepElement(Weight{1, 1})) == "S(2,0) + 2*S(1,1)");
}

TEST_CASE("Pieri examples") {
    const RepElement a(Weight{2, 1, 0});
    CHECK(tensor(a, RepElement(Weight{2, 0, 0})) ==
          sum({Weight{4, 1, 0}, Weight{3, 2, 0}, Weight{3, 1, 1}, Weight{2, 2, 1}}));
    CHECK(tensor(a, RepElement(Weight{1, 1, 0})) == sum({Weight{3, 2, 0}, Weight{3, 1, 1}, Weight{2, 2, 1}}));
}

TEST_CASE("tensor with negative entries") {
    const RepElement product = tensor(RepElement(Weight{2, 1}), RepElement(Weight{0, -1}));
    CHECK(product == sum({Weight{2, 0}, Weight{1, 1}}));
    CHECK(oracle_char(product) == oracle::multiply(oracle::ssyt_character({2, 1}), oracle::ssyt_character({0, -1})));
    CHECK_THROWS_AS(tensor(RepElement(Weight{1}), RepElement(Weight{1, 0})), std::invalid_argument);
}

TEST_CASE("LR agrees with the tableau oracle") {
    for (int rank = 1; rank <= 3; ++rank) {
        std::vector<Weight> parts;
        for (Int n = 0; n <= 5; ++n)
            for (Weight& p : partitions_of(n, rank)) parts.push_back(std::move(p));
        for (const Weight& a : parts)
            for (const Weight& b : parts) {
                const RepElement product = tensor(RepElement(a), RepElement(b));
                CHECK(oracle_char(product) == oracle::multiply(oracle::ssyt_character(vec(a)), oracle::ssyt_character(vec(b))));
            }
    }
}

TEST_CASE("char_of agrees with the tableau oracle") {
    std::mt19937 rng(7);
    for (int rank = 1; rank <= 4; ++rank)
        for (int trial = 0; trial < 25; ++trial) {
            const Weight w = random_weight(rng, rank);
            CHECK(char_of(w).terms() == oracle::ssyt_character(vec(w)));
        }
    CHECK(char_of(Weight{0, 0}) == CharPoly::constant(2, 1));
    CHECK(char_of(Weight{1, 0}) == CharPoly::monomial({1, 0}) + CharPoly::monomial({0, 1}));
    CHECK(char_of(Weight{1, 1}) == CharPoly::monomial({1, 1}));
}

TEST_CASE("decompose inverts char_of") {
    std::mt19937 rng(11);
    for (int rank = 1; rank <= 3; ++rank)
        for (int trial = 0; trial < 20; ++trial) {
            const RepElement a = random_effective(rng, rank);
            CHECK(decompose(char_of(a)) == a);
        }
    CHECK_THROWS_AS(decompose(CharPoly::monomial({1, 0})), std::domain_error);
    CHECK_THROWS_AS(decompose(char_of(RepElement(Weight{1, 1})) - char_of(RepElement(Weight{2, 0})), true),
                    std::domain_error);
}

TEST_CASE("dual and determinant twists") {
    CHECK(dual(Weight{3, 1}) == Weight{-1, -3});
    CHECK(dual(RepElement::trivial(3)) == RepElement::trivial(3));
    CHECK(det_twist(Weight{3, 0}, -1) == Weight{2, -1});
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const RepElement a = random_effective(rng, 3);
        const RepElement b = random_effective(rng, 3);
        CHECK(dual(dual(a)) == a);
        CHECK(det_twist(det_twist(a, 2), -2) == a);
        CHECK(det_twist(a, 0) == a);
        CHECK(dual(tensor(a, b)) == tensor(dual(a), dual(b)));
    }
}

TEST_CASE("ring laws") {
    std::mt19937 rng(42);
    for (int rank = 1; rank <= 3; ++rank)
        for (int trial = 0; trial < 15; ++trial) {
            const RepElement a = random_effective(rng, rank);
            const RepElement b = random_effective(rng, rank);
            const RepElement c = random_effective(rng, rank);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * RepElement::trivial(rank) == a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(char_of(a * b) == char_of(a) * char_of(b));
            CHECK(dimension(a * b) == dimension(a) * dimension(b));
            CHECK(dimension(a) == char_of(a).evaluate_at_ones());
        }
}

TEST_CASE("Weyl dimension") {
    CHECK(weyl_dim(Weight::trivial(5)) == 1);
    for (Int a = -3; a <= 4; ++a)
        for (Int b = -4; b <= a; ++b) {
            CHECK(weyl_dim(Weight{a, b}) == a - b + 1);
            CHECK(weyl_dim(Weight{a, b}) == oracle::monomial_count(oracle::ssyt_character({a, b})));
        }
    for (int d = 2; d <= 6; ++d) {
        std::vector<Int> adj(static_cast<std::size_t>(d), 0);
        adj.front() = 1;
        adj.back() = -1;
        CHECK(weyl_dim(Weight(adj)) == d * d - 1);
        CHECK(oracle::monomial_count(oracle::ssyt_character(adj)) == d * d - 1);
    }
}

TEST_CASE("plethysm examples on Q^vee") {
    const RepElement s2(Weight{2, 0});
    CHECK(ext_power(s2, 3) == RepElement(Weight{3, 3}));
    CHECK(ext_power(s2, 2) == RepElement(Weight{3, 1}));
    CHECK(sym_power(s2, 2) == sum({Weight{4, 0}, Weight{2, 2}}));
    const RepElement a = RepElement(Weight{2, -1}) + RepElement(Weight{1, 1});
    CHECK(ext_power(a, 0) == RepElement::trivial(2));
    CHECK(ext_power(a, 1) == a);
    CHECK(sym_power(a, 0) == RepElement::trivial(2));
    CHECK(sym_power(a, 1) == a);
    CHECK_THROWS_AS(ext_power(RepElement(Weight{1, 0}) - RepElement(Weight{0, 0}), 2), std::invalid_argument);
    CHECK(plethysm(Weight{1, 1}, s2) == ext_power(s2, 2));
    CHECK(plethysm(Weight{2, 0}, s2) == sym_power(s2, 2));
    CHECK(plethysm(Weight{2, 1, 0}, RepElement(Weight{1, 0, 0})) == RepElement(Weight{2, 1, 0}));
}

TEST_CASE("top exterior powers") {
    std::mt19937 rng(5);
    for (int rank = 1; rank <= 3; ++rank)
        for (int trial = 0; trial < 10; ++trial) {
            const RepElement e = random_effective(rng, rank);
            const BigInt n = dimension(e);
            if (n > 8) continue;
            const int top = static_cast<int>(n);
            const RepElement det = ext_power(e, top);
            REQUIRE(det.num_terms() == 1);
            CHECK(det.terms().begin()->second == 1);
            CHECK(dimension(det) == 1);
            if (top >= 1) CHECK(ext_power(e, top - 1) == tensor(det, dual(e)));
            CHECK(ext_power(e, top + 1).is_zero());
        }
}

TEST_CASE("plethysms of S^2 and Lambda^2 by the classical formulas") {
    // Over GL_4, with partitions of length <= 4 only.
    const int r = 4;
    const RepElement s2(pad_to_rank(Weight{2}, r));
    const RepElement l2(pad_to_rank(Weight{1, 1}, r));
    for (int m = 0; m <= 4; ++m) {
        RepElement sym_s2(r), sym_l2(r), ext_s2(r), ext_l2(r);
        for (const Weight& lam : partitions_of(m, r)) {
            // S^m S^2: even rows. S^m Lambda^2: even columns.
            std::vector<Int> doubled(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) doubled[static_cast<std::size_t>(i)] = 2 * lam[i];
            sym_s2.add(Weight(doubled), 1);
            const Weight cols = transpose(Weight(doubled));
            if (cols.rank() <= r) sym_l2.add(pad_to_rank(cols, r), 1);
        }
        // Lambda^m S^2 = sum of (u | u+1)' and Lambda^m Lambda^2 = sum of (u | u+1), |alpha| = 2m.
        if (m == 0) {
            ext_s2 = RepElement::trivial(r);
            ext_l2 = RepElement::trivial(r);
        } else {
            for (const Weight& p : partitions_of(2 * m, 2 * m)) {
                const Hook h = to_hook(p);
                bool shifted = true;
                for (std::size_t i = 0; i < h.arms.size(); ++i) shifted = shifted && h.legs[i] == h.arms[i] + 1;
                if (!shifted) continue;
                const Weight t = transpose(p);
                const Weight s = strip_trailing_zeros(p);
                if (t.rank() <= r) ext_s2.add(pad_to_rank(t, r), 1);
                if (s.rank() <= r) ext_l2.add(pad_to_rank(s, r), 1);
            }
        }
        CAPTURE(m);
        CHECK(sym_power(s2, m) == sym_s2);
        CHECK(sym_power(l2, m) == sym_l2);
        CHECK(ext_power(s2, m) == ext_s2);
        CHECK(ext_power(l2, m) == ext_l2);
    }
}

TEST_CASE("Cauchy identity for exterior powers of a tensor product") {
    const RepElement v(Weight{1, 0});
    for (const RepElement& w : {RepElement(Weight{1, 0}), RepElement(Weight{2, 0}), RepElement(Weight{1, -1})}) {
        const RepElement vw = tensor(v, w);
        for (int m = 0; m <= 4; ++m) {
            RepElement expected(2);
            for (const Weight& a : partitions_of(m, 2)) {
                expected += tensor(plethysm(a, v), plethysm(transpose(a), w));
            }
            if (m == 0) expected = RepElement::trivial(2);
            CAPTURE(m);
            CHECK(ext_power(vw, m) == expected);
        }
    }
}

TEST_CASE("lambda-ring sum identity") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const RepElement a = random_effective(rng, 2);
        const RepElement c = random_effective(rng, 2);
        if (dimension(a) + dimension(c) > 12) continue;
        for (int q = 0; q <= 4; ++q) {
            RepElement expected(2);
            for (int i = 0; i <= q; ++i) expected += tensor(ext_power(a, i), ext_power(c, q - i));
            CHECK(ext_power(a + c, q) == expected);
            CHECK(dimension(ext_power(a + c, q)) == char_of(ext_power(a + c, q)).evaluate_at_ones());
        }
    }
}

}
