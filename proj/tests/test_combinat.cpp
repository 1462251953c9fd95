#include <doctest.h>

#include <set>

#include "stabenv/combinat.hpp"

using namespace stabenv;

TEST_CASE("subset enumeration order and counts") {
    auto s21 = enumerate_subsets(2, 1);
    REQUIRE(s21.size() == 2);
    CHECK(s21[0] == Subset(2, {1}));
    CHECK(s21[1] == Subset(2, {2}));

    auto s42 = enumerate_subsets(4, 2);
    REQUIRE(s42.size() == 6);
    CHECK(s42[0] == Subset(4, {1, 2}));
    CHECK(s42[1] == Subset(4, {1, 3}));

    auto s30 = enumerate_subsets(3, 0);
    REQUIRE(s30.size() == 1);
    CHECK(s30[0] == Subset::empty(3));

    CHECK_THROWS(enumerate_subsets(3, 4));

    for (int n = 0; n <= 5; ++n) {
        std::size_t total = 0;
        for (int k = 0; k <= n; ++k) {
            const auto subs = enumerate_subsets(n, k);
            CHECK(subs.size() == binomial(n, k));
            total += subs.size();
        }
        CHECK(total == (std::size_t{1} << n));
    }
}

TEST_CASE("transposition action on subsets") {
    CHECK(apply_transposition(Subset(2, {1}), 1, 2) == Subset(2, {2}));
    CHECK(apply_transposition(Subset(2, {1, 2}), 1, 2) == Subset(2, {1, 2}));
    CHECK(apply_transposition(Subset(4, {2, 4}), 3, 4) == Subset(4, {2, 3}));
    // involution
    for (const auto& I : enumerate_all_subsets(4))
        for (int u = 1; u <= 4; ++u)
            for (int v = u + 1; v <= 4; ++v)
                CHECK(apply_transposition(apply_transposition(I, u, v), u, v) == I);
}

TEST_CASE("composition convention: first omega, then sigma") {
    const Permutation id3 = Permutation::identity(3);
    const Permutation w = Permutation::parse("3,1,2");
    CHECK(compose(id3, w) == w);
    const Permutation s2 = Permutation::transposition(2, 1, 2);
    CHECK(compose(s2, s2).is_identity());
    // sigma = [2,3,1], omega = s_{1,2}: (sigma omega)(1) = sigma(2) = 3, so [3,2,1].
    const Permutation sigma = Permutation::parse("2,3,1");
    CHECK(compose(sigma, Permutation::transposition(3, 1, 2)) == Permutation::parse("3,2,1"));
    // sigma s_{a,a+1} switches the values sigma(a), sigma(a+1).
    const Permutation ss = compose(sigma, Permutation::adjacent(3, 1));
    CHECK(ss.apply(1) == sigma.apply(2));
    CHECK(ss.apply(2) == sigma.apply(1));
    CHECK(ss.apply(3) == sigma.apply(3));
}

TEST_CASE("inverse composes to the identity") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& sigma : enumerate_permutations(n)) {
            CHECK(compose(sigma, sigma.inverse()).is_identity());
            CHECK(compose(sigma.inverse(), sigma).is_identity());
        }
}

TEST_CASE("gkm pairs") {
    auto p21 = gkm_pairs(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0].I == Subset(2, {1}));
    CHECK(p21[0].J == Subset(2, {2}));
    CHECK(p21[0].i == 1);
    CHECK(p21[0].j == 2);

    CHECK(gkm_pairs(3, 2).size() == 3);

    // Brute-force count of pairs with one-element intersection at (4, 2).
    const auto subs = enumerate_subsets(4, 2);
    int expected = 0;
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = a + 1; b < subs.size(); ++b) {
            std::set<int> inter;
            for (int x : subs[a].elements())
                if (subs[b].contains(x)) inter.insert(x);
            if (inter.size() == 1) ++expected;
        }
    CHECK(expected == 12);
    const auto pairs = gkm_pairs(4, 2);
    CHECK(pairs.size() == 12);
    for (const auto& p : pairs) {
        CHECK(p.I.contains(p.i));
        CHECK_FALSE(p.I.contains(p.j));
        CHECK(p.J.contains(p.j));
        CHECK_FALSE(p.J.contains(p.i));
    }
}

TEST_CASE("parsing") {
    CHECK(Subset::parse(4, "2,4") == Subset(4, {2, 4}));
    CHECK(Subset::parse(3, "none") == Subset::empty(3));
    CHECK_THROWS(Subset::parse(3, "4"));
    CHECK_THROWS(Subset::parse(3, "1,1"));
    CHECK(Permutation::parse("2,3,1").apply(2) == 3);
    CHECK_THROWS(Permutation::parse("2,2,1"));
    CHECK(Permutation::parse("2,3,1").str() == "2,3,1");
}

TEST_CASE("basis order is by size then lex") {
    const auto all = enumerate_all_subsets(3);
    REQUIRE(all.size() == 8);
    CHECK(all[0] == Subset::empty(3));
    CHECK(all[1] == Subset(3, {1}));
    CHECK(all[4] == Subset(3, {1, 2}));
    CHECK(all[7] == Subset(3, {1, 2, 3}));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("tensor basis dictionary") {
    const TensorBasisIndex v{Subset(3, {1, 3})};
    CHECK(v.letter(1) == 2);
    CHECK(v.letter(2) == 1);
    CHECK(v.letter(3) == 2);
}
