#include <doctest.h>

#include <algorithm>

#include "stabenv/fixed_points.hpp"

using namespace stabenv;

namespace {

LinearForm zw(int n, int i, int j, bool h) { return LinearForm::z_weight(z_context(n), i, j, h); }

bool same_multiset(std::vector<LinearForm> a, std::vector<LinearForm> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

TEST_CASE("version tags") {
    for (VersionTag r : kAllVersions) CHECK(parse_version(to_string(r)) == r);
    CHECK_THROWS(parse_version("20"));
}

TEST_CASE("tangent weights at n=2") {
    const Subset I(2, {1});
    {
        auto [hor, ver] = tangent_weights(VersionTag::r00, 2, I);
        CHECK(same_multiset(hor.weights, {zw(2, 2, 1, false)}));
        CHECK(same_multiset(ver.weights, {zw(2, 1, 2, true)}));
    }
    {
        auto [hor, ver] = tangent_weights(VersionTag::r10, 2, I);
        CHECK(same_multiset(ver.weights, {zw(2, 1, 1, true), zw(2, 1, 2, true)}));
    }
    {
        // Three ordered ranges I x I, Ibar x Ibar, I x Ibar: the multiset is
        // {h, h, z1 - z2 + h}; the fiber dimension k^2 + (n-k)^2 + k(n-k)
        // and axiom A1 both pin this down.
        auto [hor, ver] = tangent_weights(VersionTag::r11, 2, I);
        CHECK(ver.weights.size() == 3);
        CHECK(same_multiset(ver.weights,
                            {zw(2, 1, 1, true), zw(2, 2, 2, true), zw(2, 1, 2, true)}));
    }
    {
        auto [hor, ver] = tangent_weights(VersionTag::r01, 2, I);
        CHECK(same_multiset(ver.weights, {zw(2, 1, 2, true), zw(2, 2, 2, true)}));
    }
}

TEST_CASE("sigma classification") {
    const Permutation id2 = Permutation::identity(2);
    const Permutation s2 = Permutation::transposition(2, 1, 2);
    WeightList w{{zw(2, 2, 1, false)}};
    CHECK(split_by_sigma(w, id2).repelling.size() == 1);
    CHECK(split_by_sigma(w, s2).attracting.size() == 1);
    WeightList neutral{{zw(2, 1, 1, true)}};
    CHECK(split_by_sigma(neutral, id2).neutral.size() == 1);
    CHECK(split_by_sigma(neutral, s2).neutral.size() == 1);

    // Not of the weight shape: a domain error.
    LinearForm bad(z_context(2));
    bad += LinearForm::variable(z_context(2), VarId::z(1));
    bad += LinearForm::variable(z_context(2), VarId::z(2));
    CHECK_THROWS(split_by_sigma(WeightList{{bad}}, id2));
}

TEST_CASE("euler products") {
    const VarContext c = z_context(2);
    const Polynomial z1 = Polynomial::variable(c, VarId::z(1));
    const Polynomial z2 = Polynomial::variable(c, VarId::z(2));
    const Polynomial h = Polynomial::variable(c, VarId::h());
    for (VersionTag r : kAllVersions) {
        auto tw = tangent_weights(r, 2, Subset(2, {1}));
        auto split = split_by_sigma(tw.horizontal, Permutation::identity(2));
        CHECK(euler_product(split.repelling, c) == z2 - z1);
    }
    CHECK(euler_product(WeightList{}, c) == Polynomial::one(c));
    // r=10 vertical under sigma = s: only z1 - z2 + h repels.
    auto tw10 = tangent_weights(VersionTag::r10, 2, Subset(2, {1}));
    auto s_split = split_by_sigma(tw10.vertical, Permutation::transposition(2, 1, 2));
    CHECK(euler_product(s_split.repelling, c) == z1 - z2 + h);
    CHECK(s_split.neutral.size() == 1);
}

TEST_CASE("dimension table") {
    CHECK(dimension_d(VersionTag::r00, 4, 2) == 4);
    CHECK(dimension_d(VersionTag::r11, 4, 2) == 6);
    CHECK(dimension_d(VersionTag::r10, 2, 1) == 1);
    CHECK(dimension_d(VersionTag::r01, 4, 1) == 6);
    CHECK_THROWS(dimension_d(VersionTag::r00, 2, 3));
}

TEST_CASE("repelling counts are sigma- and subset-independent") {
    for (VersionTag r : kAllVersions)
        for (int n = 1; n <= 5; ++n)
            for (const auto& sigma : enumerate_permutations(n))
                for (const auto& I : enumerate_all_subsets(n)) {
                    const auto tw = tangent_weights(r, n, I);
                    const auto hor = split_by_sigma(tw.horizontal, sigma);
                    const auto ver = split_by_sigma(tw.vertical, sigma);
                    CHECK(static_cast<long>(hor.repelling.size() + ver.repelling.size()) ==
                          dimension_d(r, n, I.k()));
                    CHECK(hor.neutral.size() == 0);
                }
}

TEST_CASE("r=00 vertical is the h-shift of the negated horizontal") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& I : enumerate_all_subsets(n)) {
            const auto tw = tangent_weights(VersionTag::r00, n, I);
            std::vector<LinearForm> shifted;
            const LinearForm h = LinearForm::variable(z_context(n), VarId::h());
            for (const auto& w : tw.horizontal.weights) shifted.push_back(-w + h);
            CHECK(same_multiset(shifted, tw.vertical.weights));
        }
}

TEST_CASE("euler product of repelling weights is homogeneous") {
    for (VersionTag r : kAllVersions)
        for (const auto& sigma : enumerate_permutations(3))
            for (const auto& I : enumerate_all_subsets(3)) {
                const auto tw = tangent_weights(r, 3, I);
                const auto ver = split_by_sigma(tw.vertical, sigma);
                const Polynomial e = euler_product(ver.repelling, z_context(3));
                std::uint64_t deg = 0;
                CHECK(e.is_homogeneous(&deg));
                CHECK(deg == ver.repelling.size());
            }
}
