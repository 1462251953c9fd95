#include <doctest.h>

#include "stabenv/rmatrix.hpp"
#include "stabenv/weight_function.hpp"

using namespace stabenv;

namespace {

RationalFunction sp(const char* num, const char* den) {
    // tiny helper: builds entries like (h+z)/(h-z) in the spectral context
    const VarContext c = spectral_context();
    auto parse_one = [&](const std::string& s) {
        const Polynomial zeta = Polynomial::variable(c, spectral_var());
        const Polynomial h = Polynomial::variable(c, VarId::h());
        if (s == "1") return Polynomial::one(c);
        if (s == "z") return zeta;
        if (s == "h") return h;
        if (s == "h-z") return h - zeta;
        if (s == "h+z") return h + zeta;
        throw std::runtime_error("bad spec");
    };
    return RationalFunction(parse_one(num), parse_one(den));
}

}  // namespace

TEST_CASE("closed-form matrices have the displayed corners and middle") {
    for (VersionTag r : kAllVersions) {
        const RMatrix R = closed_form_R(r);
        CHECK(R.block_structure_ok());
        CHECK(R.at(1, 1).equals(sp("z", "h-z")));
        CHECK(R.at(1, 2).equals(sp("h", "h-z")));
        const bool first_ratio = (r == VersionTag::r01 || r == VersionTag::r11);
        const bool last_ratio = (r == VersionTag::r10 || r == VersionTag::r11);
        CHECK(R.at(0, 0).equals(first_ratio ? sp("h+z", "h-z") : sp("1", "1")));
        CHECK(R.at(3, 3).equals(last_ratio ? sp("h+z", "h-z") : sp("1", "1")));
    }
}

TEST_CASE("check_matrix swaps the middle rows and is an involution") {
    const RMatrix R = closed_form_R(VersionTag::r00);
    const RMatrix C = check_matrix(R);
    CHECK(C.at(1, 1).equals(sp("h", "h-z")));
    CHECK(C.at(1, 2).equals(sp("z", "h-z")));
    CHECK(C.at(2, 1).equals(sp("z", "h-z")));
    CHECK(check_matrix(C).equals(R));
    CHECK(C.flavor() == RMatrixFlavor::geometric_Rcheck);
}

TEST_CASE("yangian matrices match the displayed tables") {
    const VarContext c = spectral_context();
    const Polynomial u = Polynomial::variable(c, spectral_var());
    const Polynomial one = Polynomial::one(c);
    {
        const auto [R, Rc] = yangian_R(VersionTag::r00);
        CHECK(R.at(0, 0).equals(RationalFunction(one + u)));
        CHECK(R.at(1, 2).equals(RationalFunction(u)));
        CHECK(R.at(1, 1).equals(RationalFunction(one)));
        CHECK(Rc.at(1, 1).equals(RationalFunction(u)));
        CHECK(Rc.at(1, 2).equals(RationalFunction(one)));
        CHECK(Rc.at(3, 3).equals(RationalFunction(one + u)));
    }
    {
        const auto [R, Rc] = yangian_R(VersionTag::r11);
        CHECK(R.at(0, 0).equals(RationalFunction(one - u)));
        CHECK(R.at(1, 2).equals(RationalFunction(-u)));
        CHECK(Rc.at(1, 2).equals(RationalFunction(-one)));
        CHECK(Rc.at(0, 0).equals(RationalFunction(u - one)));
    }
    {
        // Rcheck_10 lower corner is -1 + u.
        const auto [R, Rc] = yangian_R(VersionTag::r10);
        CHECK(Rc.at(3, 3).equals(RationalFunction(u - one)));
        CHECK(Rc.at(0, 0).equals(RationalFunction(u + one)));
        CHECK(R.at(3, 3).equals(RationalFunction(one - u)));
    }
}

TEST_CASE("embed at n=2 returns the matrix itself") {
    const VarContext zc = z_context(2);
    const Polynomial arg = Polynomial::variable(zc, VarId::z(2)) -
                           Polynomial::variable(zc, VarId::z(1));
    const RMatrix R = closed_form_R(VersionTag::r10);
    const BigOperator op = embed(R, 2, 1, 2, arg);
    // subset order {}, {1}, {2}, {1,2} vs tensor order v1v1, v1v2, v2v1, v2v2:
    // {1} <-> v2 (x) v1 sits at tensor slot 3.
    CHECK(op.entry(Subset::empty(2), Subset::empty(2))
              .equals(RationalFunction::one(zc)));
    const RationalFunction mid = op.entry(Subset(2, {1}), Subset(2, {1}));
    const Polynomial h = Polynomial::variable(zc, VarId::h());
    CHECK(mid.equals(RationalFunction(arg, h - arg)));
    CHECK(op.preserves_sectors());
}

TEST_CASE("embed against brute-force contraction on all 8 basis vectors") {
    // n=3, slots (1,3): walk every basis vector, apply the 4x4 matrix to the
    // (first, third) letters directly, and compare entry by entry.
    const VarContext zc = z_context(3);
    const Polynomial arg = Polynomial::variable(zc, VarId::z(1)) -
                           Polynomial::variable(zc, VarId::z(3));
    const RMatrix R = closed_form_R(VersionTag::r01);
    const BigOperator op = embed(R, 3, 1, 3, arg);
    const Polynomial h = Polynomial::variable(zc, VarId::h());
    auto lifted = [&](int i, int j) {
        RationalFunction e = R.at(i, j);
        // substitute zeta -> arg by hand: entries are c0 + c1*zeta over den
        const VarContext sc = spectral_context();
        Polynomial num(zc), den(zc);
        for (const auto& [m, coeff] : e.num().terms()) {
            Polynomial piece = Polynomial::constant(zc, coeff);
            piece = piece * arg.pow(static_cast<unsigned>(sc.exponent(m, sc.slot(spectral_var()))));
            piece = piece * h.pow(static_cast<unsigned>(sc.exponent(m, sc.slot(VarId::h()))));
            num += piece;
        }
        for (const auto& [m, coeff] : e.den().terms()) {
            Polynomial piece = Polynomial::constant(zc, coeff);
            piece = piece * arg.pow(static_cast<unsigned>(sc.exponent(m, sc.slot(spectral_var()))));
            piece = piece * h.pow(static_cast<unsigned>(sc.exponent(m, sc.slot(VarId::h()))));
            den += piece;
        }
        return RationalFunction(num, den);
    };
    for (const auto& col : enumerate_all_subsets(3)) {
        const int cu = col.contains(1) ? 1 : 0, cv = col.contains(3) ? 1 : 0;
        for (const auto& row : enumerate_all_subsets(3)) {
            if (row.contains(2) != col.contains(2)) {
                CHECK(op.entry(row, col).is_zero());
                continue;
            }
            const int ru = row.contains(1) ? 1 : 0, rv = row.contains(3) ? 1 : 0;
            const RationalFunction expected = lifted((ru * 2 + rv), (cu * 2 + cv));
            CHECK(op.entry(row, col).equals(expected));
        }
    }
    // identity embeds to the identity operator
    RMatrix I4(RMatrixFlavor::geometric_R, VersionTag::r00);
    for (int i = 0; i < 4; ++i) I4.at(i, i) = RationalFunction::one(spectral_context());
    CHECK(embed(I4, 3, 1, 3, arg).equals(BigOperator::identity(3)));
}

TEST_CASE("yang-baxter holds for all eight and fails for a fake") {
    for (VersionTag r : kAllVersions) {
        CHECK(yang_baxter_check(closed_form_R(r)));
        CHECK(yang_baxter_check(yangian_R(r).first));
    }
    RMatrix fake(RMatrixFlavor::geometric_R, VersionTag::r00);
    const RationalFunction one = RationalFunction::one(spectral_context());
    fake.at(0, 0) = fake.at(3, 3) = one;
    fake.at(1, 1) = fake.at(1, 2) = fake.at(2, 1) = fake.at(2, 2) = one;
    CHECK_FALSE(yang_baxter_check(fake));
}

TEST_CASE("stab matrix blocks at n=2") {
    const RFMatrix M = stab_matrix(VersionTag::r00, 2, Permutation::identity(2));
    const VarContext zc = z_context(2);
    const Polynomial z1 = Polynomial::variable(zc, VarId::z(1));
    const Polynomial z2 = Polynomial::variable(zc, VarId::z(2));
    const Polynomial h = Polynomial::variable(zc, VarId::h());
    // columns in order {}, {1}, {2}, {1,2}
    CHECK(M.at(0, 0).equals(RationalFunction::one(zc)));
    CHECK(M.at(1, 1).equals(RationalFunction(z2 - z1)));
    CHECK(M.at(2, 1).is_zero());
    CHECK(M.at(1, 2).equals(RationalFunction(h)));
    CHECK(M.at(2, 2).equals(RationalFunction(z2 - z1 + h)));
    CHECK(M.at(3, 3).equals(RationalFunction::one(zc)));
    // k=0 sector of r=01 carries the scalar z2 - z1 + h.
    const RFMatrix M01 = stab_matrix(VersionTag::r01, 2, Permutation::identity(2));
    CHECK(M01.at(0, 0).equals(RationalFunction(z2 - z1 + h)));
    CHECK_THROWS_AS(stab_matrix(VersionTag::r00, 4, Permutation::identity(4)), GuardViolation);
}

TEST_CASE("geometric R solved from stab matrices reproduces the displayed matrix") {
    // The displayed n=2 matrices correspond to sigma = s (they express the
    // s-family in the id-family); sigma = id gives the inverse, which is the
    // closed form at the opposite spectral argument.
    const VarContext zc = z_context(2);
    const Polynomial z1 = Polynomial::variable(zc, VarId::z(1));
    const Polynomial z2 = Polynomial::variable(zc, VarId::z(2));
    const Polynomial h = Polynomial::variable(zc, VarId::h());
    for (VersionTag r : kAllVersions) {
        const BigOperator Rs = geometric_R(r, 2, Permutation::transposition(2, 1, 2), 1);
        CHECK(Rs.entry(Subset(2, {1}), Subset(2, {1}))
                  .equals(RationalFunction(z1 - z2, z2 - z1 + h)));
        CHECK(Rs.entry(Subset(2, {1}), Subset(2, {2}))
                  .equals(RationalFunction(h, z2 - z1 + h)));
        const RationalFunction corner = Rs.entry(Subset(2, {1, 2}), Subset(2, {1, 2}));
        const bool ratio = (r == VersionTag::r10 || r == VersionTag::r11);
        CHECK(corner.equals(ratio ? RationalFunction(z1 - z2 + h, z2 - z1 + h)
                                  : RationalFunction::one(zc)));
        // Postcondition form at sigma = id.
        const BigOperator Rid = geometric_R(r, 2, Permutation::identity(2), 1);
        CHECK(Rid.mat.equals(embed(closed_form_R(r), 2, 1, 2, z2 - z1).mat));
        // Unitarity: the two compose to the identity.
        CHECK((Rs * Rid).equals(BigOperator::identity(2)));
    }
}

TEST_CASE("yangian identification with the sign bookkeeping") {
    for (VersionTag r : kAllVersions) {
        const YangianIdentification y = yangian_identification(r);
        CHECK(y.matches);
        CHECK(y.sign_twist == (r != VersionTag::r11));
    }
}
