#include <doctest.h>

#include "stabenv/fixed_points.hpp"
#include "stabenv/rf_matrix.hpp"

using namespace stabenv;

namespace {

const VarContext ctx = z_context(2);

Polynomial z(int b) { return Polynomial::variable(ctx, VarId::z(b)); }
Polynomial h() { return Polynomial::variable(ctx, VarId::h()); }

}  // namespace

TEST_CASE("identity system returns the right-hand side") {
    RFMatrix I2 = RFMatrix::identity(ctx, 2);
    RFMatrix B(ctx, 2, 2);
    B.at(0, 0) = RationalFunction(z(1));
    B.at(0, 1) = RationalFunction(h(), z(2));
    B.at(1, 0) = RationalFunction(z(1) + z(2));
    B.at(1, 1) = RationalFunction(z(1) * z(2));
    const RFMatrix X = rf_solve(I2, B);
    CHECK(X.equals(B));
}

TEST_CASE("diagonal system inverts entrywise") {
    RFMatrix M(ctx, 2, 2);
    M.at(0, 0) = RationalFunction(z(1));
    M.at(1, 1) = RationalFunction(z(2));
    const RFMatrix X = rf_solve(M, RFMatrix::identity(ctx, 2));
    CHECK(X.at(0, 0).equals(RationalFunction(Polynomial::one(ctx), z(1))));
    CHECK(X.at(1, 1).equals(RationalFunction(Polynomial::one(ctx), z(2))));
    CHECK(X.at(0, 1).is_zero());
}

TEST_CASE("singular matrix detected") {
    RFMatrix M(ctx, 2, 2);
    M.at(0, 0) = RationalFunction(z(1));
    M.at(0, 1) = RationalFunction(z(2));
    M.at(1, 0) = RationalFunction(z(1) * h());
    M.at(1, 1) = RationalFunction(z(2) * h());
    CHECK_THROWS_AS(rf_solve(M, RFMatrix::identity(ctx, 2)), SingularMatrix);
}

TEST_CASE("random systems verify by back-substitution") {
    RandomStream rng(41);
    auto rand_poly = [&](int deg) {
        Polynomial p(ctx);
        for (int i = 0; i < 4; ++i) {
            Mono m = 0;
            int budget = deg;
            for (int s = 0; s < ctx.var_count(); ++s) {
                const int e = static_cast<int>(rng.next_u64() % (budget + 1));
                m |= ctx.unit(s, e);
                budget -= e;
            }
            p.add_term(m, rng.next_rational(9, 3));
        }
        return p;
    };
    int solved = 0;
    for (int trial = 0; trial < 12 && solved < 6; ++trial) {
        RFMatrix M(ctx, 3, 3), B(ctx, 3, 2);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Polynomial num = rand_poly(2);
                if (num.is_zero()) num = Polynomial::one(ctx);
                M.at(i, j) = RationalFunction(num);
            }
            for (int j = 0; j < 2; ++j) B.at(i, j) = RationalFunction(rand_poly(2));
        }
        try {
            const RFMatrix X = rf_solve(M, B);
            CHECK((M * X - B).is_zero());
            ++solved;
        } catch (const SingularMatrix&) {
            // fine, try another random instance
        }
    }
    CHECK(solved >= 3);
}

TEST_CASE("rational RREF solver") {
    // Consistent underdetermined system: free variable pinned to zero.
    std::vector<std::vector<Rational>> A = {{1, 2, 0}, {0, 0, 1}};
    std::vector<Rational> b = {3, 5};
    auto x = solve_rational_system(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(3));
    CHECK((*x)[1] == Rational(0));
    CHECK((*x)[2] == Rational(5));

    // Inconsistent system.
    std::vector<std::vector<Rational>> A2 = {{1, 1}, {2, 2}};
    std::vector<Rational> b2 = {1, 3};
    CHECK_FALSE(solve_rational_system(A2, b2).has_value());
}
