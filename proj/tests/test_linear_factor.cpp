#include <doctest.h>

#include "stabenv/factored_product.hpp"
#include "stabenv/fixed_points.hpp"

using namespace stabenv;

namespace {

const VarContext ctx{2, 2};

LinearForm t(int a) { return LinearForm::variable(ctx, VarId::t(a)); }
LinearForm z(int b) { return LinearForm::variable(ctx, VarId::z(b)); }
LinearForm h() { return LinearForm::variable(ctx, VarId::h()); }

}  // namespace

TEST_CASE("linear form normalization and orientation") {
    auto [norm, sign] = (z(2) - t(1)).normalized();
    CHECK(sign == -1);
    CHECK(norm == t(1) - z(2));
    auto [norm2, sign2] = (t(1) - z(1) + h()).normalized();
    CHECK(sign2 == 1);
    CHECK((z(2) - t(1)).str() == "z2 - t1");
    CHECK((t(1) - z(1) + h()).str() == "t1 - z1 + h");
    CHECK((z(2) - z(1) + h()).str() == "z2 - z1 + h");
}

TEST_CASE("expand simple products") {
    LinearFactorProduct a(ctx);
    a.mul_form(z(2) - t(1));
    CHECK(a.expand() == (Polynomial::variable(ctx, VarId::z(2)) -
                         Polynomial::variable(ctx, VarId::t(1))));
    CHECK(a.str() == "z2 - t1");

    LinearFactorProduct b(ctx);
    b.mul_form(t(2) - t(1), -1);
    b.mul_form(z(2) - t(1));
    CHECK(b.has_negative_exponent());
    CHECK_THROWS(b.expand());
    const RationalFunction rf = b.expand_rf();
    const RationalFunction expected(Polynomial::variable(ctx, VarId::z(2)) -
                                        Polynomial::variable(ctx, VarId::t(1)),
                                    Polynomial::variable(ctx, VarId::t(2)) -
                                        Polynomial::variable(ctx, VarId::t(1)));
    CHECK(rf.equals(expected));
    CHECK(b.str() == "(z2 - t1) / [(t2 - t1)]");
}

TEST_CASE("equal factors merge and cancel") {
    LinearFactorProduct p(ctx);
    p.mul_form(z(1) - t(1) + h());
    p.mul_form(z(1) - t(1) + h(), -1);
    CHECK(p.factors().empty());
    CHECK(p.scalar() == Rational(1));
    // Opposite orientations merge up to sign.
    LinearFactorProduct q(ctx);
    q.mul_form(z(1) - z(2));
    q.mul_form(z(2) - z(1), -1);
    CHECK(q.factors().empty());
    CHECK(q.scalar() == Rational(-1));
}

TEST_CASE("zero form handling") {
    LinearFactorProduct p(ctx);
    p.mul_form(LinearForm(ctx), 2);  // zero form in the numerator
    CHECK(p.is_zero());
    LinearFactorProduct q(ctx);
    CHECK_THROWS_AS(q.mul_form(LinearForm(ctx), -1), DenominatorVanishes);
}

TEST_CASE("factored evaluation matches expanded evaluation") {
    RandomStream rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        LinearFactorProduct p(ctx, rng.next_nonzero_rational(9, 4));
        p.mul_form(t(1) - z(1) + h());
        p.mul_form(z(2) - t(2));
        p.mul_form(t(2) - t(1) + h(), 2);
        p.mul_form(h());
        const Polynomial expanded = p.expand();
        for (int i = 0; i < 10; ++i) {
            std::vector<Rational> pt;
            for (int s = 0; s < ctx.var_count(); ++s) pt.push_back(rng.next_rational(8, 3));
            auto direct = p.evaluate(pt);
            REQUIRE(direct.has_value());
            CHECK(*direct == expanded.evaluate(pt));
        }
    }
}

TEST_CASE("evaluate reports denominator zeros") {
    LinearFactorProduct p(ctx);
    p.mul_form(t(2) - t(1), -1);
    std::vector<Rational> pt(ctx.var_count(), Rational(1));
    CHECK_FALSE(p.evaluate(pt).has_value());
    pt[ctx.slot(VarId::t(2))] = Rational(2);
    CHECK(p.evaluate(pt).has_value());
}

TEST_CASE("rename drops vanishing numerator factors before denominators") {
    // t1 -> z1 kills the numerator factor (z1 - t1); the result is zero even
    // though another factor sits in the denominator.
    LinearFactorProduct p(ctx);
    p.mul_form(z(1) - t(1));
    p.mul_form(t(2) - t(1), -1);
    std::vector<int> map(ctx.var_count());
    for (int s = 0; s < ctx.var_count(); ++s) map[s] = s;
    map[ctx.slot(VarId::t(1))] = ctx.slot(VarId::z(1));
    CHECK(p.rename(map).is_zero());

    // A vanishing denominator with a surviving numerator raises.
    LinearFactorProduct q(ctx);
    q.mul_form(z(2) - t(1));
    q.mul_form(z(1) - t(1), -1);
    CHECK_THROWS_AS(q.rename(map), DenominatorVanishes);
}

TEST_CASE("display uses table orientation") {
    LinearFactorProduct p(ctx, Rational(1));
    p.mul_form(h());
    p.mul_form(z(2) - z(1) + h());
    p.mul_form(z(2) - t(1) + h(), -1);
    CHECK(p.str() == "(h)*(z2 - z1 + h) / [(z2 - t1 + h)]");
}
