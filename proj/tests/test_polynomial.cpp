#include <doctest.h>

#include "stabenv/fixed_points.hpp"
#include "stabenv/linear_form.hpp"
#include "stabenv/polynomial.hpp"
#include "stabenv/rational_function.hpp"

using namespace stabenv;

namespace {

const VarContext ctx{2, 2};  // t1, t2, z1, z2, h

Polynomial t(int a) { return Polynomial::variable(ctx, VarId::t(a)); }
Polynomial z(int b) { return Polynomial::variable(ctx, VarId::z(b)); }
Polynomial h() { return Polynomial::variable(ctx, VarId::h()); }

Polynomial random_poly(RandomStream& rng, int max_terms = 6, int max_deg = 3) {
    Polynomial p(ctx);
    const int terms = 1 + static_cast<int>(rng.next_u64() % max_terms);
    for (int i = 0; i < terms; ++i) {
        Mono m = 0;
        int budget = max_deg;
        for (int s = 0; s < ctx.var_count(); ++s) {
            const int e = static_cast<int>(rng.next_u64() % (budget + 1));
            m |= ctx.unit(s, e);
            budget -= e;
        }
        p.add_term(m, rng.next_rational(20, 5));
    }
    return p;
}

std::vector<Rational> random_point(RandomStream& rng) {
    std::vector<Rational> pt;
    for (int s = 0; s < ctx.var_count(); ++s) pt.push_back(rng.next_rational(10, 3));
    return pt;
}

}  // namespace

TEST_CASE("cancellation and identity") {
    CHECK((z(2) - t(1)) + (t(1) - z(1) + h()) == z(2) - z(1) + h());
    CHECK((z(2) - t(1)) * Polynomial::one(ctx) == z(2) - t(1));
}

TEST_CASE("hand expansion checked by evaluation") {
    const Polynomial prod = (t(2) - t(1) + h()) * (t(2) - t(1));
    const Polynomial expanded =
        t(2) * t(2) - Rational(2) * (t(1) * t(2)) + t(1) * t(1) + h() * t(2) - h() * t(1);
    CHECK(prod == expanded);
    RandomStream rng(2024);
    for (int i = 0; i < 5; ++i) {
        const auto pt = random_point(rng);
        CHECK(prod.evaluate(pt) == expanded.evaluate(pt));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    RandomStream rng(99);
    for (int i = 0; i < 60; ++i) {
        const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + (-a) == Polynomial::zero(ctx));
    }
}

TEST_CASE("substitution") {
    CHECK(substitute(z(2) - t(1), {{VarId::t(1), z(1)}}) == z(2) - z(1));
    // Substituting into a denominator that collapses to zero must signal.
    const RationalFunction f(Polynomial::one(ctx), z(1) - t(1));
    CHECK_THROWS_AS(substitute(f, {{VarId::t(1), z(1)}}), DenominatorVanishes);
    const RationalFunction ok = substitute(f, {{VarId::t(1), z(2)}});
    CHECK(ok.den() == z(1) - z(2));
}

TEST_CASE("divides_linear basics") {
    const LinearForm z12 = LinearForm::variable(ctx, VarId::z(1)) -
                           LinearForm::variable(ctx, VarId::z(2));
    CHECK(divides_linear((z(1) - z(2)) * (z(1) + h()), z12));
    const LinearForm hf = LinearForm::variable(ctx, VarId::h());
    CHECK(divides_linear(h() * (z(2) - z(1) + h()), hf));
    const LinearForm shifted = LinearForm::variable(ctx, VarId::z(2)) -
                               LinearForm::variable(ctx, VarId::z(1)) +
                               LinearForm::variable(ctx, VarId::h());
    CHECK_FALSE(divides_linear(z(2) - z(1), shifted));
}

TEST_CASE("divides_linear on random products") {
    RandomStream rng(5);
    const LinearForm L = LinearForm::variable(ctx, VarId::z(1)) -
                         LinearForm::variable(ctx, VarId::z(2)) +
                         LinearForm::variable(ctx, VarId::h());
    for (int i = 0; i < 30; ++i) {
        Polynomial f = random_poly(rng);
        if (f.is_zero()) continue;
        CHECK(divides_linear(f * L.to_polynomial(), L));
        const Rational cst = rng.next_nonzero_rational();
        CHECK_FALSE(divides_linear(f * L.to_polynomial() + Polynomial::constant(ctx, cst), L));
    }
}

TEST_CASE("divide_by_linear recovers the cofactor") {
    RandomStream rng(11);
    const LinearForm L = LinearForm::variable(ctx, VarId::t(2)) -
                         LinearForm::variable(ctx, VarId::t(1)) +
                         LinearForm::variable(ctx, VarId::h());
    for (int i = 0; i < 20; ++i) {
        const Polynomial f = random_poly(rng);
        const auto q = divide_by_linear(f * L.to_polynomial(), L);
        REQUIRE(q.has_value());
        CHECK(*q == f);
    }
    CHECK_FALSE(divide_by_linear(z(1) + h(), L).has_value());
}

TEST_CASE("exact multivariate division") {
    RandomStream rng(13);
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_poly(rng), g = random_poly(rng);
        if (g.is_zero()) continue;
        CHECK(exact_divide(f * g, g) == f);
    }
    CHECK_THROWS_AS(exact_divide(z(1) * z(1) + h(), z(1) + h()), NonExactDivision);
}

TEST_CASE("homogeneity and degree") {
    std::uint64_t d = 0;
    CHECK((z(1) * z(2) + h() * h()).is_homogeneous(&d));
    CHECK(d == 2);
    CHECK_FALSE((z(1) + h() * h()).is_homogeneous());
    CHECK(Polynomial::zero(ctx).is_homogeneous());
}

TEST_CASE("rational function equality via cross-multiplication") {
    const RationalFunction a(z(1) * z(2), z(2));          // z1 z2 / z2
    const RationalFunction b(z(1) * h(), h());            // z1 h / h
    CHECK(a.equals(b));
    CHECK_FALSE(a.equals(RationalFunction(z(2), Polynomial::one(ctx))));
    // Equivalence relation on random triples p/q ~ (pc)/(qc).
    RandomStream rng(17);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = random_poly(rng), q = random_poly(rng), c = random_poly(rng);
        if (q.is_zero() || c.is_zero()) continue;
        const RationalFunction lhs(p, q);
        const RationalFunction rhs(p * c, q * c);
        CHECK(lhs.equals(rhs));
    }
    CHECK_THROWS_AS(RationalFunction(z(1), Polynomial::zero(ctx)), DenominatorVanishes);
}

TEST_CASE("rename merges exponents") {
    // t1 -> z1 on a monomial with both t1 and z1 adds the exponents.
    std::vector<int> map(ctx.var_count());
    for (int s = 0; s < ctx.var_count(); ++s) map[s] = s;
    map[ctx.slot(VarId::t(1))] = ctx.slot(VarId::z(1));
    const Polynomial p = t(1) * t(1) * z(1) + t(1) * z(2);
    CHECK(p.rename(map) == z(1) * z(1) * z(1) + z(1) * z(2));
}

TEST_CASE("with_context rejects stray variables") {
    CHECK_THROWS(t(1).with_context(z_context(2)));
    CHECK((z(1) + h()).with_context(z_context(2)) ==
          Polynomial::variable(z_context(2), VarId::z(1)) +
              Polynomial::variable(z_context(2), VarId::h()));
}
