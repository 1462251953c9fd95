#include "stabenv/weight_function.hpp"

#include <algorithm>
#include <map>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

LinearForm t_var(VarContext ctx, int a) { return LinearForm::variable(ctx, VarId::t(a)); }
LinearForm z_var(VarContext ctx, int b) { return LinearForm::variable(ctx, VarId::z(b)); }
LinearForm h_var(VarContext ctx) { return LinearForm::variable(ctx, VarId::h()); }

std::vector<int> identity_slot_map(VarContext ctx) {
    std::vector<int> m(ctx.var_count());
    for (int s = 0; s < ctx.var_count(); ++s) m[s] = s;
    return m;
}

}  // namespace

LinearFactorProduct build_U(VersionTag r, int n, const Subset& I) {
    const int k = I.k();
    if (I.n() != n) throw GuardViolation("build_U: subset ambient size mismatch");
    const VarContext ctx = tz_context(k, n);
    LinearFactorProduct U(ctx);
    const bool zt_flavor = (r == VersionTag::r01 || r == VersionTag::r11);

    for (int a = 1; a <= k; ++a) {
        const int ia = I.element(a - 1);
        for (int b = 1; b < ia; ++b) {
            // r=00,10 use (t_a - z_b + h); r=01,11 use (z_b - t_a + h).
            LinearForm f = zt_flavor ? z_var(ctx, b) - t_var(ctx, a) + h_var(ctx)
                                     : t_var(ctx, a) - z_var(ctx, b) + h_var(ctx);
            U.mul_form(f);
        }
        for (int b = ia + 1; b <= n; ++b) U.mul_form(z_var(ctx, b) - t_var(ctx, a));
    }

    for (int a = 1; a <= k; ++a) {
        for (int b = a + 1; b <= k; ++b) {
            U.mul_form(t_var(ctx, b) - t_var(ctx, a), -1);
            if (r == VersionTag::r00) U.mul_form(t_var(ctx, b) - t_var(ctx, a) + h_var(ctx), -1);
            if (r == VersionTag::r11) U.mul_form(t_var(ctx, b) - t_var(ctx, a) + h_var(ctx), +1);
        }
    }

    if (zt_flavor) {
        U.mul_form(h_var(ctx), k);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                U.mul_form(z_var(ctx, b) - z_var(ctx, a) + h_var(ctx));
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= n; ++b)
                U.mul_form(z_var(ctx, b) - t_var(ctx, a) + h_var(ctx), -1);
    }
    return U;
}

std::vector<LinearFactorProduct> symmetrize(const LinearFactorProduct& U, int k) {
    const VarContext ctx = U.ctx();
    if (ctx.k != k) throw GuardViolation("symmetrize: context/k mismatch");
    std::vector<LinearFactorProduct> terms;
    for (const Permutation& tau : enumerate_permutations(k)) {
        auto map = identity_slot_map(ctx);
        for (int a = 1; a <= k; ++a) map[a - 1] = tau.apply(a) - 1;
        terms.push_back(U.rename(map));
    }
    return terms;
}

SymmetrizedRF weight_function_id(VersionTag r, int n, const Subset& I) {
    SymmetrizedRF W;
    W.spec = {r, n, I.k(), Permutation::identity(n), I};
    W.terms = symmetrize(build_U(r, n, I), I.k());
    return W;
}

SymmetrizedRF twist(const SymmetrizedRF& W, const Permutation& sigma) {
    if (!W.spec.sigma.is_identity())
        throw GuardViolation("twist expects an untwisted weight function");
    if (sigma.n() != W.spec.n) throw GuardViolation("twist: permutation size mismatch");
    const VarContext ctx = tz_context(W.spec.k, W.spec.n);
    auto map = identity_slot_map(ctx);
    for (int b = 1; b <= W.spec.n; ++b)
        map[ctx.slot(VarId::z(b))] = ctx.slot(VarId::z(sigma.apply(b)));
    SymmetrizedRF out;
    out.spec = {W.spec.r, W.spec.n, W.spec.k, sigma, apply_to_subset(sigma, W.spec.I)};
    out.terms.reserve(W.terms.size());
    for (const auto& t : W.terms) out.terms.push_back(t.rename(map));
    return out;
}

SymmetrizedRF weight_function(VersionTag r, int n, const Permutation& sigma, const Subset& I) {
    const Subset J = apply_to_subset(sigma.inverse(), I);
    if (sigma.is_identity()) return weight_function_id(r, n, J);
    return twist(weight_function_id(r, n, J), sigma);
}

namespace {

std::vector<int> restriction_slot_map(VarContext ctx, const Subset& J) {
    auto map = identity_slot_map(ctx);
    for (int s = 1; s <= J.k(); ++s)
        map[ctx.slot(VarId::t(s))] = ctx.slot(VarId::z(J.element(s - 1)));
    return map;
}

}  // namespace

namespace {

std::map<LinearForm, int> denominator_lcm(const std::vector<LinearFactorProduct>& terms);
LinearFactorProduct cleared_term(const LinearFactorProduct& term,
                                 const std::map<LinearForm, int>& lcm);

}  // namespace

Polynomial restrict_to(const SymmetrizedRF& W, const Subset& J) {
    if (J.k() != W.spec.k) throw GuardViolation("restrict_to: |J| != k");
    const VarContext ctx = tz_context(W.spec.k, W.spec.n);
    const auto map = restriction_slot_map(ctx, J);
    // Substitute termwise; equal factors cancel within each factored term.
    // The h-shifted denominator factors always cancel per term, but the
    // z_{j_b} - z_{j_a} ones (images of t_b - t_a) only cancel in the sum,
    // so the survivors are combined over their small common denominator and
    // divided out exactly at the end.
    std::vector<LinearFactorProduct> survivors;
    for (const auto& term : W.terms) {
        LinearFactorProduct sub(ctx);
        try {
            sub = term.rename(map);
        } catch (const DenominatorVanishes&) {
            throw NonCancellingDenominator("restriction made a denominator factor vanish");
        }
        if (!sub.is_zero()) survivors.push_back(std::move(sub));
    }
    Polynomial sum(ctx);
    const auto lcm = denominator_lcm(survivors);
    if (lcm.empty()) {
        for (const auto& term : survivors) sum += term.expand();
    } else {
        Polynomial numerator(ctx);
        for (const auto& term : survivors) numerator += cleared_term(term, lcm).expand();
        LinearFactorProduct den(ctx);
        for (const auto& [form, m] : lcm) den.mul_form(form, m);
        try {
            sum = exact_divide(numerator, den.expand());
        } catch (const NonExactDivision&) {
            throw NonCancellingDenominator("restriction sum is not a polynomial");
        }
    }
    return sum.with_context(z_context(W.spec.n));
}

int surviving_terms(const SymmetrizedRF& W, const Subset& J) {
    const VarContext ctx = tz_context(W.spec.k, W.spec.n);
    const auto map = restriction_slot_map(ctx, J);
    int alive = 0;
    for (const auto& term : W.terms)
        if (!term.rename(map).is_zero()) ++alive;
    return alive;
}

namespace {

std::map<LinearForm, int> denominator_lcm(const std::vector<LinearFactorProduct>& terms) {
    std::map<LinearForm, int> lcm;
    for (const auto& term : terms)
        for (const auto& [form, exp] : term.factors())
            if (exp < 0) {
                auto [it, inserted] = lcm.try_emplace(form, -exp);
                if (!inserted) it->second = std::max(it->second, -exp);
            }
    return lcm;
}

LinearFactorProduct cleared_term(const LinearFactorProduct& term,
                                 const std::map<LinearForm, int>& lcm) {
    LinearFactorProduct scaled = term;
    for (const auto& [form, m] : lcm) scaled.mul_form(form, m);
    if (scaled.has_negative_exponent())
        throw GuardViolation("denominator LCM did not clear all factors");
    return scaled;
}

}  // namespace

RationalFunction expand_rf(const SymmetrizedRF& W) {
    const VarContext ctx = tz_context(W.spec.k, W.spec.n);
    if (W.terms.empty()) return RationalFunction::zero(ctx);
    const auto lcm = denominator_lcm(W.terms);
    LinearFactorProduct den(ctx);
    for (const auto& [form, m] : lcm) den.mul_form(form, m);
    const Polynomial den_poly = den.expand();

    // The tau-th term is the t-relabel of the first, so one expansion plus
    // cheap exponent remaps covers the whole sum.  Each relabel of the
    // cleared denominator product may flip an odd number of normalized
    // factors, so it contributes a sign.  Verify the structure and expand
    // term by term if it ever fails to hold.
    const auto taus = enumerate_permutations(W.spec.k);
    bool relabel_structure = taus.size() == W.terms.size();
    std::vector<std::vector<int>> maps;
    std::vector<Rational> signs;
    if (relabel_structure) {
        for (std::size_t i = 0; i < taus.size(); ++i) {
            auto map = identity_slot_map(ctx);
            for (int a = 1; a <= W.spec.k; ++a) map[a - 1] = taus[i].apply(a) - 1;
            const LinearFactorProduct den_relabeled = den.rename(map);
            if (!(W.terms[i] == W.terms[0].rename(map)) ||
                !(den_relabeled.factors() == den.factors())) {
                relabel_structure = false;
                break;
            }
            maps.push_back(std::move(map));
            signs.push_back(den_relabeled.scalar());
        }
    }

    Polynomial num(ctx);
    if (relabel_structure) {
        const Polynomial base = cleared_term(W.terms[0], lcm).expand();
        for (std::size_t i = 0; i < maps.size(); ++i) num += base.rename(maps[i]) * signs[i];
    } else {
        for (const auto& term : W.terms) num += cleared_term(term, lcm).expand();
    }
    return RationalFunction(std::move(num), den_poly);
}

Polynomial restrict_via_expansion(const SymmetrizedRF& W, const Subset& J) {
    if (W.spec.k > 4) throw GuardViolation("restrict_via_expansion guarded to k <= 4");
    if (J.k() != W.spec.k) throw GuardViolation("restrict_via_expansion: |J| != k");
    const VarContext ctx = tz_context(W.spec.k, W.spec.n);
    const RationalFunction rf = expand_rf(W);
    const auto map = restriction_slot_map(ctx, J);
    const Polynomial num = rf.num().rename(map);
    const Polynomial den = rf.den().rename(map);
    if (den.is_zero()) throw NonCancellingDenominator("expanded denominator vanished at t = z_J");
    return exact_divide(num, den).with_context(z_context(W.spec.n));
}

bool factored_sum_is_zero(const std::vector<LinearFactorProduct>& terms) {
    if (terms.empty()) return true;
    const VarContext ctx = terms[0].ctx();
    const auto lcm = denominator_lcm(terms);
    Polynomial total(ctx);
    for (const auto& term : terms) {
        if (term.is_zero()) continue;
        total += cleared_term(term, lcm).expand();
    }
    return total.is_zero();
}

RecursionCase recursion_case(const Permutation& sigma, int a, const Subset& I) {
    const bool u_in = I.contains(sigma.apply(a));
    const bool v_in = I.contains(sigma.apply(a + 1));
    if (u_in && v_in) return RecursionCase::both_inside;
    if (!u_in && !v_in) return RecursionCase::both_outside;
    return RecursionCase::mixed;
}

namespace {

// Terms of the cleared identity: q * W_{sigma s, I} - ... = 0, each carrying
// its scalar linear-form coefficients folded into the factored products.
std::vector<LinearFactorProduct> recursion_identity_terms(VersionTag r, int n,
                                                          const Permutation& sigma, int a,
                                                          const Subset& I) {
    const int u = sigma.apply(a);
    const int v = sigma.apply(a + 1);
    const VarContext ctx = tz_context(I.k(), n);
    const LinearForm q = z_var(ctx, v) - z_var(ctx, u) + h_var(ctx);
    const Permutation sigma_s = compose(sigma, Permutation::adjacent(n, a));
    const SymmetrizedRF left = weight_function(r, n, sigma_s, I);
    const SymmetrizedRF right1 = weight_function(r, n, sigma, I);

    std::vector<LinearFactorProduct> out;
    auto push_all = [&](const SymmetrizedRF& W, const LinearForm* coeff_form, int sign) {
        for (const auto& term : W.terms) {
            LinearFactorProduct t = term;
            if (coeff_form) t.mul_form(*coeff_form);
            if (sign < 0) t.mul_scalar(Rational(-1));
            if (!t.is_zero()) out.push_back(std::move(t));
        }
    };

    switch (recursion_case(sigma, a, I)) {
        case RecursionCase::mixed: {
            const LinearForm num1 = z_var(ctx, u) - z_var(ctx, v);
            const LinearForm num2 = h_var(ctx);
            const SymmetrizedRF right2 =
                weight_function(r, n, sigma, apply_transposition(I, u, v));
            push_all(left, &q, +1);
            push_all(right1, &num1, -1);
            push_all(right2, &num2, -1);
            break;
        }
        case RecursionCase::both_inside:
        case RecursionCase::both_outside: {
            const bool unit_factor =
                recursion_case(sigma, a, I) == RecursionCase::both_inside
                    ? (r == VersionTag::r00 || r == VersionTag::r01)
                    : (r == VersionTag::r00 || r == VersionTag::r10);
            if (unit_factor) {
                push_all(left, nullptr, +1);
                push_all(right1, nullptr, -1);
            } else {
                const LinearForm gamma = z_var(ctx, u) - z_var(ctx, v) + h_var(ctx);
                push_all(left, &q, +1);
                push_all(right1, &gamma, -1);
            }
            break;
        }
    }
    return out;
}

bool involves_spectator(const LinearForm& form, int n, int u, int v) {
    const VarContext& ctx = form.ctx();
    for (int w = 1; w <= n; ++w) {
        if (w == u || w == v) continue;
        if (!form.coefficient(VarId::z(w)).is_zero()) return true;
    }
    return false;
}

}  // namespace

RecursionCheck check_weight_recursion(VersionTag r, int n, const Permutation& sigma, int a,
                                      const Subset& I, RandomStream& rng) {
    if (a < 1 || a >= n) throw GuardViolation("recursion index a out of range");
    const int u = sigma.apply(a);
    const int v = sigma.apply(a + 1);
    const auto terms = recursion_identity_terms(r, n, sigma, a, I);
    const VarContext ctx = tz_context(I.k(), n);

    // Random-point falsification first: cheap, exact, catches wrong
    // formulas immediately.
    for (int trial = 0; trial < 20; ++trial) {
        Rational total(0);
        bool ok = false;
        for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
            std::vector<Rational> point;
            point.reserve(ctx.var_count());
            for (int s = 0; s < ctx.var_count(); ++s) point.push_back(rng.next_rational());
            total = Rational(0);
            ok = true;
            for (const auto& t : terms) {
                auto val = t.evaluate(point);
                if (!val) {
                    ok = false;
                    break;
                }
                total += *val;
            }
        }
        if (ok && !total.is_zero()) return {false, false};
    }

    // Grouped certificate: split every term into (spectator factors) x
    // (local factors in t, z_u, z_v, h); the identity closes within each
    // spectator class, so each class sums to zero by a small expansion.
    std::map<std::map<LinearForm, int>, std::vector<LinearFactorProduct>> classes;
    for (const auto& term : terms) {
        std::map<LinearForm, int> key;
        LinearFactorProduct local(ctx, term.scalar());
        for (const auto& [form, exp] : term.factors()) {
            if (involves_spectator(form, n, u, v))
                key.emplace(form, exp);
            else
                local.mul_form(form, exp);
        }
        classes[std::move(key)].push_back(std::move(local));
    }
    bool certified = true;
    for (const auto& [key, locals] : classes) {
        if (!factored_sum_is_zero(locals)) {
            certified = false;
            break;
        }
    }
    if (certified) return {true, false};
    return {factored_sum_is_zero(terms), true};
}

}  // namespace stabenv
