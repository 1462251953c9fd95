#include "stabenv/envelope.hpp"

#include <algorithm>
#include <sstream>

#include "stabenv/errors.hpp"
#include "stabenv/linear_form.hpp"
#include "stabenv/rf_matrix.hpp"

namespace stabenv {

const Polynomial& GKMClass::at(const Subset& J) const {
    auto it = components.find(J);
    if (it == components.end()) throw GuardViolation("GKM class has no component " + J.str());
    return it->second;
}

GKMCheckResult gkm_check(const GKMClass& c) {
    GKMCheckResult out;
    out.ok = true;
    const VarContext ctx = z_context(c.n);
    for (const auto& pair : gkm_pairs(c.n, c.k)) {
        const Polynomial diff = c.at(pair.I) - c.at(pair.J);
        const LinearForm zij = LinearForm::variable(ctx, VarId::z(pair.i)) -
                               LinearForm::variable(ctx, VarId::z(pair.j));
        if (!divides_linear(diff, zij)) {
            out.ok = false;
            out.violations.push_back({pair.I, pair.J, pair.i, pair.j});
        }
    }
    return out;
}

StabClass stab(VersionTag r, int n, int k, const Permutation& sigma, const Subset& I) {
    if (I.k() != k) throw GuardViolation("stab: |I| != k");
    const SymmetrizedRF W = weight_function(r, n, sigma, I);
    StabClass out;
    out.spec = W.spec;
    out.gkm.n = n;
    out.gkm.k = k;
    for (const Subset& J : enumerate_subsets(n, k))
        out.gkm.components.emplace(J, restrict_to(W, J));
    return out;
}

AxiomReport verify_axioms(const StabClass& c) {
    AxiomReport rep;
    const int n = c.gkm.n;
    const VersionTag r = c.spec.r;
    const Permutation& sigma = c.spec.sigma;
    const VarContext ctx = z_context(n);
    const long d = dimension_d(r, n, c.gkm.k);

    {
        rep.A0.pass = true;
        std::ostringstream w;
        for (const auto& [J, p] : c.gkm.components) {
            if (p.is_zero()) continue;
            std::uint64_t deg = 0;
            if (!p.is_homogeneous(&deg) || deg != static_cast<std::uint64_t>(d)) {
                rep.A0.pass = false;
                w << J.str() << " has degree " << deg << " != " << d << "; ";
            }
        }
        rep.A0.witness = rep.A0.pass ? "all nonzero restrictions homogeneous of degree " +
                                           std::to_string(d)
                                     : w.str();
    }

    {
        const TangentWeights tw = tangent_weights(r, n, c.spec.I);
        const Polynomial expected = euler_product(split_by_sigma(tw.vertical, sigma).repelling, ctx) *
                                    euler_product(split_by_sigma(tw.horizontal, sigma).repelling, ctx);
        const Polynomial& got = c.gkm.at(c.spec.I);
        rep.A1.pass = got == expected;
        rep.A1.witness = rep.A1.pass ? expected.str()
                                     : "restriction " + got.str() + " != Euler product " +
                                           expected.str();
    }

    {
        rep.A2.pass = true;
        const LinearForm h = LinearForm::variable(ctx, VarId::h());
        std::ostringstream w;
        for (const auto& [J, p] : c.gkm.components) {
            if (J == c.spec.I) continue;
            if (!divides_linear(p, h)) {
                rep.A2.pass = false;
                w << "h does not divide the " << J.str() << " restriction; ";
            }
        }
        rep.A2.witness = rep.A2.pass ? "h divides every off-diagonal restriction" : w.str();
    }

    {
        rep.A3.pass = true;
        std::ostringstream w;
        for (const auto& [J, p] : c.gkm.components) {
            const TangentWeights twJ = tangent_weights(r, n, J);
            const WeightList rep_ver = split_by_sigma(twJ.vertical, sigma).repelling;
            Polynomial quotient = p;
            for (const LinearForm& weight : rep_ver.weights) {
                if (quotient.is_zero()) break;
                auto q = divide_by_linear(quotient, weight);
                if (!q) {
                    rep.A3.pass = false;
                    w << "(" << weight.str() << ") does not divide the " << J.str()
                      << " restriction; ";
                    break;
                }
                quotient = std::move(*q);
            }
        }
        rep.A3.witness = rep.A3.pass
                             ? "every restriction divisible by its repelling vertical Euler class"
                             : w.str();
    }
    return rep;
}

std::vector<std::vector<int>> partitions(int m, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

Polynomial monomial_symmetric(VarContext ctx, const std::vector<int>& lambda) {
    const int k = ctx.k;
    if (static_cast<int>(lambda.size()) > k)
        throw GuardViolation("partition has more parts than t variables");
    std::vector<std::uint64_t> exps(k, 0);
    std::copy(lambda.begin(), lambda.end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    Polynomial out(ctx);
    do {
        Mono m = 0;
        for (int a = 0; a < k; ++a) m |= ctx.unit(a, exps[a]);
        out.add_term(m, Rational(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

namespace {

// All monomials of total degree d in z_1..z_n, h inside the (k, n) context.
void zh_monomials(VarContext ctx, int d, std::vector<Mono>& out) {
    const int n = ctx.n;
    std::vector<std::uint64_t> exp(n + 1, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            exp[n] = static_cast<std::uint64_t>(remaining);
            Mono m = 0;
            for (int i = 0; i <= n; ++i) m |= ctx.unit(ctx.k + i, exp[i]);
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[pos] = static_cast<std::uint64_t>(e);
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
}

}  // namespace

std::optional<Polynomial> find_representative(const GKMClass& c, int degree_bound) {
    const int n = c.n, k = c.k;
    const VarContext ctx = tz_context(k, n);
    const VarContext zctx = z_context(n);

    // Homogeneous basis of C[t,z,h]^{S_k} in degree degree_bound.
    struct BasisElement {
        Polynomial sym;   // m_lambda(t) in (k,n) context
        Mono zh;          // z,h monomial in (k,n) context
    };
    std::vector<BasisElement> basis;
    for (int dt = degree_bound; dt >= 0; --dt) {
        for (const auto& lambda : partitions(dt, k)) {
            Polynomial sym = monomial_symmetric(ctx, lambda);
            std::vector<Mono> zh;
            zh_monomials(ctx, degree_bound - dt, zh);
            for (Mono m : zh) basis.push_back({sym, m});
        }
    }

    // One equation block per subset J: coefficients of the substituted basis
    // match the component.
    std::vector<int> tmap(ctx.var_count());
    for (int s = 0; s < ctx.var_count(); ++s) tmap[s] = s;
    std::map<std::pair<Subset, Mono>, std::size_t> row_of;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    auto row_for = [&](const Subset& J, Mono m) -> std::size_t {
        auto [it, inserted] = row_of.try_emplace({J, m}, A.size());
        if (inserted) {
            A.emplace_back(basis.size(), Rational(0));
            b.emplace_back(0);
        }
        return it->second;
    };

    for (const auto& [J, comp] : c.components) {
        if (J.k() != k) throw GuardViolation("component subset has wrong size");
        auto map = tmap;
        for (int s = 1; s <= k; ++s)
            map[ctx.slot(VarId::t(s))] = ctx.slot(VarId::z(J.element(s - 1)));
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const Polynomial substituted = basis[col].sym.rename(map);
            for (const auto& [m, coeff] : substituted.terms())
                A[row_for(J, m + basis[col].zh)][col] += coeff;
        }
        const Polynomial target = comp.with_context(ctx);
        for (const auto& [m, coeff] : target.terms()) b[row_for(J, m)] = coeff;
    }

    auto solution = solve_rational_system(std::move(A), std::move(b));
    if (!solution) return std::nullopt;
    Polynomial rep(ctx);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        if ((*solution)[col].is_zero()) continue;
        for (const auto& [m, coeff] : basis[col].sym.terms())
            rep.add_term(m + basis[col].zh, coeff * (*solution)[col]);
    }
    return rep;
}

}  // namespace stabenv
