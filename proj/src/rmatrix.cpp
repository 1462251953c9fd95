#include "stabenv/rmatrix.hpp"

#include <algorithm>

#include "stabenv/errors.hpp"
#include "stabenv/weight_function.hpp"

namespace stabenv {

namespace {

Polynomial sp_zeta() { return Polynomial::variable(spectral_context(), spectral_var()); }
Polynomial sp_h() { return Polynomial::variable(spectral_context(), VarId::h()); }
Polynomial sp_const(long c) { return Polynomial::constant(spectral_context(), Rational(c)); }

}  // namespace

RMatrix::RMatrix(RMatrixFlavor flavor, VersionTag version)
    : flavor_(flavor), version_(version),
      e_(16, RationalFunction::zero(spectral_context())) {}

RationalFunction& RMatrix::at(int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3) throw GuardViolation("RMatrix index out of range");
    return e_[i * 4 + j];
}

const RationalFunction& RMatrix::at(int i, int j) const {
    return const_cast<RMatrix*>(this)->at(i, j);
}

bool RMatrix::equals(const RMatrix& o) const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!at(i, j).equals(o.at(i, j))) return false;
    return true;
}

bool RMatrix::block_structure_ok() const {
    static constexpr bool allowed[4][4] = {{true, false, false, false},
                                           {false, true, true, false},
                                           {false, true, true, false},
                                           {false, false, false, true}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!allowed[i][j] && !at(i, j).is_zero()) return false;
    return true;
}

RMatrix closed_form_R(VersionTag r) {
    RMatrix R(RMatrixFlavor::geometric_R, r);
    const Polynomial zeta = sp_zeta(), h = sp_h();
    const Polynomial hmz = h - zeta, hpz = h + zeta;
    const RationalFunction corner_plain = RationalFunction::one(spectral_context());
    const RationalFunction corner_ratio(hpz, hmz);
    R.at(0, 0) = (r == VersionTag::r01 || r == VersionTag::r11) ? corner_ratio : corner_plain;
    R.at(3, 3) = (r == VersionTag::r10 || r == VersionTag::r11) ? corner_ratio : corner_plain;
    R.at(1, 1) = R.at(2, 2) = RationalFunction(zeta, hmz);
    R.at(1, 2) = R.at(2, 1) = RationalFunction(h, hmz);
    return R;
}

RMatrix check_matrix(const RMatrix& R) {
    RMatrixFlavor f = R.flavor();
    switch (R.flavor()) {
        case RMatrixFlavor::geometric_R: f = RMatrixFlavor::geometric_Rcheck; break;
        case RMatrixFlavor::geometric_Rcheck: f = RMatrixFlavor::geometric_R; break;
        case RMatrixFlavor::yangian_R: f = RMatrixFlavor::yangian_Rcheck; break;
        case RMatrixFlavor::yangian_Rcheck: f = RMatrixFlavor::yangian_R; break;
    }
    RMatrix out(f, R.version());
    for (int i = 0; i < 4; ++i) {
        const int src = (i == 1) ? 2 : (i == 2) ? 1 : i;
        for (int j = 0; j < 4; ++j) out.at(i, j) = R.at(src, j);
    }
    return out;
}

std::pair<RMatrix, RMatrix> yangian_R(VersionTag r) {
    const Polynomial u = sp_zeta();
    const Polynomial one = sp_const(1);
    const RationalFunction one_plus_u(one + u);
    const RationalFunction one_minus_u(one - u);
    const RationalFunction rf_one = RationalFunction::one(spectral_context());
    const RationalFunction rf_u{u};
    const bool minus_first = (r == VersionTag::r01 || r == VersionTag::r11);
    const bool minus_last = (r == VersionTag::r10 || r == VersionTag::r11);
    const bool middle_minus = (r == VersionTag::r11);

    RMatrix R(RMatrixFlavor::yangian_R, r);
    R.at(0, 0) = minus_first ? one_minus_u : one_plus_u;
    R.at(3, 3) = minus_last ? one_minus_u : one_plus_u;
    R.at(1, 1) = R.at(2, 2) = rf_one;
    R.at(1, 2) = R.at(2, 1) = middle_minus ? -rf_u : rf_u;

    // The super P also signs the corners: odd (x) odd corners become -1 + u.
    RMatrix Rc(RMatrixFlavor::yangian_Rcheck, r);
    const RationalFunction u_minus_one(u - one);
    Rc.at(0, 0) = minus_first ? u_minus_one : one_plus_u;
    Rc.at(3, 3) = minus_last ? u_minus_one : one_plus_u;
    Rc.at(1, 1) = Rc.at(2, 2) = rf_u;
    Rc.at(1, 2) = Rc.at(2, 1) = middle_minus ? -rf_one : rf_one;
    return {R, Rc};
}

BigOperator BigOperator::identity(int n) {
    BigOperator out{n, enumerate_all_subsets(n),
                    RFMatrix::identity(z_context(n), 1 << n)};
    return out;
}

int BigOperator::index_of(const Subset& S) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), S);
    if (it == basis.end() || !(*it == S)) throw GuardViolation("subset not in basis");
    return static_cast<int>(it - basis.begin());
}

const RationalFunction& BigOperator::entry(const Subset& row, const Subset& col) const {
    return mat.at(index_of(row), index_of(col));
}

BigOperator operator*(const BigOperator& a, const BigOperator& b) {
    if (a.n != b.n) throw GuardViolation("operator sizes differ");
    return BigOperator{a.n, a.basis, a.mat * b.mat};
}

bool BigOperator::preserves_sectors() const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (basis[i].k() != basis[j].k() &&
                !mat.at(static_cast<int>(i), static_cast<int>(j)).is_zero())
                return false;
    return true;
}

namespace {

// Transplants an entry num/den in (zeta, h) into the z-context with
// zeta := arg, h := h.
RationalFunction transplant(const RationalFunction& entry, const RationalFunction& arg,
                            VarContext target) {
    const VarContext sctx = spectral_context();
    const int zslot = sctx.slot(spectral_var());
    const int hslot = sctx.slot(VarId::h());
    const Polynomial h_target = Polynomial::variable(target, VarId::h());
    auto lift = [&](const Polynomial& p) -> std::pair<Polynomial, std::uint64_t> {
        std::uint64_t d = 0;
        for (const auto& [m, c] : p.terms()) d = std::max(d, sctx.exponent(m, zslot));
        std::vector<Polynomial> num_pow{Polynomial::one(target)}, den_pow{Polynomial::one(target)};
        for (std::uint64_t e = 1; e <= d; ++e) {
            num_pow.push_back(num_pow.back() * arg.num());
            den_pow.push_back(den_pow.back() * arg.den());
        }
        Polynomial out(target);
        for (const auto& [m, c] : p.terms()) {
            const std::uint64_t ez = sctx.exponent(m, zslot);
            const std::uint64_t eh = sctx.exponent(m, hslot);
            Polynomial piece = Polynomial::constant(target, c) * num_pow[ez] *
                               den_pow[d - ez] * h_target.pow(static_cast<unsigned>(eh));
            out += piece;
        }
        return {out, d};
    };
    auto [np, nd] = lift(entry.num());
    auto [dp, dd] = lift(entry.den());
    if (nd < dd)
        for (std::uint64_t e = nd; e < dd; ++e) np = np * arg.den();
    else
        for (std::uint64_t e = dd; e < nd; ++e) dp = dp * arg.den();
    return RationalFunction(std::move(np), std::move(dp));
}

}  // namespace

BigOperator embed(const RMatrix& R, int n, int u, int v, const RationalFunction& arg) {
    if (u == v || u < 1 || v < 1 || u > n || v > n) throw GuardViolation("embed: bad slots");
    const VarContext ctx = z_context(n);
    if (!(arg.ctx() == ctx)) throw GuardViolation("embed: argument context mismatch");
    BigOperator out{n, enumerate_all_subsets(n), RFMatrix(ctx, 1 << n, 1 << n)};

    // The Yangian matrices live on a graded C^2: acting across intermediate
    // tensor slots costs a Koszul sign for each odd letter passed over.  The
    // geometric family's basis is ungraded, so its signs are trivial.
    const bool graded = R.flavor() == RMatrixFlavor::yangian_R ||
                        R.flavor() == RMatrixFlavor::yangian_Rcheck;
    int parity[3] = {0, 0, 0};  // parity[letter], letters 1, 2
    if (graded) {
        parity[1] = (R.version() == VersionTag::r01 || R.version() == VersionTag::r11) ? 1 : 0;
        parity[2] = (R.version() == VersionTag::r10 || R.version() == VersionTag::r11) ? 1 : 0;
    }

    // Substituted copies of the 10 structurally nonzero entries.
    std::array<RationalFunction, 16> sub{
        RationalFunction::zero(ctx), RationalFunction::zero(ctx), RationalFunction::zero(ctx),
        RationalFunction::zero(ctx), RationalFunction::zero(ctx), RationalFunction::zero(ctx),
        RationalFunction::zero(ctx), RationalFunction::zero(ctx), RationalFunction::zero(ctx),
        RationalFunction::zero(ctx), RationalFunction::zero(ctx), RationalFunction::zero(ctx),
        RationalFunction::zero(ctx), RationalFunction::zero(ctx), RationalFunction::zero(ctx),
        RationalFunction::zero(ctx)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!R.at(i, j).is_zero()) sub[i * 4 + j] = transplant(R.at(i, j), arg, ctx);

    auto pair_index = [&](const Subset& S) {
        const int a = S.contains(u) ? 1 : 0;  // letter v2 <-> 1
        const int b = S.contains(v) ? 1 : 0;
        return a * 2 + b;
    };
    auto off_pair = [&](const Subset& S) {
        std::vector<int> rest;
        for (int i : S.elements())
            if (i != u && i != v) rest.push_back(i);
        return rest;
    };
    const int dim = 1 << n;
    const int lo = std::min(u, v), hi = std::max(u, v);
    for (int col = 0; col < dim; ++col) {
        const Subset& S = out.basis[col];
        const auto rest = off_pair(S);
        int crossed_odd = 0;
        for (int w = lo + 1; w < hi; ++w) crossed_odd += parity[S.contains(w) ? 2 : 1];
        const int col_u_parity = parity[S.contains(u) ? 2 : 1];
        for (int au = 0; au < 2; ++au) {
            for (int av = 0; av < 2; ++av) {
                std::vector<int> elems = rest;
                if (au) elems.push_back(u);
                if (av) elems.push_back(v);
                const Subset Srow(n, elems);
                const int row = out.index_of(Srow);
                const RationalFunction& e = sub[(au * 2 + av) * 4 + pair_index(S)];
                if (e.is_zero()) continue;
                const int row_u_parity = parity[au ? 2 : 1];
                const bool negate = (crossed_odd & 1) && ((col_u_parity + row_u_parity) & 1);
                out.mat.at(row, col) = negate ? -e : e;
            }
        }
    }
    return out;
}

BigOperator embed(const RMatrix& R, int n, int u, int v, const Polynomial& arg) {
    return embed(R, n, u, v, RationalFunction(arg));
}

bool yang_baxter_check(const RMatrix& R) {
    const int n = 3;
    const VarContext ctx = z_context(n);
    const bool yangian =
        R.flavor() == RMatrixFlavor::yangian_R || R.flavor() == RMatrixFlavor::yangian_Rcheck;
    auto arg = [&](int i, int j) {
        const Polynomial diff =
            Polynomial::variable(ctx, VarId::z(i)) - Polynomial::variable(ctx, VarId::z(j));
        // The geometric family is additive in the z-difference; the Yangian
        // 1 + uP family satisfies the equation under the reciprocal spectral
        // substitution u = h/(z_i - z_j), matching u = -h/zeta.
        if (yangian) return RationalFunction(Polynomial::variable(ctx, VarId::h()), diff);
        return RationalFunction(diff);
    };
    const BigOperator r12 = embed(R, n, 1, 2, arg(1, 2));
    const BigOperator r13 = embed(R, n, 1, 3, arg(1, 3));
    const BigOperator r23 = embed(R, n, 2, 3, arg(2, 3));
    return (r12 * (r13 * r23)).equals(r23 * (r13 * r12));
}

RFMatrix stab_matrix(VersionTag r, int n, const Permutation& sigma) {
    if (n > 3) throw GuardViolation("stab_matrix guarded to n <= 3");
    const VarContext ctx = z_context(n);
    const auto basis = enumerate_all_subsets(n);
    RFMatrix out(ctx, 1 << n, 1 << n);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const SymmetrizedRF W = weight_function(r, n, sigma, basis[col]);
        for (std::size_t row = 0; row < basis.size(); ++row) {
            if (basis[row].k() != basis[col].k()) continue;
            out.at(static_cast<int>(row), static_cast<int>(col)) =
                RationalFunction(restrict_to(W, basis[row]));
        }
    }
    return out;
}

BigOperator geometric_R(VersionTag r, int n, const Permutation& sigma, int a) {
    if (a < 1 || a >= n) throw GuardViolation("geometric_R: a out of range");
    const RFMatrix left = stab_matrix(r, n, compose(sigma, Permutation::adjacent(n, a)));
    const RFMatrix right = stab_matrix(r, n, sigma);
    // Both matrices are block-diagonal over the k-sectors (contiguous in the
    // (size, lex) basis order), so each sector solves independently.
    const auto basis = enumerate_all_subsets(n);
    const VarContext ctx = z_context(n);
    BigOperator out{n, basis, RFMatrix(ctx, 1 << n, 1 << n)};
    int offset = 0;
    for (int k = 0; k <= n; ++k) {
        const int size = static_cast<int>(binomial(n, k));
        RFMatrix lk(ctx, size, size), rk(ctx, size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                lk.at(i, j) = left.at(offset + i, offset + j);
                rk.at(i, j) = right.at(offset + i, offset + j);
            }
        const RFMatrix xk = rf_solve(lk, rk);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) out.mat.at(offset + i, offset + j) = xk.at(i, j);
        offset += size;
    }
    return out;
}

YangianIdentification yangian_identification(VersionTag r) {
    const auto [Ry, Rcy] = yangian_R(r);
    const VarContext ctx = spectral_context();
    const RationalFunction one_plus_u(Polynomial::one(ctx) + sp_zeta());
    const RationalFunction minus_h_over_zeta(-sp_h(), sp_zeta());

    RMatrix substituted(RMatrixFlavor::yangian_Rcheck, r);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (Rcy.at(i, j).is_zero()) continue;
            substituted.at(i, j) = (Rcy.at(i, j) / one_plus_u)
                                       .substitute_var(spectral_var(), minus_h_over_zeta);
        }

    const RMatrix target = check_matrix(closed_form_R(r));
    YangianIdentification out;
    if (substituted.equals(target)) {
        out.matches = true;
        out.sign_twist = false;
        return out;
    }
    // diag(1,1,-1,1) conjugation flips the middle off-diagonal signs.
    RMatrix twisted = target;
    twisted.at(1, 2) = -twisted.at(1, 2);
    twisted.at(2, 1) = -twisted.at(2, 1);
    if (substituted.equals(twisted)) {
        out.matches = true;
        out.sign_twist = true;
    }
    return out;
}

}  // namespace stabenv
