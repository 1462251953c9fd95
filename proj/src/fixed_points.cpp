#include "stabenv/fixed_points.hpp"

#include "stabenv/errors.hpp"

namespace stabenv {

std::string to_string(VersionTag r) {
    switch (r) {
        case VersionTag::r00: return "00";
        case VersionTag::r10: return "10";
        case VersionTag::r01: return "01";
        case VersionTag::r11: return "11";
    }
    return "??";
}

VersionTag parse_version(const std::string& s) {
    if (s == "00") return VersionTag::r00;
    if (s == "10") return VersionTag::r10;
    if (s == "01") return VersionTag::r01;
    if (s == "11") return VersionTag::r11;
    throw GuardViolation("unknown version tag '" + s + "' (expected 00, 10, 01 or 11)");
}

TangentWeights tangent_weights(VersionTag r, int n, const Subset& I) {
    if (I.n() != n) throw GuardViolation("subset ambient size mismatch");
    const VarContext ctx = z_context(n);
    const Subset Ibar = I.complement();
    TangentWeights out;
    for (int i : I.elements())
        for (int j : Ibar.elements())
            out.horizontal.weights.push_back(LinearForm::z_weight(ctx, j, i, false));
    switch (r) {
        case VersionTag::r00:
            for (int i : I.elements())
                for (int j : Ibar.elements())
                    out.vertical.weights.push_back(LinearForm::z_weight(ctx, i, j, true));
            break;
        case VersionTag::r10:
            for (int i : I.elements())
                for (int s = 1; s <= n; ++s)
                    out.vertical.weights.push_back(LinearForm::z_weight(ctx, i, s, true));
            break;
        case VersionTag::r01:
            for (int s = 1; s <= n; ++s)
                for (int j : Ibar.elements())
                    out.vertical.weights.push_back(LinearForm::z_weight(ctx, s, j, true));
            break;
        case VersionTag::r11:
            for (int i : I.elements())
                for (int j : I.elements())
                    out.vertical.weights.push_back(LinearForm::z_weight(ctx, i, j, true));
            for (int i : Ibar.elements())
                for (int j : Ibar.elements())
                    out.vertical.weights.push_back(LinearForm::z_weight(ctx, i, j, true));
            for (int i : I.elements())
                for (int j : Ibar.elements())
                    out.vertical.weights.push_back(LinearForm::z_weight(ctx, i, j, true));
            break;
    }
    return out;
}

namespace {

// Decodes a weight form into (i, j, eps); i = j = 0 for a pure h weight.
struct DecodedWeight {
    int i, j;
    bool hbar;
};

DecodedWeight decode_weight(const LinearForm& w) {
    const VarContext& ctx = w.ctx();
    if (ctx.k != 0) throw GuardViolation("weights live in the z/h context");
    int plus = 0, minus = 0;
    for (int b = 1; b <= ctx.n; ++b) {
        const Rational& c = w.coefficient(VarId::z(b));
        if (c.is_zero()) continue;
        if (c == Rational(1) && plus == 0)
            plus = b;
        else if (c == Rational(-1) && minus == 0)
            minus = b;
        else
            throw GuardViolation("weight is not of the shape z_i - z_j + eps*h: " + w.str());
    }
    const Rational& h = w.coefficient(VarId::h());
    bool eps;
    if (h.is_zero())
        eps = false;
    else if (h == Rational(1))
        eps = true;
    else
        throw GuardViolation("weight has a non-unit h coefficient: " + w.str());
    if (!w.constant_term().is_zero())
        throw GuardViolation("weight has a constant term: " + w.str());
    if ((plus == 0) != (minus == 0))
        throw GuardViolation("weight is not of the shape z_i - z_j + eps*h: " + w.str());
    if (plus == 0 && !eps) throw GuardViolation("zero weight");
    return {plus, minus, eps};
}

}  // namespace

SigmaSplit split_by_sigma(const WeightList& weights, const Permutation& sigma) {
    const Permutation inv = sigma.inverse();
    SigmaSplit out;
    for (const LinearForm& w : weights.weights) {
        const DecodedWeight d = decode_weight(w);
        if (d.i == 0) {
            out.neutral.weights.push_back(w);
            continue;
        }
        const int pi = inv.apply(d.i), pj = inv.apply(d.j);
        if (pi > pj)
            out.repelling.weights.push_back(w);
        else
            out.attracting.weights.push_back(w);
    }
    return out;
}

Polynomial euler_product(const WeightList& weights, VarContext ctx) {
    Polynomial p = Polynomial::one(ctx);
    for (const LinearForm& w : weights.weights) p = p * w.to_polynomial(ctx);
    return p;
}

long dimension_d(VersionTag r, int n, int k) {
    if (k < 0 || k > n) throw GuardViolation("dimension_d: k out of range");
    const long cross = static_cast<long>(k) * (n - k);
    auto c2 = [](long m) { return m * (m - 1) / 2; };
    switch (r) {
        case VersionTag::r00: return cross;
        case VersionTag::r10: return cross + c2(k);
        case VersionTag::r01: return cross + c2(n - k);
        case VersionTag::r11: return c2(n);
    }
    throw GuardViolation("bad version tag");
}

}  // namespace stabenv
