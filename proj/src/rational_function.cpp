#include "stabenv/rational_function.hpp"

#include <sstream>

#include "stabenv/errors.hpp"

namespace stabenv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!(num_.ctx() == den_.ctx())) throw GuardViolation("rational function contexts differ");
    if (den_.is_zero()) throw DenominatorVanishes("rational function with zero denominator");
    if (num_.is_zero()) den_ = Polynomial::one(num_.ctx());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(a.ctx());
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DenominatorVanishes("division of rational functions by zero");
    if (a.is_zero()) return RationalFunction::zero(a.ctx());
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalFunction RationalFunction::substitute_var(VarId v, const RationalFunction& value) const {
    const VarContext& c = ctx();
    const int s = c.slot(v);
    auto subst_poly = [&](const Polynomial& p) -> std::pair<Polynomial, std::uint64_t> {
        // p(x) with x := A/B, cleared by B^deg_x(p):
        //   sum_e coeff_e x^e  ->  sum_e coeff_e A^e B^(d-e).
        std::uint64_t d = 0;
        for (const auto& [m, cf] : p.terms()) d = std::max(d, c.exponent(m, s));
        std::vector<Polynomial> apow{Polynomial::one(c)}, bpow{Polynomial::one(c)};
        for (std::uint64_t e = 1; e <= d; ++e) {
            apow.push_back(apow.back() * value.num());
            bpow.push_back(bpow.back() * value.den());
        }
        Polynomial out(c);
        for (const auto& [m, cf] : p.terms()) {
            const std::uint64_t e = c.exponent(m, s);
            Polynomial piece = Polynomial::monomial(c, m - c.unit(s, e), cf);
            out += piece * apow[e] * bpow[d - e];
        }
        return {out, d};
    };
    auto [np, nd] = subst_poly(num_);
    auto [dp, dd] = subst_poly(den_);
    // Equalize the cleared powers of B.
    Polynomial bden = value.den();
    if (nd < dd)
        for (std::uint64_t e = nd; e < dd; ++e) np = np * bden;
    else
        for (std::uint64_t e = dd; e < nd; ++e) dp = dp * bden;
    if (dp.is_zero()) throw DenominatorVanishes("substitution made the denominator vanish");
    return RationalFunction(std::move(np), std::move(dp));
}

Polynomial RationalFunction::to_polynomial() const {
    if (num_.is_zero()) return num_;
    return exact_divide(num_, den_);
}

RationalFunction substitute(const RationalFunction& f,
                            const std::vector<std::pair<VarId, Polynomial>>& bindings) {
    Polynomial num = substitute(f.num(), bindings);
    Polynomial den = substitute(f.den(), bindings);
    if (den.is_zero())
        throw DenominatorVanishes("substitution made the denominator identically zero");
    return RationalFunction(std::move(num), std::move(den));
}

std::string RationalFunction::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

}  // namespace stabenv
