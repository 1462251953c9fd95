#ifndef STABENV_RATIONAL_FUNCTION_HPP
#define STABENV_RATIONAL_FUNCTION_HPP

#include <string>

#include "stabenv/polynomial.hpp"

namespace stabenv {

/// Quotient of polynomials.  Not kept reduced (no multivariate gcd); equality
/// is exact via cross-multiplication, and all cancellation happens upstream
/// among linear factors.
class RationalFunction {
public:
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::one(num_.ctx())) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero(VarContext ctx) {
        return RationalFunction(Polynomial::zero(ctx));
    }
    static RationalFunction one(VarContext ctx) {
        return RationalFunction(Polynomial::one(ctx));
    }
    static RationalFunction constant(VarContext ctx, const Rational& c) {
        return RationalFunction(Polynomial::constant(ctx, c));
    }

    const VarContext& ctx() const { return num_.ctx(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// a/b == c/d  iff  ad - bc == 0 as a polynomial.
    bool equals(const RationalFunction& o) const;

    /// Substitutes a rational function for one variable, exactly.
    RationalFunction substitute_var(VarId v, const RationalFunction& value) const;

    Polynomial to_polynomial() const;  // exact division; throws when not a polynomial

    std::string str() const;

private:
    Polynomial num_, den_;
};

/// Polynomial substitution into numerator and denominator; raises
/// DenominatorVanishes when the substituted denominator is identically zero.
RationalFunction substitute(const RationalFunction& f,
                            const std::vector<std::pair<VarId, Polynomial>>& bindings);

}  // namespace stabenv

#endif
