#ifndef STABENV_FACTORED_PRODUCT_HPP
#define STABENV_FACTORED_PRODUCT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabenv/linear_form.hpp"
#include "stabenv/polynomial.hpp"
#include "stabenv/rational_function.hpp"

namespace stabenv {

/// A scalar times a product of integer powers (possibly negative) of
/// affine-linear forms — the native shape of every weight-function term.
///
/// Factors are stored sign-normalized (leading coefficient positive, the
/// sign absorbed into the scalar) and merged, so equal forms cancel across
/// numerator and denominator by construction and the representation is
/// canonical: two equal products have identical factor maps.
class LinearFactorProduct {
public:
    explicit LinearFactorProduct(VarContext ctx, Rational scalar = Rational(1))
        : ctx_(ctx), scalar_(std::move(scalar)) {}

    static LinearFactorProduct zero(VarContext ctx) {
        return LinearFactorProduct(ctx, Rational(0));
    }

    const VarContext& ctx() const { return ctx_; }
    const Rational& scalar() const { return scalar_; }
    bool is_zero() const { return scalar_.is_zero(); }
    const std::map<LinearForm, int>& factors() const { return factors_; }

    /// Multiplies in form^exp.  A zero form with positive exponent collapses
    /// the product to zero; with a negative exponent it raises
    /// DenominatorVanishes.
    LinearFactorProduct& mul_form(const LinearForm& form, int exp = 1);
    LinearFactorProduct& mul_scalar(const Rational& c);
    LinearFactorProduct& mul(const LinearFactorProduct& o);

    bool has_negative_exponent() const;
    /// Net degree sum(exp); meaningful for the homogeneous forms used here.
    long degree() const;

    /// Variable-to-variable substitution applied to every factor; vanishing
    /// numerator factors zero the product, vanishing denominator factors
    /// raise DenominatorVanishes.
    LinearFactorProduct rename(const std::vector<int>& target_slot) const;

    /// Expands to a polynomial; requires all exponents >= 0.
    Polynomial expand() const;
    /// Splits into numerator / denominator polynomials.
    RationalFunction expand_rf() const;
    Polynomial numerator_polynomial() const;
    Polynomial denominator_polynomial() const;

    /// Exact evaluation; nullopt when a denominator factor vanishes at the point.
    std::optional<Rational> evaluate(const std::vector<Rational>& point) const;

    std::string str() const;

    bool operator==(const LinearFactorProduct& o) const {
        return ctx_ == o.ctx_ && scalar_ == o.scalar_ && factors_ == o.factors_;
    }

private:
    VarContext ctx_;
    Rational scalar_;
    std::map<LinearForm, int> factors_;
};

}  // namespace stabenv

#endif
