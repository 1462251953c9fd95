#ifndef STABENV_LINEAR_FORM_HPP
#define STABENV_LINEAR_FORM_HPP

#include <string>
#include <vector>

#include "stabenv/polynomial.hpp"
#include "stabenv/rational.hpp"
#include "stabenv/variables.hpp"

namespace stabenv {

/// Affine-linear form c_1 x_1 + ... + c_m x_m + c_0.
///
/// Forms keep the orientation they were built with (z2 - z1 is not the same
/// value as z1 - z2); factor containers sign-normalize and absorb the sign
/// into their scalar instead.
class LinearForm {
public:
    explicit LinearForm(VarContext ctx)
        : ctx_(ctx), coeffs_(ctx.var_count(), Rational(0)), constant_(0) {}

    static LinearForm variable(VarContext ctx, VarId v);
    static LinearForm constant(VarContext ctx, const Rational& c);
    /// z_i - z_j (+ h when eps), with i = j giving a bare h weight.
    static LinearForm z_weight(VarContext ctx, int i, int j, bool eps_hbar);

    const VarContext& ctx() const { return ctx_; }
    const Rational& coefficient_at(int slot) const { return coeffs_[slot]; }
    Rational coefficient(VarId v) const { return coeffs_[ctx_.slot(v)]; }
    const Rational& constant_term() const { return constant_; }

    bool is_zero() const;
    /// First slot (canonical order t1..tk, z1..zn, h) with nonzero
    /// coefficient; -1 for constant forms.
    int leading_slot() const;

    /// Support restricted to the given predicate slot set helpers.
    bool involves(int slot) const { return !coeffs_[slot].is_zero(); }

    LinearForm operator-() const;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    LinearForm operator*(const Rational& c) const;

    /// (normalized form, sign in {-1, +1}): leading coefficient made positive.
    std::pair<LinearForm, int> normalized() const;

    /// Applies a variable-to-variable map (used for t-permutation, the sigma
    /// twist on z's, and t = z_J restriction).  Targets may coincide.
    LinearForm rename(const std::vector<int>& target_slot) const;

    Polynomial to_polynomial(VarContext ctx) const;
    Polynomial to_polynomial() const { return to_polynomial(ctx_); }
    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const;

    bool operator==(const LinearForm& o) const;
    /// Total order usable as a map key (coefficients then constant).
    std::strong_ordering operator<=>(const LinearForm& o) const;

private:
    VarContext ctx_;
    std::vector<Rational> coeffs_;
    Rational constant_;
};

}  // namespace stabenv

#endif
