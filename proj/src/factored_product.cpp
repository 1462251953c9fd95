#include "stabenv/factored_product.hpp"

#include <sstream>

#include "stabenv/errors.hpp"

namespace stabenv {

LinearFactorProduct& LinearFactorProduct::mul_form(const LinearForm& form, int exp) {
    if (exp == 0 || is_zero()) return *this;
    if (form.is_zero()) {
        if (exp < 0) throw DenominatorVanishes("zero linear form in a denominator");
        scalar_ = Rational(0);
        factors_.clear();
        return *this;
    }
    auto [norm, sign] = form.normalized();
    if (sign < 0 && (exp & 1)) scalar_ = -scalar_;
    auto [it, inserted] = factors_.try_emplace(norm, exp);
    if (!inserted) {
        it->second += exp;
        if (it->second == 0) factors_.erase(it);
    }
    return *this;
}

LinearFactorProduct& LinearFactorProduct::mul_scalar(const Rational& c) {
    scalar_ *= c;
    if (scalar_.is_zero()) factors_.clear();
    return *this;
}

LinearFactorProduct& LinearFactorProduct::mul(const LinearFactorProduct& o) {
    mul_scalar(o.scalar_);
    if (is_zero()) return *this;
    for (const auto& [form, exp] : o.factors_) mul_form(form, exp);
    return *this;
}

bool LinearFactorProduct::has_negative_exponent() const {
    for (const auto& [form, exp] : factors_)
        if (exp < 0) return true;
    return false;
}

long LinearFactorProduct::degree() const {
    long d = 0;
    for (const auto& [form, exp] : factors_) d += exp;
    return d;
}

LinearFactorProduct LinearFactorProduct::rename(const std::vector<int>& target_slot) const {
    LinearFactorProduct out(ctx_, scalar_);
    if (is_zero()) return out;
    // Numerator factors first: a term that acquires a zero factor is dropped
    // before any denominator factor gets the chance to vanish.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& [form, exp] : factors_) {
            if ((pass == 0) != (exp > 0)) continue;
            out.mul_form(form.rename(target_slot), exp);
            if (out.is_zero()) return out;
        }
    }
    return out;
}

Polynomial LinearFactorProduct::expand() const {
    if (has_negative_exponent())
        throw GuardViolation("expand() on a product with denominator factors");
    return numerator_polynomial();
}

RationalFunction LinearFactorProduct::expand_rf() const {
    return RationalFunction(numerator_polynomial(), denominator_polynomial());
}

Polynomial LinearFactorProduct::numerator_polynomial() const {
    Polynomial p = Polynomial::constant(ctx_, scalar_);
    for (const auto& [form, exp] : factors_)
        if (exp > 0) p = p * form.to_polynomial().pow(static_cast<unsigned>(exp));
    return p;
}

Polynomial LinearFactorProduct::denominator_polynomial() const {
    Polynomial p = Polynomial::one(ctx_);
    for (const auto& [form, exp] : factors_)
        if (exp < 0) p = p * form.to_polynomial().pow(static_cast<unsigned>(-exp));
    return p;
}

std::optional<Rational> LinearFactorProduct::evaluate(const std::vector<Rational>& point) const {
    Rational acc = scalar_;
    if (acc.is_zero()) return acc;
    for (const auto& [form, exp] : factors_) {
        const Rational v = form.evaluate(point);
        if (v.is_zero()) {
            if (exp < 0) return std::nullopt;
            return Rational(0);
        }
        if (exp > 0)
            for (int i = 0; i < exp; ++i) acc *= v;
        else
            for (int i = 0; i < -exp; ++i) acc /= v;
    }
    return acc;
}

namespace {

// Factors are stored with positive leading coefficient, which flips forms
// like z2 - t1 into -(t1 - z2).  For printing, re-orient each factor the way
// the tables write them: h-coefficient positive when h appears, otherwise
// first nonzero coefficient positive scanning from the back (h, zn..z1,
// tk..t1).  The accumulated sign moves back into the scalar.
LinearForm display_orientation(const LinearForm& form, bool& flipped) {
    const VarContext& c = form.ctx();
    const int hslot = c.var_count() - 1;
    int ref_sign = 0;
    if (!form.coefficient_at(hslot).is_zero()) {
        ref_sign = form.coefficient_at(hslot).sign();
    } else {
        for (int s = c.var_count() - 1; s >= 0; --s) {
            if (!form.coefficient_at(s).is_zero()) {
                ref_sign = form.coefficient_at(s).sign();
                break;
            }
        }
    }
    flipped = ref_sign < 0;
    return flipped ? -form : form;
}

}  // namespace

std::string LinearFactorProduct::str() const {
    if (is_zero()) return "0";
    Rational display_scalar = scalar_;
    std::vector<std::pair<LinearForm, int>> num, den;
    for (const auto& [form, exp] : factors_) {
        bool flipped = false;
        LinearForm shown = display_orientation(form, flipped);
        if (flipped && (exp & 1)) display_scalar = -display_scalar;
        (exp > 0 ? num : den).emplace_back(shown, exp);
    }
    if (num.size() == 1 && den.empty() && num[0].second == 1 && display_scalar.is_one())
        return num[0].first.str();
    std::ostringstream os;
    bool first = true;
    if (display_scalar == Rational(-1) && !num.empty()) {
        os << "-";
    } else if (!display_scalar.is_one() || num.empty()) {
        os << display_scalar.str();
        first = false;
    }
    for (const auto& [form, exp] : num) {
        if (!first) os << "*";
        os << "(" << form.str() << ")";
        if (exp > 1) os << "^" << exp;
        first = false;
    }
    if (first) os << "1";
    if (!den.empty()) {
        std::ostringstream ds;
        bool dfirst = true;
        for (const auto& [form, exp] : den) {
            if (!dfirst) ds << "*";
            ds << "(" << form.str() << ")";
            if (exp < -1) ds << "^" << -exp;
            dfirst = false;
        }
        return os.str() + " / [" + ds.str() + "]";
    }
    return os.str();
}

}  // namespace stabenv
