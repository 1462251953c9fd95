#include "stabenv/linear_form.hpp"

#include <algorithm>
#include <sstream>

namespace stabenv {

LinearForm LinearForm::variable(VarContext ctx, VarId v) {
    LinearForm f(ctx);
    f.coeffs_[ctx.slot(v)] = Rational(1);
    return f;
}

LinearForm LinearForm::constant(VarContext ctx, const Rational& c) {
    LinearForm f(ctx);
    f.constant_ = c;
    return f;
}

LinearForm LinearForm::z_weight(VarContext ctx, int i, int j, bool eps_hbar) {
    LinearForm f(ctx);
    if (i != j) {
        f.coeffs_[ctx.slot(VarId::z(i))] += Rational(1);
        f.coeffs_[ctx.slot(VarId::z(j))] -= Rational(1);
    }
    if (eps_hbar) f.coeffs_[ctx.slot(VarId::h())] += Rational(1);
    if (f.is_zero()) throw GuardViolation("zero tangent weight (i = j without h)");
    return f;
}

bool LinearForm::is_zero() const {
    if (!constant_.is_zero()) return false;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

int LinearForm::leading_slot() const {
    for (int s = 0; s < ctx_.var_count(); ++s)
        if (!coeffs_[s].is_zero()) return s;
    return -1;
}

LinearForm LinearForm::operator-() const {
    LinearForm f(ctx_);
    for (int s = 0; s < ctx_.var_count(); ++s) f.coeffs_[s] = -coeffs_[s];
    f.constant_ = -constant_;
    return f;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    if (!(ctx_ == o.ctx_)) throw GuardViolation("linear form contexts differ");
    for (int s = 0; s < ctx_.var_count(); ++s) coeffs_[s] += o.coeffs_[s];
    constant_ += o.constant_;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    if (!(ctx_ == o.ctx_)) throw GuardViolation("linear form contexts differ");
    for (int s = 0; s < ctx_.var_count(); ++s) coeffs_[s] -= o.coeffs_[s];
    constant_ -= o.constant_;
    return *this;
}

LinearForm LinearForm::operator*(const Rational& c) const {
    LinearForm f(ctx_);
    for (int s = 0; s < ctx_.var_count(); ++s) f.coeffs_[s] = coeffs_[s] * c;
    f.constant_ = constant_ * c;
    return f;
}

std::pair<LinearForm, int> LinearForm::normalized() const {
    const int s = leading_slot();
    const int sign = s >= 0 ? coeffs_[s].sign() : constant_.sign();
    if (sign >= 0) return {*this, 1};
    return {-*this, -1};
}

LinearForm LinearForm::rename(const std::vector<int>& target_slot) const {
    if (static_cast<int>(target_slot.size()) != ctx_.var_count())
        throw GuardViolation("rename map has wrong length");
    LinearForm f(ctx_);
    for (int s = 0; s < ctx_.var_count(); ++s) {
        if (coeffs_[s].is_zero()) continue;
        f.coeffs_[target_slot[s]] += coeffs_[s];
    }
    f.constant_ = constant_;
    return f;
}

Polynomial LinearForm::to_polynomial(VarContext ctx) const {
    Polynomial p(ctx);
    for (int s = 0; s < ctx_.var_count(); ++s) {
        if (coeffs_[s].is_zero()) continue;
        p.add_term(ctx.unit(ctx.slot(ctx_.var_at(s))), coeffs_[s]);
    }
    if (!constant_.is_zero()) p.add_term(0, constant_);
    return p;
}

Rational LinearForm::evaluate(const std::vector<Rational>& point) const {
    Rational acc = constant_;
    for (int s = 0; s < ctx_.var_count(); ++s) {
        if (coeffs_[s].is_zero()) continue;
        acc += coeffs_[s] * point[s];
    }
    return acc;
}

std::string LinearForm::str() const {
    // Slot order, but lead with a positive term when there is one, so the
    // factors read the way the tables write them (z2 - t1, t1 - z1 + h).
    std::vector<std::pair<std::string, Rational>> parts;
    for (int s = 0; s < ctx_.var_count(); ++s)
        if (!coeffs_[s].is_zero()) parts.emplace_back(ctx_.name(s), coeffs_[s]);
    if (!constant_.is_zero()) parts.emplace_back("", constant_);
    if (parts.empty()) return "0";
    if (parts.front().second.sign() < 0) {
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].second.sign() > 0) {
                std::rotate(parts.begin(), parts.begin() + i, parts.begin() + i + 1);
                break;
            }
        }
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : parts) {
        Rational a = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        if (name.empty()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << name;
        }
        first = false;
    }
    return os.str();
}

bool LinearForm::operator==(const LinearForm& o) const {
    return ctx_ == o.ctx_ && constant_ == o.constant_ && coeffs_ == o.coeffs_;
}

std::strong_ordering LinearForm::operator<=>(const LinearForm& o) const {
    for (int s = 0; s < ctx_.var_count(); ++s) {
        if (coeffs_[s] < o.coeffs_[s]) return std::strong_ordering::less;
        if (o.coeffs_[s] < coeffs_[s]) return std::strong_ordering::greater;
    }
    if (constant_ < o.constant_) return std::strong_ordering::less;
    if (o.constant_ < constant_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace stabenv
