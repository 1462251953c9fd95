#include "stabenv/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "stabenv/linear_form.hpp"

namespace stabenv {

Polynomial Polynomial::constant(VarContext ctx, const Rational& c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(Mono{0}, c);
    return p;
}

Polynomial Polynomial::variable(VarContext ctx, VarId v) {
    Polynomial p(ctx);
    p.terms_.emplace(ctx.unit(ctx.slot(v)), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(VarContext ctx, Mono m, const Rational& c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, ctx_.total_degree(m));
    return d;
}

bool Polynomial::is_homogeneous(std::uint64_t* deg_out) const {
    if (terms_.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    std::uint64_t d = ctx_.total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ctx_.total_degree(m) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Polynomial::constant_value() const {
    return coefficient(0);
}

Rational Polynomial::coefficient(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Mono m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_)) throw GuardViolation("polynomial contexts differ");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.ctx_);
    if (a.is_zero() || b.is_zero()) return out;
    // Per-field overflow cannot happen while the total degree fits one field.
    if (a.degree() + b.degree() > a.ctx_.max_exponent())
        throw ExponentOverflow("product degree exceeds monomial packing");
    const Polynomial& big = a.term_count() >= b.term_count() ? a : b;
    const Polynomial& small = a.term_count() >= b.term_count() ? b : a;
    out.terms_.reserve(big.term_count() * 2);
    for (const auto& [mb, cb] : small.terms_)
        for (const auto& [ma, ca] : big.terms_) out.add_term(ma + mb, ca * cb);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = one(ctx_);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_) || terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& bindings) const {
    for (const auto& [slot, p] : bindings) {
        if (slot < 0 || slot >= ctx_.var_count()) throw GuardViolation("binding slot out of range");
        if (!(p.ctx() == ctx_)) throw GuardViolation("binding context differs");
    }
    Polynomial out(ctx_);
    // Powers of each bound variable's replacement are memoized per slot.
    std::map<int, std::vector<Polynomial>> powers;
    for (const auto& [m, c] : terms_) {
        Mono residual = 0;
        Polynomial factor = Polynomial::constant(ctx_, c);
        bool zero = false;
        for (int s = 0; s < ctx_.var_count(); ++s) {
            const std::uint64_t e = ctx_.exponent(m, s);
            if (e == 0) continue;
            auto bind = bindings.find(s);
            if (bind == bindings.end()) {
                residual |= ctx_.unit(s, e);
                continue;
            }
            auto& table = powers[s];
            if (table.empty()) table.push_back(one(ctx_));
            while (table.size() <= e) table.push_back(table.back() * bind->second);
            if (table[e].is_zero()) {
                zero = true;
                break;
            }
            factor = factor * table[e];
        }
        if (zero) continue;
        for (const auto& [fm, fc] : factor.terms_) out.add_term(fm + residual, fc);
    }
    return out;
}

Polynomial Polynomial::rename(const std::vector<int>& target_slot) const {
    if (static_cast<int>(target_slot.size()) != ctx_.var_count())
        throw GuardViolation("rename map has wrong length");
    Polynomial out(ctx_);
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.add_term(ctx_.remap(m, target_slot), c);
    return out;
}

Polynomial Polynomial::with_context(VarContext to) const {
    Polynomial out(to);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint64_t> exps(to.var_count(), 0);
        for (int s = 0; s < ctx_.var_count(); ++s) {
            const std::uint64_t e = ctx_.exponent(m, s);
            if (e == 0) continue;
            VarId v = ctx_.var_at(s);
            if (!to.has(v))
                throw GuardViolation("variable " + ctx_.name(s) + " not present in target context");
            exps[to.slot(v)] += e;
        }
        out.add_term(to.pack(exps), c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ctx_.var_count())
        throw GuardViolation("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int s = 0; s < ctx_.var_count(); ++s) {
            std::uint64_t e = ctx_.exponent(m, s);
            for (std::uint64_t i = 0; i < e; ++i) term *= point[s];
        }
        acc += term;
    }
    return acc;
}

std::vector<std::pair<Mono, Rational>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Mono, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
        const auto da = ctx_.total_degree(a.first);
        const auto db = ctx_.total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return out;
}

Mono Polynomial::leading_monomial() const {
    if (terms_.empty()) throw GuardViolation("leading monomial of zero polynomial");
    Mono best = terms_.begin()->first;
    std::uint64_t bd = ctx_.total_degree(best);
    for (const auto& [m, c] : terms_) {
        const std::uint64_t d = ctx_.total_degree(m);
        if (d > bd || (d == bd && m > best)) {
            best = m;
            bd = d;
        }
    }
    return best;
}

namespace {

void append_monomial(std::ostream& os, const VarContext& ctx, Mono m, const Rational& c,
                     bool first) {
    Rational a = abs(c);
    if (first) {
        if (c.sign() < 0) os << "-";
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (!(a.is_one()) || m == 0) {
        os << a.str();
        printed = true;
    }
    for (int s = 0; s < ctx.var_count(); ++s) {
        const std::uint64_t e = ctx.exponent(m, s);
        if (e == 0) continue;
        if (printed) os << "*";
        os << ctx.name(s);
        if (e > 1) os << "^" << e;
        printed = true;
    }
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Graded order, and within a degree the positive terms first; makes the
    // common small answers read like z2 - z1 + h instead of -z1 + z2 + h.
    auto ts = sorted_terms();
    std::stable_sort(ts.begin(), ts.end(), [this](const auto& a, const auto& b) {
        const auto da = ctx_.total_degree(a.first);
        const auto db = ctx_.total_degree(b.first);
        if (da != db) return da > db;
        const int sa = a.second.sign() < 0 ? 1 : 0;
        const int sb = b.second.sign() < 0 ? 1 : 0;
        return sa < sb;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
        append_monomial(os, ctx_, m, c, first);
        first = false;
    }
    return os.str();
}

Polynomial substitute(const Polynomial& p,
                      const std::vector<std::pair<VarId, Polynomial>>& bindings) {
    std::map<int, Polynomial> by_slot;
    for (const auto& [v, q] : bindings) {
        if (!p.ctx().has(v)) throw GuardViolation("substitute: variable not in context");
        if (!by_slot.emplace(p.ctx().slot(v), q).second)
            throw GuardViolation("substitute: variable bound twice");
    }
    return p.substitute(by_slot);
}

bool divides_linear(const Polynomial& f, const LinearForm& L) {
    if (L.is_zero()) throw GuardViolation("divides_linear: zero form");
    if (f.is_zero()) return true;
    const int s = L.leading_slot();
    if (s < 0) return true;  // nonzero constant form is a unit
    // Solve L = 0 for x_s and substitute.
    const Rational lead = L.coefficient_at(s);
    Polynomial rhs(f.ctx());
    for (int j = 0; j < f.ctx().var_count(); ++j) {
        if (j == s) continue;
        const Rational c = L.coefficient_at(j);
        if (!c.is_zero()) rhs += Polynomial::variable(f.ctx(), f.ctx().var_at(j)) * (-(c / lead));
    }
    if (!L.constant_term().is_zero())
        rhs += Polynomial::constant(f.ctx(), -(L.constant_term() / lead));
    std::map<int, Polynomial> bind;
    bind.emplace(s, std::move(rhs));
    return f.substitute(bind).is_zero();
}

std::optional<Polynomial> divide_by_linear(const Polynomial& f, const LinearForm& L) {
    if (L.is_zero()) throw GuardViolation("divide_by_linear: zero form");
    if (f.is_zero()) return Polynomial::zero(f.ctx());
    const int s = L.leading_slot();
    if (s < 0) {
        // Constant nonzero form: unit.
        return f * (Rational(1) / L.constant_term());
    }
    const VarContext& ctx = f.ctx();
    const Rational lead = L.coefficient_at(s);
    // Long division in x_s over Q[rest]: f = sum_i f_i x_s^i.
    std::map<std::uint64_t, Polynomial> slices;
    std::uint64_t dmax = 0;
    for (const auto& [m, c] : f.terms()) {
        const std::uint64_t e = ctx.exponent(m, s);
        dmax = std::max(dmax, e);
        auto [it, inserted] = slices.try_emplace(e, Polynomial::zero(ctx));
        it->second.add_term(m - ctx.unit(s, e), c);
    }
    Polynomial rest = L.to_polynomial(ctx);  // L = lead*x_s + R
    rest -= Polynomial::variable(ctx, ctx.var_at(s)) * lead;
    std::vector<Polynomial> coeff(dmax + 1, Polynomial::zero(ctx));
    for (auto& [e, p] : slices) coeff[e] = std::move(p);
    Polynomial quotient(ctx);
    const Rational inv_lead = Rational(1) / lead;
    for (std::uint64_t i = dmax; i >= 1; --i) {
        Polynomial q_i = coeff[i] * inv_lead;
        // f_{i-1} -= q_i * R
        coeff[i - 1] -= q_i * rest;
        for (const auto& [m, c] : q_i.terms()) quotient.add_term(m + ctx.unit(s, i - 1), c);
    }
    if (!coeff[0].is_zero()) return std::nullopt;
    return quotient;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw GuardViolation("exact_divide: zero divisor");
    const VarContext& ctx = f.ctx();
    if (!(ctx == g.ctx())) throw GuardViolation("exact_divide: contexts differ");
    Polynomial rem = f;
    Polynomial quotient(ctx);
    const Mono glead = g.leading_monomial();
    const Rational gc = g.coefficient(glead);
    while (!rem.is_zero()) {
        const Mono rlead = rem.leading_monomial();
        // Divisibility of the leading monomials, field by field.
        Mono qm = 0;
        bool ok = true;
        for (int s = 0; s < ctx.var_count(); ++s) {
            const std::uint64_t er = ctx.exponent(rlead, s);
            const std::uint64_t eg = ctx.exponent(glead, s);
            if (er < eg) {
                ok = false;
                break;
            }
            qm |= ctx.unit(s, er - eg);
        }
        if (!ok) throw NonExactDivision("exact_divide: division not exact");
        const Rational qc = rem.coefficient(rlead) / gc;
        quotient.add_term(qm, qc);
        Polynomial sub(ctx);
        for (const auto& [m, c] : g.terms()) sub.add_term(m + qm, c * qc);
        rem -= sub;
    }
    return quotient;
}

}  // namespace stabenv
