#include "stabenv/json_io.hpp"

#include <sstream>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

VarContext context_from_vars(const std::vector<std::string>& vars) {
    int k = 0, n = 0;
    std::size_t i = 0;
    while (i < vars.size() && vars[i] == "t" + std::to_string(k + 1)) {
        ++k;
        ++i;
    }
    while (i < vars.size() && vars[i] == "z" + std::to_string(n + 1)) {
        ++n;
        ++i;
    }
    if (i + 1 != vars.size() || vars[i] != "h")
        throw GuardViolation("bad variable list in polynomial JSON");
    return VarContext{k, n};
}

}  // namespace

Json to_json(const Polynomial& p) {
    Json j;
    j["vars"] = p.ctx().names();
    Json terms = Json::array();
    for (const auto& [m, c] : p.sorted_terms()) {
        Json t;
        t["coeff"] = c.str();
        t["exps"] = p.ctx().exponents(m);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    const VarContext ctx = context_from_vars(j.at("vars").get<std::vector<std::string>>());
    Polynomial p(ctx);
    for (const auto& t : j.at("terms")) {
        const auto exps = t.at("exps").get<std::vector<std::uint64_t>>();
        p.add_term(ctx.pack(exps), Rational(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json to_json(const RationalFunction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction rf_from_json(const Json& j) {
    return RationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

Json to_json(const LinearForm& f) {
    Json coeffs = Json::object();
    for (int s = 0; s < f.ctx().var_count(); ++s)
        if (!f.coefficient_at(s).is_zero()) coeffs[f.ctx().name(s)] = f.coefficient_at(s).str();
    Json j;
    j["coeffs"] = std::move(coeffs);
    if (!f.constant_term().is_zero()) j["const"] = f.constant_term().str();
    return j;
}

Json to_json(const LinearFactorProduct& t) {
    Json factors = Json::array();
    for (const auto& [form, exp] : t.factors())
        factors.push_back(Json{{"form", to_json(form)}, {"exp", exp}});
    return Json{{"scalar", t.scalar().str()}, {"factors", std::move(factors)}};
}

Json to_json(const SymmetrizedRF& w) {
    Json terms = Json::array();
    for (const auto& t : w.terms) terms.push_back(to_json(t));
    return Json{{"r", to_string(w.spec.r)},
                {"n", w.spec.n},
                {"k", w.spec.k},
                {"sigma", w.spec.sigma.str()},
                {"subset", w.spec.I.flag_str()},
                {"terms", std::move(terms)}};
}

Json to_json(const WeightList& w, VarContext ctx) {
    Json arr = Json::array();
    for (const auto& f : w.weights) {
        (void)ctx;
        arr.push_back(to_json(f));
    }
    return arr;
}

Json gkm_to_json(const GKMClass& c) {
    Json j = Json::object();
    for (const auto& [J, p] : c.components) j[J.flag_str()] = to_json(p);
    return j;
}

GKMClass gkm_from_json(const Json& j, int n) {
    GKMClass c;
    c.n = n;
    c.k = -1;
    for (const auto& [key, val] : j.items()) {
        Subset J = Subset::parse(n, key);
        if (c.k < 0) c.k = J.k();
        if (J.k() != c.k) throw GuardViolation("GKM components of mixed subset sizes");
        Polynomial p = polynomial_from_json(val);
        c.components.emplace(std::move(J), p.with_context(z_context(n)));
    }
    if (c.k < 0) throw GuardViolation("empty GKM class");
    if (c.components.size() != binomial(n, c.k))
        throw GuardViolation("GKM class must have a component for every k-subset");
    return c;
}

Json to_json(const RFMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const RMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"version", to_string(m.version())}, {"entries", std::move(rows)}};
}

Json to_json(const BigOperator& op) {
    Json basis = Json::array();
    for (const auto& S : op.basis) basis.push_back(S.flag_str());
    return Json{{"n", op.n}, {"basis", std::move(basis)}, {"matrix", to_json(op.mat)}};
}

Json to_json(const AxiomReport& rep) {
    auto one = [](const AxiomResult& r) {
        return Json{{"pass", r.pass}, {"witness", r.witness}};
    };
    return Json{{"A0", one(rep.A0)}, {"A1", one(rep.A1)}, {"A2", one(rep.A2)},
                {"A3", one(rep.A3)}, {"all_pass", rep.all_pass()}};
}

namespace {

std::string latex_name(const std::string& plain) {
    if (plain == "h") return "\\hbar";
    return std::string(1, plain[0]) + "_{" + plain.substr(1) + "}";
}

std::string latex_monomial(const VarContext& ctx, Mono m, const Rational& c, bool first) {
    std::ostringstream os;
    Rational a = abs(c);
    if (first) {
        if (c.sign() < 0) os << "-";
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (!a.is_one() || m == 0) {
        if (a.is_integer())
            os << a.str();
        else
            os << "\\tfrac{" << a.numerator().get_str() << "}{" << a.denominator().get_str() << "}";
        printed = true;
    }
    for (int s = 0; s < ctx.var_count(); ++s) {
        const std::uint64_t e = ctx.exponent(m, s);
        if (e == 0) continue;
        if (printed) os << " ";
        os << latex_name(ctx.name(s));
        if (e > 1) os << "^{" << e << "}";
        printed = true;
    }
    return os.str();
}

}  // namespace

std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms()) {
        os << latex_monomial(p.ctx(), m, c, first);
        first = false;
    }
    return os.str();
}

std::string to_latex(const RationalFunction& f) {
    if (f.den().is_constant() && f.den().constant_value().is_one()) return to_latex(f.num());
    return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

std::string to_latex(const RMatrix& m) {
    std::ostringstream os;
    os << "\\begin{bmatrix}\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) os << (j ? " & " : "") << to_latex(m.at(i, j));
        os << (i < 3 ? " \\\\" : "") << "\n";
    }
    os << "\\end{bmatrix}";
    return os.str();
}

std::string to_latex(const RFMatrix& m) {
    std::ostringstream os;
    os << "\\begin{bmatrix}\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " & " : "") << to_latex(m.at(i, j));
        os << (i + 1 < m.rows() ? " \\\\" : "") << "\n";
    }
    os << "\\end{bmatrix}";
    return os.str();
}

std::string to_latex(const LinearFactorProduct& t) {
    return to_latex(t.expand_rf());
}

}  // namespace stabenv
