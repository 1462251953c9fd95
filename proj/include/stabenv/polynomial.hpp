#ifndef STABENV_POLYNOMIAL_HPP
#define STABENV_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stabenv/rational.hpp"
#include "stabenv/variables.hpp"

namespace stabenv {

struct MonoHash {
    std::size_t operator()(Mono m) const {
        std::uint64_t z = m + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

/// Sparse multivariate polynomial over Q with a fixed variable context.
///
/// The term map is canonical: no zero coefficients are stored, so two equal
/// polynomials have identical maps.  Printing and serialization use
/// graded-lexicographic term order.
class Polynomial {
public:
    using TermMap = std::unordered_map<Mono, Rational, MonoHash>;

    explicit Polynomial(VarContext ctx) : ctx_(ctx) {}

    static Polynomial zero(VarContext ctx) { return Polynomial(ctx); }
    static Polynomial constant(VarContext ctx, const Rational& c);
    static Polynomial one(VarContext ctx) { return constant(ctx, 1); }
    static Polynomial variable(VarContext ctx, VarId v);
    static Polynomial monomial(VarContext ctx, Mono m, const Rational& c);

    const VarContext& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Max total degree; zero polynomial reports 0.
    std::uint64_t degree() const;
    bool is_homogeneous(std::uint64_t* deg_out = nullptr) const;
    bool is_constant() const;
    Rational constant_value() const;  // coefficient of the empty monomial
    Rational coefficient(Mono m) const;

    void add_term(Mono m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// General substitution slot -> polynomial (variables not bound stay).
    Polynomial substitute(const std::map<int, Polynomial>& bindings) const;
    /// Variable-to-variable remap; several sources may merge into one target.
    Polynomial rename(const std::vector<int>& target_slot) const;
    /// Reinterprets a polynomial with no t-exponents in a (0, n) context,
    /// or more generally moves to any context containing the same z/h vars.
    Polynomial with_context(VarContext to) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Terms in graded-lex order, highest first.
    std::vector<std::pair<Mono, Rational>> sorted_terms() const;
    Mono leading_monomial() const;  // grlex-max; polynomial must be nonzero

    std::string str() const;

private:
    VarContext ctx_;
    TermMap terms_;

    void check_compatible(const Polynomial& o) const;
};

/// Substitution keyed by variable id.
Polynomial substitute(const Polynomial& p,
                      const std::vector<std::pair<VarId, Polynomial>>& bindings);

/// True iff the nonzero linear form L divides f, decided by substituting the
/// solution of L = 0 for its leading variable and testing for zero.
class LinearForm;
bool divides_linear(const Polynomial& f, const LinearForm& L);

/// Exact quotient f / L, or nullopt when L does not divide f.
std::optional<Polynomial> divide_by_linear(const Polynomial& f, const LinearForm& L);

/// Exact multivariate division (grlex leading-term elimination); throws
/// NonExactDivision when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace stabenv

#endif
