#ifndef STABENV_WEIGHT_FUNCTION_HPP
#define STABENV_WEIGHT_FUNCTION_HPP

#include <vector>

#include "stabenv/combinat.hpp"
#include "stabenv/factored_product.hpp"
#include "stabenv/fixed_points.hpp"
#include "stabenv/polynomial.hpp"
#include "stabenv/rational.hpp"
#include "stabenv/rational_function.hpp"

namespace stabenv {

struct WeightFunctionSpec {
    VersionTag r;
    int n = 0;
    int k = 0;
    Permutation sigma;
    Subset I;
};

/// A super weight function kept as its k! factored symmetrization terms,
/// never eagerly expanded; restrictions and identity checks work termwise.
/// terms[i] is the tau_i-permuted U-term, with tau_i the i-th permutation of
/// S_k in lexicographic one-line order (tau_0 = id).
struct SymmetrizedRF {
    WeightFunctionSpec spec;
    std::vector<LinearFactorProduct> terms;
};

inline VarContext tz_context(int k, int n) { return VarContext{k, n}; }

/// The factored single term U^(r)_I, including negative-exponent factors for
/// the denominators.  Common linear factors cancel at construction.
LinearFactorProduct build_U(VersionTag r, int n, const Subset& I);

/// The k! terms of Sym_k U (t-variables permuted by each tau).
std::vector<LinearFactorProduct> symmetrize(const LinearFactorProduct& U, int k);

/// W^(r)_I for sigma = id.
SymmetrizedRF weight_function_id(VersionTag r, int n, const Subset& I);

/// Relabels z_b -> z_{sigma(b)} in every factor, turning W_J (J = the input's
/// subset, sigma = id) into W_{sigma, sigma(J)}.
SymmetrizedRF twist(const SymmetrizedRF& W, const Permutation& sigma);

/// W^(r)_{sigma, I} = W^(r)_{sigma^{-1}(I)} with z_b -> z_{sigma(b)}.
SymmetrizedRF weight_function(VersionTag r, int n, const Permutation& sigma, const Subset& I);

/// Substitutes t_s = z_{j_s} termwise; terms whose numerator acquires a zero
/// factor drop out, every remaining denominator factor must cancel exactly
/// (NonCancellingDenominator otherwise), and the polynomial sum is returned
/// in the z/h context.
Polynomial restrict_to(const SymmetrizedRF& W, const Subset& J);

/// Independent oracle for restrict_to: expands the whole symmetrization over
/// a common denominator, substitutes into numerator and denominator, and
/// divides exactly.  Guarded to k <= 4 against expression swell.
Polynomial restrict_via_expansion(const SymmetrizedRF& W, const Subset& J);

/// The fully expanded rational function (common factored denominator).
RationalFunction expand_rf(const SymmetrizedRF& W);

/// Number of symmetrization terms that survive the t = z_J substitution.
int surviving_terms(const SymmetrizedRF& W, const Subset& J);

/// Exact zero test for a sum of factored products: clears the factored
/// denominator LCM and expands.  The workhorse behind the identity checks.
bool factored_sum_is_zero(const std::vector<LinearFactorProduct>& terms);

/// Which of the three exchange cases applies at (sigma, a, I).
enum class RecursionCase { mixed, both_inside, both_outside };
RecursionCase recursion_case(const Permutation& sigma, int a, const Subset& I);

/// Result of checking one instance of the weight-function recursion
///   W_{sigma s_a, I} = c1 W_{sigma, I} + c2 W_{sigma, s(I)}   (mixed case)
///   W_{sigma s_a, I} = gamma W_{sigma, I}                     (same-side cases).
struct RecursionCheck {
    bool holds = false;
    bool used_fallback = false;  // grouped certificate was inconclusive
};

/// Verifies the recursion instance exactly.  A deterministic random-point
/// sweep (20 points avoiding denominator zeros) falsifies early; the proof
/// then groups terms by their spectator-variable factors and certifies each
/// small group symbolically, falling back to one full expansion if the
/// grouping does not close.
RecursionCheck check_weight_recursion(VersionTag r, int n, const Permutation& sigma, int a,
                                      const Subset& I, RandomStream& rng);

}  // namespace stabenv

#endif
