#ifndef STABENV_ENVELOPE_HPP
#define STABENV_ENVELOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabenv/combinat.hpp"
#include "stabenv/fixed_points.hpp"
#include "stabenv/polynomial.hpp"
#include "stabenv/weight_function.hpp"

namespace stabenv {

/// A cohomology class in the fixed-point (GKM) model: one polynomial in
/// z_1..z_n, h per k-subset.  Membership in the localization image is the
/// pairwise divisibility condition checked by gkm_check.
struct GKMClass {
    int n = 0;
    int k = 0;
    std::map<Subset, Polynomial> components;

    const Polynomial& at(const Subset& J) const;
};

struct GKMViolation {
    Subset I, J;
    int i, j;
};

struct GKMCheckResult {
    bool ok = false;
    std::vector<GKMViolation> violations;
};

/// (z_i - z_j) | (f_I - f_J) for every pair I = K+{i}, J = K+{j}.
GKMCheckResult gkm_check(const GKMClass& c);

/// A stable-envelope class: the weight function's restriction tuple.
struct StabClass {
    WeightFunctionSpec spec;
    GKMClass gkm;
};

StabClass stab(VersionTag r, int n, int k, const Permutation& sigma, const Subset& I);

struct AxiomResult {
    bool pass = false;
    std::string witness;
};

struct AxiomReport {
    AxiomResult A0, A1, A2, A3;
    bool all_pass() const { return A0.pass && A1.pass && A2.pass && A3.pass; }
};

/// A0: every nonzero component homogeneous of degree d^(r).
/// A1: the I-restriction equals the product of the sigma-repelling vertical
///     and horizontal Euler classes at p_I.
/// A2: off-diagonal restrictions divisible by h.
/// A3: the J-restriction divisible by every sigma-repelling vertical weight
///     at p_J, with multiplicity.
AxiomReport verify_axioms(const StabClass& c);

/// Exact linear solve for a homogeneous S_k-invariant polynomial in
/// C[t,z,h] of the given total degree whose t = z_J substitutions reproduce
/// the class.  Basis: monomial-symmetric functions in t times monomials in
/// z, h; among solutions, free coefficients are set to zero so the output is
/// deterministic.  nullopt when no representative of that degree exists.
std::optional<Polynomial> find_representative(const GKMClass& c, int degree_bound);

/// All partitions of m with at most max_parts parts (descending parts).
std::vector<std::vector<int>> partitions(int m, int max_parts);

/// Monomial symmetric polynomial m_lambda(t_1..t_k) in the (k, n) context.
Polynomial monomial_symmetric(VarContext ctx, const std::vector<int>& lambda);

}  // namespace stabenv

#endif
