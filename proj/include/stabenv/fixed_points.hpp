#ifndef STABENV_FIXED_POINTS_HPP
#define STABENV_FIXED_POINTS_HPP

#include <array>
#include <string>
#include <vector>

#include "stabenv/combinat.hpp"
#include "stabenv/linear_form.hpp"
#include "stabenv/polynomial.hpp"

namespace stabenv {

/// Which of the four bundle spaces over the Grassmannian is meant.
enum class VersionTag { r00, r10, r01, r11 };

inline constexpr std::array<VersionTag, 4> kAllVersions = {
    VersionTag::r00, VersionTag::r10, VersionTag::r01, VersionTag::r11};

std::string to_string(VersionTag r);       // "00", "10", "01", "11"
VersionTag parse_version(const std::string& s);

/// Multiset of tangent weights; every member has the shape z_i - z_j + eps*h
/// (i = j giving a bare h).  Orientation is kept — it carries the (i, j)
/// data the sigma-classification reads.
struct WeightList {
    std::vector<LinearForm> weights;

    std::size_t size() const { return weights.size(); }
};

/// Context used for weights and fixed-point restriction data: z_1..z_n, h.
inline VarContext z_context(int n) { return VarContext{0, n}; }

/// Horizontal weights z_j - z_i (i in I, j in the complement) and the
/// version-dependent vertical weights:
///   r=00:  z_i - z_j + h  over I x Ibar,
///   r=10:  z_i - z_s + h  over I x {1..n},
///   r=01:  z_s - z_j + h  over {1..n} x Ibar,
///   r=11:  z_i - z_j + h  over I x I, Ibar x Ibar, and I x Ibar.
struct TangentWeights {
    WeightList horizontal;
    WeightList vertical;
};
TangentWeights tangent_weights(VersionTag r, int n, const Subset& I);

struct SigmaSplit {
    WeightList attracting;
    WeightList repelling;
    WeightList neutral;
};

/// Classifies z_i - z_j + eps*h by comparing sigma^{-1}(i) with
/// sigma^{-1}(j); a pure h weight (i = j) is neutral for every sigma.
/// Weights of any other shape are a domain error.
SigmaSplit split_by_sigma(const WeightList& weights, const Permutation& sigma);

/// Product of the weight forms, as a polynomial; the empty list gives 1.
Polynomial euler_product(const WeightList& weights, VarContext ctx);
inline Polynomial euler_product(const WeightList& w, int n) { return euler_product(w, z_context(n)); }

/// d^(r): the sigma- and I-independent count of repelling directions.
///   d^(00) = k(n-k), d^(10) = k(n-k) + C(k,2),
///   d^(01) = k(n-k) + C(n-k,2), d^(11) = C(n,2).
long dimension_d(VersionTag r, int n, int k);

}  // namespace stabenv

#endif
