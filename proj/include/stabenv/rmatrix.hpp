#ifndef STABENV_RMATRIX_HPP
#define STABENV_RMATRIX_HPP

#include <array>
#include <utility>
#include <vector>

#include "stabenv/combinat.hpp"
#include "stabenv/fixed_points.hpp"
#include "stabenv/rf_matrix.hpp"

namespace stabenv {

enum class RMatrixFlavor { geometric_R, geometric_Rcheck, yangian_R, yangian_Rcheck };

/// Variables of the 4x4 matrices: z_1 doubles as the spectral parameter
/// (zeta for the geometric family, u for the Yangian one), h is available.
inline VarContext spectral_context() { return VarContext{0, 1}; }
inline VarId spectral_var() { return VarId::z(1); }

/// 4x4 matrix on C^2 (x) C^2 in the ordered basis
/// v1(x)v1, v1(x)v2, v2(x)v1, v2(x)v2; zero off the 1+2+1 block diagonal.
class RMatrix {
public:
    RMatrix(RMatrixFlavor flavor, VersionTag version);

    RMatrixFlavor flavor() const { return flavor_; }
    VersionTag version() const { return version_; }

    RationalFunction& at(int i, int j);
    const RationalFunction& at(int i, int j) const;

    bool equals(const RMatrix& o) const;
    bool block_structure_ok() const;

private:
    RMatrixFlavor flavor_;
    VersionTag version_;
    std::vector<RationalFunction> e_;
};

/// The four closed-form geometric R-matrices: middle block
/// ((zeta, h), (h, zeta))/(h - zeta); corners 1 or (h + zeta)/(h - zeta)
/// depending on the version.
RMatrix closed_form_R(VersionTag r);

/// Left-composition with the plain factor swap: rows 2 and 3 exchanged.
RMatrix check_matrix(const RMatrix& R);

/// The Yangian matrices 1 + uP with super signs, and their check versions,
/// exactly as displayed (hard-coded; the super P differs per version).
std::pair<RMatrix, RMatrix> yangian_R(VersionTag r);

/// Operator on (C^2)^(x)n with rows/columns indexed by subsets of {1..n}
/// in (size, lex) order via the dictionary s in I <-> letter v2.
struct BigOperator {
    int n = 0;
    std::vector<Subset> basis;
    RFMatrix mat;

    static BigOperator identity(int n);
    int index_of(const Subset& S) const;
    const RationalFunction& entry(const Subset& row, const Subset& col) const;
    bool equals(const BigOperator& o) const { return n == o.n && mat.equals(o.mat); }
    friend BigOperator operator*(const BigOperator& a, const BigOperator& b);
    /// |I| is conserved: entries between different k-sectors vanish.
    bool preserves_sectors() const;
};

/// R acting in tensor slots u and v with the spectral variable replaced by
/// arg, identity elsewhere.
BigOperator embed(const RMatrix& R, int n, int u, int v, const RationalFunction& arg);
BigOperator embed(const RMatrix& R, int n, int u, int v, const Polynomial& arg);

/// R12(z1-z2) R13(z1-z3) R23(z2-z3) = R23(z2-z3) R13(z1-z3) R12(z1-z2),
/// verified entrywise as an exact 8x8 identity.
bool yang_baxter_check(const RMatrix& R);

/// The 2^n x 2^n matrix whose column I is the restriction tuple of
/// W^(|I|)_{sigma, I}; block-diagonal over the k-sectors.  Guarded to n <= 3.
RFMatrix stab_matrix(VersionTag r, int n, const Permutation& sigma);

/// stab_matrix(sigma s_{a,a+1})^{-1} stab_matrix(sigma), solved exactly.
BigOperator geometric_R(VersionTag r, int n, const Permutation& sigma, int a);

struct YangianIdentification {
    bool matches = false;
    /// True when equality needed the sign of the middle basis vector flipped
    /// (conjugation by diag(1,1,-1,1)); the r=11 case matches directly.
    bool sign_twist = false;
};

/// Compares Rcheck_r(u)/(1+u) at u = -h/zeta with the check of the closed
/// form geometric R-matrix, entrywise over C(zeta, h).
YangianIdentification yangian_identification(VersionTag r);

}  // namespace stabenv

#endif
