#ifndef STABENV_RF_MATRIX_HPP
#define STABENV_RF_MATRIX_HPP

#include <optional>
#include <vector>

#include "stabenv/rational_function.hpp"

namespace stabenv {

/// Dense matrix of rational functions; dimensions fixed at construction.
class RFMatrix {
public:
    RFMatrix(VarContext ctx, int rows, int cols);
    static RFMatrix identity(VarContext ctx, int m);

    const VarContext& ctx() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RationalFunction& at(int r, int c) { return e_[index(r, c)]; }
    const RationalFunction& at(int r, int c) const { return e_[index(r, c)]; }

    friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
    friend RFMatrix operator-(const RFMatrix& a, const RFMatrix& b);
    bool equals(const RFMatrix& o) const;
    bool is_zero() const;

private:
    int index(int r, int c) const;
    VarContext ctx_;
    int rows_, cols_;
    std::vector<RationalFunction> e_;
};

/// Solves M X = B exactly by fraction-free (Bareiss) elimination over the
/// polynomial ring after clearing row denominators; the divisions of
/// intermediate determinants are exact by construction.  Pivots are chosen
/// first-nonzero with fewest numerator terms.  The solution is verified by
/// back-substitution (M X - B == 0) before it is returned.
RFMatrix rf_solve(const RFMatrix& M, const RFMatrix& B);

/// Reduced row echelon form over Q.  Solves A x = b for possibly rectangular
/// A; returns the solution with free variables set to zero (hence the
/// lexicographically least support w.r.t. the column order), or nullopt when
/// the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational_system(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b);

}  // namespace stabenv

#endif
