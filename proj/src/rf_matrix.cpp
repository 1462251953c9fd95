#include "stabenv/rf_matrix.hpp"

#include <utility>

#include "stabenv/errors.hpp"

namespace stabenv {

RFMatrix::RFMatrix(VarContext ctx, int rows, int cols)
    : ctx_(ctx), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw GuardViolation("matrix dimensions must be positive");
    e_.assign(static_cast<std::size_t>(rows) * cols, RationalFunction::zero(ctx));
}

RFMatrix RFMatrix::identity(VarContext ctx, int m) {
    RFMatrix out(ctx, m, m);
    for (int i = 0; i < m; ++i) out.at(i, i) = RationalFunction::one(ctx);
    return out;
}

int RFMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw GuardViolation("matrix index out of range");
    return r * cols_ + c;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
    if (a.cols_ != b.rows_) throw GuardViolation("matrix product dimension mismatch");
    RFMatrix out(a.ctx_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            RationalFunction acc = RationalFunction::zero(a.ctx_);
            for (int l = 0; l < a.cols_; ++l) acc += a.at(i, l) * b.at(l, j);
            out.at(i, j) = acc;
        }
    return out;
}

RFMatrix operator-(const RFMatrix& a, const RFMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw GuardViolation("matrix difference dimension mismatch");
    RFMatrix out(a.ctx_, a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

bool RFMatrix::equals(const RFMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).equals(o.at(i, j))) return false;
    return true;
}

bool RFMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

RFMatrix rf_solve(const RFMatrix& M, const RFMatrix& B) {
    if (M.rows() != M.cols()) throw GuardViolation("rf_solve: matrix not square");
    if (B.rows() != M.rows()) throw GuardViolation("rf_solve: right-hand side size mismatch");
    const VarContext ctx = M.ctx();
    const int m = M.rows();
    const int w = m + B.cols();

    // Clear denominators row by row (prefix/suffix products avoid division).
    std::vector<std::vector<Polynomial>> P(m, std::vector<Polynomial>(w, Polynomial::zero(ctx)));
    for (int i = 0; i < m; ++i) {
        std::vector<Polynomial> dens;
        dens.reserve(w);
        auto entry = [&](int j) -> const RationalFunction& {
            return j < m ? M.at(i, j) : B.at(i, j - m);
        };
        for (int j = 0; j < w; ++j) dens.push_back(entry(j).den());
        std::vector<Polynomial> pre(w + 1, Polynomial::one(ctx)), suf(w + 1, Polynomial::one(ctx));
        for (int j = 0; j < w; ++j) pre[j + 1] = pre[j] * dens[j];
        for (int j = w - 1; j >= 0; --j) suf[j] = suf[j + 1] * dens[j];
        for (int j = 0; j < w; ++j) P[i][j] = entry(j).num() * (pre[j] * suf[j + 1]);
    }

    Polynomial prev = Polynomial::one(ctx);
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        std::size_t best = 0;
        for (int r = col; r < m; ++r) {
            if (P[r][col].is_zero()) continue;
            const std::size_t tc = P[r][col].term_count();
            if (pivot < 0 || tc < best) {
                pivot = r;
                best = tc;
            }
        }
        if (pivot < 0) throw SingularMatrix("rf_solve: rank deficiency at column " + std::to_string(col));
        std::swap(P[col], P[pivot]);
        for (int r = col + 1; r < m; ++r) {
            for (int c = col + 1; c < w; ++c)
                P[r][c] = exact_divide(P[col][col] * P[r][c] - P[r][col] * P[col][c], prev);
            P[r][col] = Polynomial::zero(ctx);
        }
        prev = P[col][col];
    }

    // Cramer denominators: the last pivot is (a scaled) det, and every
    // solution entry is polynomial over it, so back substitution can stay in
    // the polynomial ring with exact divisions.
    const Polynomial det = P[m - 1][m - 1];
    RFMatrix X(ctx, m, B.cols());
    std::vector<std::vector<Polynomial>> Y(m, std::vector<Polynomial>(B.cols(), Polynomial::zero(ctx)));
    for (int j = 0; j < B.cols(); ++j) {
        for (int i = m - 1; i >= 0; --i) {
            Polynomial acc = P[i][m + j] * det;
            for (int l = i + 1; l < m; ++l) acc -= P[i][l] * Y[l][j];
            Y[i][j] = exact_divide(acc, P[i][i]);
            X.at(i, j) = RationalFunction(Y[i][j], det);
        }
    }

    // Back-substitution check against the original system: row by row with
    // the shared denominator cleared, so the verification stays polynomial
    // whenever M and B are.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < B.cols(); ++j) {
            RationalFunction acc = RationalFunction::zero(ctx);
            for (int l = 0; l < m; ++l) {
                if (M.at(i, l).is_zero() || Y[l][j].is_zero()) continue;
                acc += RationalFunction(M.at(i, l).num() * Y[l][j], M.at(i, l).den());
            }
            acc -= RationalFunction(B.at(i, j).num() * det, B.at(i, j).den());
            if (!acc.is_zero()) throw SingularMatrix("rf_solve: back-substitution check failed");
        }
    }
    return X;
}

std::optional<std::vector<Rational>> solve_rational_system(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r) {
            if (!A[r][col].is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(A[row], A[p]);
        std::swap(b[row], b[p]);
        const Rational inv = Rational(1) / A[row][col];
        for (int c = col; c < cols; ++c) A[row][c] *= inv;
        b[row] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || A[r][col].is_zero()) continue;
            const Rational f = A[r][col];
            for (int c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = b[r];
    return x;
}

}  // namespace stabenv
