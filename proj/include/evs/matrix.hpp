#ifndef EVS_MATRIX_HPP
#define EVS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "evs/ratfunc.hpp"

namespace evs {

/// Dense matrix over any of the scalar kinds (Fq, Poly, RatFunc).  Carries a
/// prototype zero element so empty and zero-filled matrices remember their
/// field / variable context.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& proto)
        : rows_(rows), cols_(cols), proto_(zero_like(proto)), e_(rows * cols, zero_like(proto)) {}

    static Matrix identity(std::size_t n, const T& proto) {
        Matrix m(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one_like(proto);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& proto() const { return proto_; }

    T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : e_)
            if (!evs::is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (!(e_[i] == o.e_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (T& x : r.e_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(rows_, o.cols_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (evs::is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }
    Matrix operator*(const T& c) const {
        Matrix r = *this;
        for (T& x : r.e_) x = x * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix col(std::size_t j) const {
        Matrix r(rows_, 1, proto_);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T proto_{};
    std::vector<T> e_;
};

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    Matrix<T> r(a.rows() + b.rows(), a.cols(), a.proto());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols(), a.proto());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

/// Result of echelon analysis over a field-like scalar.
template <class T>
struct RankKernelImage {
    std::size_t rank = 0;
    Matrix<T> kernel_basis;  // cols x (cols - rank)
    Matrix<T> image_basis;   // rows x rank (pivot columns of the input)
};

/// Row-reduce over a field-like scalar (Fq or RatFunc).  Pivot rule: scan
/// columns left to right, take the first row with a nonzero entry.  The
/// kernel basis is the standard one read off the reduced echelon form, so
/// output is a deterministic function of the input.
template <class T>
RankKernelImage<T> rank_kernel_image(const Matrix<T>& m) {
    Matrix<T> a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t j = 0; j < C && prow < R; ++j) {
        std::size_t sel = R;
        for (std::size_t i = prow; i < R; ++i)
            if (!is_zero(a.at(i, j))) {
                sel = i;
                break;
            }
        if (sel == R) continue;
        a.swap_rows(prow, sel);
        T inv = one_like(a.proto()) / a.at(prow, j);
        for (std::size_t jj = j; jj < C; ++jj) a.at(prow, jj) = a.at(prow, jj) * inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == prow || is_zero(a.at(i, j))) continue;
            T f = a.at(i, j);
            for (std::size_t jj = j; jj < C; ++jj)
                a.at(i, jj) = a.at(i, jj) - f * a.at(prow, jj);
        }
        pivot_col.push_back(j);
        ++prow;
    }

    RankKernelImage<T> out;
    out.rank = pivot_col.size();
    out.kernel_basis = Matrix<T>(C, C - out.rank, m.proto());
    std::vector<bool> is_pivot(C, false);
    for (std::size_t j : pivot_col) is_pivot[j] = true;
    std::size_t kc = 0;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        out.kernel_basis.at(f, kc) = one_like(m.proto());
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            out.kernel_basis.at(pivot_col[i], kc) = -a.at(i, f);
        ++kc;
    }
    out.image_basis = Matrix<T>(R, out.rank, m.proto());
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        for (std::size_t r = 0; r < R; ++r) out.image_basis.at(r, i) = m.at(r, pivot_col[i]);
    return out;
}

template <class T>
std::size_t rank_of(const Matrix<T>& m) {
    return rank_kernel_image(m).rank;
}

/// Solve A X = B exactly over a field-like scalar; nullopt if inconsistent.
/// Free variables are set to zero, so the solution is deterministic.
template <class T>
std::optional<Matrix<T>> solve_columns(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
    Matrix<T> aug = hstack(A, B);
    const std::size_t R = aug.rows(), C = A.cols(), W = aug.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t j = 0; j < C && prow < R; ++j) {
        std::size_t sel = R;
        for (std::size_t i = prow; i < R; ++i)
            if (!is_zero(aug.at(i, j))) {
                sel = i;
                break;
            }
        if (sel == R) continue;
        aug.swap_rows(prow, sel);
        T inv = one_like(aug.proto()) / aug.at(prow, j);
        for (std::size_t jj = j; jj < W; ++jj) aug.at(prow, jj) = aug.at(prow, jj) * inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == prow || is_zero(aug.at(i, j))) continue;
            T f = aug.at(i, j);
            for (std::size_t jj = j; jj < W; ++jj)
                aug.at(i, jj) = aug.at(i, jj) - f * aug.at(prow, jj);
        }
        pivot_col.push_back(j);
        ++prow;
    }
    // consistency: no nonzero rows with zeros in the A-part
    for (std::size_t i = prow; i < R; ++i)
        for (std::size_t j = C; j < W; ++j)
            if (!is_zero(aug.at(i, j))) return std::nullopt;
    Matrix<T> X(C, B.cols(), A.proto());
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        for (std::size_t j = 0; j < B.cols(); ++j) X.at(pivot_col[k], j) = aug.at(k, C + j);
    return X;
}

/// Does v lie in the column span of basis?  (Both over a field-like scalar.)
template <class T>
bool in_column_span(const Matrix<T>& basis, const Matrix<T>& v) {
    std::size_t r0 = rank_kernel_image(basis).rank;
    return rank_kernel_image(hstack(basis, v)).rank == r0;
}

/// Canonical basis of the column span: reduced column echelon form with zero
/// columns dropped.  Two matrices have equal column spans iff their canonical
/// forms are identical, so this doubles as a dedup key for subspaces.
template <class T>
Matrix<T> span_canonical(const Matrix<T>& m) {
    Matrix<T> a = m.transpose();  // row space of a = column span of m
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t prow = 0;
    for (std::size_t j = 0; j < C && prow < R; ++j) {
        std::size_t sel = R;
        for (std::size_t i = prow; i < R; ++i)
            if (!is_zero(a.at(i, j))) {
                sel = i;
                break;
            }
        if (sel == R) continue;
        a.swap_rows(prow, sel);
        T inv = one_like(a.proto()) / a.at(prow, j);
        for (std::size_t jj = j; jj < C; ++jj) a.at(prow, jj) = a.at(prow, jj) * inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == prow || is_zero(a.at(i, j))) continue;
            T f = a.at(i, j);
            for (std::size_t jj = j; jj < C; ++jj)
                a.at(i, jj) = a.at(i, jj) - f * a.at(prow, jj);
        }
        ++prow;
    }
    Matrix<T> out(C, prow, m.proto());
    for (std::size_t i = 0; i < prow; ++i)
        for (std::size_t j = 0; j < C; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

inline Matrix<Fq> specialize(const Matrix<Poly>& m, const std::vector<Fq>& point) {
    const FqCtx* ctx = point.empty() ? m.proto().ctx() : point[0].ctx();
    Matrix<Fq> r(m.rows(), m.cols(), Fq(ctx, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

inline Matrix<RatFunc> to_ratfunc(const Matrix<Poly>& m) {
    Matrix<RatFunc> r(m.rows(), m.cols(), RatFunc(m.proto()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = RatFunc(m.at(i, j));
    return r;
}

inline Matrix<Fq> lift(const Matrix<Fq>& m, const FqCtx* bigger) {
    Matrix<Fq> r(m.rows(), m.cols(), Fq(bigger, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).lift(bigger);
    return r;
}

/// Rank of a polynomial matrix over the fraction field, computed by
/// fraction-free (Bareiss) elimination with full pivot search; intermediate
/// entries stay polynomial and divisions are exact.
std::size_t bareiss_rank(const Matrix<Poly>& m);

/// Basis of the kernel module {v in k[T]^C : A v = 0} of a matrix over a
/// univariate polynomial ring (every entry univariate in variable 0), via
/// unimodular Euclidean column reduction.  The result is C x (C - rank); its
/// columns are an honest module basis of the kernel, which over k[T] is free
/// and saturated, so specializing the basis at any parameter value gives the
/// fiber of the kernel sheaf there.
Matrix<Poly> kernel_module_basis(const Matrix<Poly>& A);

/// Basis of the saturation of the column span of V inside k[T]^m: the largest
/// submodule containing it with torsion-free quotient.  This is the module of
/// sections of the subsheaf generated by the columns, so specializing the
/// returned basis gives the fiber of that subsheaf.  Univariate only.
Matrix<Poly> saturate_span(const Matrix<Poly>& V);

/// The induced map between degree-d pieces of graded free k[s,t]-modules.
/// Entry (i,j) must be homogeneous of degree source_degrees[j] -
/// target_degrees[i] (or zero).  Basis of the degree-d piece of a summand
/// generated in degree g: the monomials s^{d-g-b} t^{b}, b = 0..d-g, listed
/// per generator in order.
Matrix<Fq> graded_piece_map(const Matrix<Poly>& m, const std::vector<int>& source_degrees,
                            const std::vector<int>& target_degrees, int d);

}  // namespace evs

#endif
