#ifndef EVS_LIEALG_HPP
#define EVS_LIEALG_HPP

#include <string>

#include "evs/matrix.hpp"

namespace evs {

struct ValidationReport {
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
    std::string summary() const;
};

/// Finite-dimensional restricted Lie algebra over F_p given by structure
/// constants, the p-operation on basis vectors, and (optionally) a faithful
/// matrix realization in gl_N whose commutators/p-th powers reproduce both.
/// Elements are n x 1 coordinate columns in the stored basis.
struct RestrictedLieAlgebra {
    const FqCtx* ctx = nullptr;  // prime field F_p
    std::size_t n = 0;
    std::vector<std::string> labels;
    /// adb[i](k, j) = coefficient of x_k in [x_i, x_j]
    std::vector<Matrix<Fq>> adb;
    /// p_pow[i] = coordinates of x_i^{[p]} (n x 1)
    std::vector<Matrix<Fq>> p_pow;
    std::vector<Matrix<Fq>> realization;  // empty, or n matrices in gl_N

    std::uint32_t p() const { return ctx->p; }
    bool has_realization() const { return !realization.empty(); }

    Matrix<Fq> zero_element() const { return Matrix<Fq>(n, 1, Fq(ctx, 0)); }
    Matrix<Fq> basis_element(std::size_t i) const;

    /// ad of a coordinate column, as an n x n matrix.
    Matrix<Fq> ad(const Matrix<Fq>& v) const;
    /// [v, w] of coordinate columns.
    Matrix<Fq> bracket(const Matrix<Fq>& v, const Matrix<Fq>& w) const;
    /// Realize a coordinate column as an N x N matrix (requires realization).
    Matrix<Fq> realize(const Matrix<Fq>& v) const;

    /// v^{[p]} as a coordinate column.  With a realization: exact matrix p-th
    /// power expanded back into coordinates.  Without one: the p-semilinear
    /// candidate sum lambda_i^p x_i^{[p]}, cross-checked against ad(v)^p;
    /// throws if the check fails (candidate invalid off commuting spans).
    Matrix<Fq> p_power(const Matrix<Fq>& v) const;
};

/// A candidate point of E(r,g): an n x r coordinate matrix whose columns
/// span the subalgebra.
struct EPoint {
    Matrix<Fq> basis;  // n rows, r cols, full rank expected
    std::size_t r() const { return basis.cols(); }
};

ValidationReport validate_algebra(const RestrictedLieAlgebra& L);

/// Build an algebra from a faithful matrix realization: structure constants
/// and p-powers are read off commutators / p-th powers of the given matrices
/// (throws if those fall outside the span, i.e. the span is not a restricted
/// subalgebra of gl_N).
RestrictedLieAlgebra algebra_from_realization(const FqCtx* ctx, std::vector<std::string> labels,
                                              std::vector<Matrix<Fq>> mats);

/// True iff the span of eps is abelian with trivial p-restriction.
/// Throws on rank-deficient eps.
bool is_elementary(const RestrictedLieAlgebra& L, const EPoint& eps);

enum class Family { gl, sl, sp };

/// The classical algebra with its canonical basis order (see catalog for the
/// bundled defining module).  gl_n: E_ab row-major.  sl_n: off-diagonal E_ab
/// row-major, then h_a = E_aa - E_{a+1,a+1}.  sp_2n (form [[0,I],[-I,0]]):
/// A-part [[E_ab,0],[0,-E_ba]] row-major, then B-part (i<=j), then C-part.
RestrictedLieAlgebra classical_algebra(Family f, std::size_t n, std::uint32_t p);

/// Size of the defining representation (n, or 2n for sp).
std::size_t classical_defining_dim(Family f, std::size_t n);

/// Defining-representation matrices in the same basis order.
std::vector<Matrix<Fq>> classical_defining_actions(Family f, std::size_t n, std::uint32_t p);

/// Abelian nilradical u_{r,n-r} of the block parabolic of gl_n / sl_n, or of
/// the cominuscule parabolic P_{alpha_n} in sp_2n (dimension n(n+1)/2; the
/// argument r is ignored for sp).
EPoint nilradical_of_parabolic(Family f, std::size_t n, std::size_t r, std::uint32_t p);

/// Truncated exponential exp(ad x) = sum_{i<p} (ad x)^i / i!; requires
/// (ad x)^p = 0.
Matrix<Fq> exp_ad(const RestrictedLieAlgebra& L, const Matrix<Fq>& x);

/// Distinct elementary points exp(ad c_1 g_1)...exp(ad c_m g_m) . eps with
/// random scalars c_i, deduplicated by span; deterministic under seed.
/// Throws if some generator has (ad g)^p != 0.
std::vector<EPoint> adjoint_orbit_points(const RestrictedLieAlgebra& L, const EPoint& eps,
                                         const std::vector<Matrix<Fq>>& generators,
                                         std::size_t count, std::uint64_t seed);

}  // namespace evs

#endif
