#ifndef EVS_THETA_HPP
#define EVS_THETA_HPP

#include "evs/evariety.hpp"

namespace evs {

/// The universal operators Theta_s = sum_i rho(x_i) * Y_{i,s} on a chart:
/// r polynomial m x m matrices in the chart parameters.  Built only after
/// verifying pairwise commutation and Theta_s^p = 0 as polynomial identities
/// (these hold iff the parametrized locus lies in E(r,g)).
struct ThetaSystem {
    UModule M;
    ChartParam param;
    std::vector<Matrix<Poly>> theta;

    std::size_t m() const { return M.dim; }
    std::size_t r() const { return theta.size(); }
};

ThetaSystem build_theta(const UModule& M, const ChartParam& param);

/// All weak compositions (j_1,...,j_r) of j into r parts, in lexicographic
/// order; this is the block order used by kernel_image_matrices.
std::vector<std::vector<std::size_t>> degree_compositions(std::size_t j, std::size_t r);

/// K_j: all C(j+r-1, r-1) degree-j products stacked vertically (kernel = Soc
/// module); I_j: the same products side by side (column span = Rad module).
/// Product order: lexicographic in the exponent vector (j_1,...,j_r).
std::pair<Matrix<Poly>, Matrix<Poly>> kernel_image_matrices(const ThetaSystem& ts, std::size_t j);

/// Same construction from bare square operator matrices (any polynomial
/// ring); p bounds the admissible degrees, j must lie in 1..(p-1)*r.
std::pair<Matrix<Poly>, Matrix<Poly>> kernel_image_matrices(
    const std::vector<Matrix<Poly>>& theta, std::uint32_t p, std::size_t j);

/// (ker_rank, im_rank) over the rational function field of the parameters:
/// ker_rank = m - rank K_j, im_rank = rank I_j.
std::pair<std::size_t, std::size_t> generic_ranks(const ThetaSystem& ts, std::size_t j);

struct SheafPoint {
    std::vector<Fq> coords;  // parameter-space point
    /// Fiber dimensions of the kernel and image sheaves: a polynomial basis
    /// of the kernel module (resp. of the saturated image span) of K_j/I_j
    /// is computed once over k[T] and specialized at the point.  These can
    /// differ from soc/rad below: the natural map from the sheaf fiber into
    /// the module of the specialized operators need not be an isomorphism.
    std::size_t ker = 0, im = 0;
    /// Soc^j / Rad^j dimensions of the module at the fiber point (modrep):
    /// equivalently kernel dimension / rank of the *specialized* K_j / I_j.
    std::size_t soc = 0, rad = 0;
    bool agree = false;  // ker == soc and im == rad
};

struct SheafReport {
    std::size_t j = 0;
    std::size_t generic_ker = 0, generic_im = 0;
    std::vector<SheafPoint> points;
    /// Soc/Rad dimensions match the generic kernel/image ranks at every
    /// tested point: the rank-constancy hypothesis of the bundle criterion.
    bool certified = false;
    /// Sheaf fiber dimensions are constant over the tested points.  On a
    /// one-parameter chart this always holds (torsion-free modules over a
    /// PID are free) and is reverified computationally; it can be true while
    /// `certified` is false, namely when Soc/Rad jump at special points and
    /// the sheaf fiber sits inside them as a proper subspace.
    bool sheaf_rank_constant = false;
    std::string narrative;
};

/// Per-point comparison of sheaf fiber dimensions against the modrep Soc/Rad
/// dimensions.  Semicontinuity (soc >= generic kernel rank, rad <= generic
/// image rank) is asserted; a violation throws, it would mean an elimination
/// bug.  Charts with more than one parameter are not supported here (the
/// kernel-module computation is over a univariate polynomial ring).
SheafReport fiber_compare(const ThetaSystem& ts, std::size_t j,
                          const std::vector<std::vector<Fq>>& points);

/// fiber_compare plus the certification flags and a narrative: certified iff
/// Soc/Rad attain the generic kernel/image ranks at every tested point.
SheafReport bundle_certificate(const ThetaSystem& ts, std::size_t j,
                               const std::vector<std::vector<Fq>>& points);

/// The module lifted entrywise into an extension field.
UModule lift(const UModule& M, const FqCtx* bigger);

}  // namespace evs

#endif
