#ifndef EVS_EVARIETY_HPP
#define EVS_EVARIETY_HPP

#include <map>

#include "evs/modrep.hpp"

namespace evs {

/// Standard affine chart of Grass(r, n): the r-subset Sigma of rows where
/// the normalized basis matrix carries the identity.  0-based, sorted.
struct Chart {
    std::vector<std::size_t> sigma;
};

/// Polynomial parametrization of a locally closed subset of E(r,g) inside
/// one chart: the n x r pattern matrix has the identity in Sigma-rows and a
/// Poly in d parameters at every free entry.
struct ChartParam {
    const FqCtx* ctx = nullptr;  // base prime field of the coefficients
    std::size_t n = 0, r = 0, d = 0;
    Chart chart;
    /// (row, col, poly) for free entries; omitted free entries are zero.
    std::vector<std::tuple<std::size_t, std::size_t, Poly>> coords;
    std::string domain_note;

    /// Full n x r matrix over Poly (identity rows included as constants).
    Matrix<Poly> pattern() const;
    /// Evaluate the pattern at a parameter point (possibly in an extension).
    EPoint at(const std::vector<Fq>& point) const;
};

/// Chart selection: lexicographically first Sigma with invertible minor;
/// returned point is eps * (Sigma-minor)^{-1}, same span, identity in
/// Sigma-rows.
std::pair<Chart, EPoint> chart_of_point(const EPoint& eps);

/// All F_{p^k}-rational points of E(r,g), one normalized representative per
/// subspace, enumerated chart-by-chart via reduced column echelon patterns.
/// Throws if |Grass(r,n)(F_{p^k})| exceeds the budget.
std::vector<EPoint> enumerate_elementary(const RestrictedLieAlgebra& L, std::size_t r,
                                         std::uint32_t k, std::uint64_t budget = 2000000);

struct PointScan {
    EPoint point;
    std::map<std::size_t, std::size_t> rad_dim, soc_dim;
};

/// Per-point Rad/Soc dimensions plus observed extremes over the scanned set.
/// "Observed" is literal: the field is finite, so these bound but need not
/// equal the extremes over the algebraic closure.
struct ScanReport {
    std::vector<std::size_t> js;
    std::vector<PointScan> points;
    std::map<std::size_t, std::size_t> observed_max_rad, observed_min_soc;
    /// Indices of points in the observed Rad^j / Soc^j subvarieties
    /// (strictly below the observed max / strictly above the observed min).
    std::map<std::size_t, std::vector<std::size_t>> rad_locus, soc_locus;
};

ScanReport scan_ranks(const RestrictedLieAlgebra& L, const UModule& M,
                      const std::vector<EPoint>& points, std::size_t j_lo, std::size_t j_hi);

struct ConstancyCertificate {
    std::size_t j = 0;
    std::size_t generic_soc_rank = 0, generic_rad_rank = 0;
    bool constant = true;  // sampled matrix ranks all equal the generic ranks
    bool exhaustive = false;
    /// parameter points where the specialized kernel/image rank deviates
    std::vector<std::vector<Fq>> deviating;
    /// parameter points where fiber rank and modrep Soc/Rad dims disagree
    std::vector<std::vector<Fq>> fiber_mismatch;
    std::string narrative;
};

/// Implemented with the theta machinery (generic ranks over the function
/// field of the parameter space + fiberwise comparison).
ConstancyCertificate constancy_certificate(const RestrictedLieAlgebra& L, const UModule& M,
                                           const ChartParam& param,
                                           const std::vector<std::vector<Fq>>& points,
                                           std::size_t j, bool exhaustive = false);

}  // namespace evs

#endif
