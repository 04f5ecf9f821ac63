#include "evs/evariety.hpp"

#include <algorithm>
#include <cmath>

namespace evs {

namespace {

// next r-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t r = s.size();
    for (std::size_t i = r; i-- > 0;) {
        if (s[i] + (r - i) < n) {
            ++s[i];
            for (std::size_t j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Gaussian binomial [n choose r]_q, saturating at cap.
std::uint64_t gauss_binom(std::size_t n, std::size_t r, std::uint64_t q, std::uint64_t cap) {
    // product formula (q^{n-i} - 1)/(q^{r-i} - 1), computed via repeated
    // geometric sums to stay integral
    long double acc = 1;
    for (std::size_t i = 0; i < r; ++i) {
        long double num = std::pow((long double)q, (long double)(n - i)) - 1;
        long double den = std::pow((long double)q, (long double)(r - i)) - 1;
        acc *= num / den;
        if (acc > (long double)cap * 2) return cap + 1;
    }
    return (std::uint64_t)(acc + 0.5);
}

}  // namespace

Matrix<Poly> ChartParam::pattern() const {
    Matrix<Poly> m(n, r, Poly(ctx, static_cast<std::uint32_t>(d)));
    for (std::size_t j = 0; j < r; ++j)
        m.at(chart.sigma[j], j) = Poly::constant(ctx, static_cast<std::uint32_t>(d), 1);
    for (const auto& [i, j, f] : coords) {
        if (std::find(chart.sigma.begin(), chart.sigma.end(), i) != chart.sigma.end())
            throw std::invalid_argument("ChartParam: coordinate assigned to a Sigma-row");
        m.at(i, j) = f;
    }
    return m;
}

EPoint ChartParam::at(const std::vector<Fq>& point) const {
    return EPoint{specialize(pattern(), point)};
}

std::pair<Chart, EPoint> chart_of_point(const EPoint& eps) {
    const std::size_t n = eps.basis.rows(), r = eps.r();
    if (rank_kernel_image(eps.basis).rank != r)
        throw std::invalid_argument("chart_of_point: rank-deficient point");
    std::vector<std::size_t> sigma(r);
    for (std::size_t i = 0; i < r; ++i) sigma[i] = i;
    do {
        Matrix<Fq> minor(r, r, eps.basis.proto());
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) minor.at(a, b) = eps.basis.at(sigma[a], b);
        if (rank_kernel_image(minor).rank == r) {
            // invert the minor: solve minor * X = I
            auto inv = solve_columns(minor, Matrix<Fq>::identity(r, minor.proto()));
            EPoint norm{eps.basis * *inv};
            return {Chart{sigma}, norm};
        }
    } while (next_subset(sigma, n));
    throw std::logic_error("chart_of_point: no invertible minor in a full-rank matrix");
}

std::vector<EPoint> enumerate_elementary(const RestrictedLieAlgebra& L, std::size_t r,
                                         std::uint32_t k, std::uint64_t budget) {
    const std::size_t n = L.n;
    if (r == 0 || r > n) throw std::invalid_argument("enumerate_elementary: bad r");
    const FqCtx* F = k == 1 ? L.ctx : FqCtx::ext(L.p(), k);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= L.p();
    if (gauss_binom(n, r, q, budget) > budget)
        throw std::invalid_argument("enumerate_elementary: Grassmannian point budget exceeded");

    // lift the algebra to F_{p^k} so brackets/p-powers act on extension points
    RestrictedLieAlgebra Lk = L;
    if (k > 1) {
        Lk.ctx = F;
        Lk.adb.clear();
        Lk.p_pow.clear();
        Lk.realization.clear();
        for (const auto& a : L.adb) Lk.adb.push_back(lift(a, F));
        for (const auto& v : L.p_pow) Lk.p_pow.push_back(lift(v, F));
        for (const auto& m : L.realization) Lk.realization.push_back(lift(m, F));
    }

    std::vector<Fq> elems = all_field_elements(F);
    std::vector<EPoint> out;
    std::vector<std::size_t> sigma(r);
    for (std::size_t i = 0; i < r; ++i) sigma[i] = i;
    do {
        // reduced column echelon pattern: column j has 1 at row sigma[j],
        // zeros at rows < sigma[j] and at other sigma rows; free elsewhere
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        std::vector<bool> in_sigma(n, false);
        for (auto s : sigma) in_sigma[s] = true;
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = sigma[j] + 1; i < n; ++i)
                if (!in_sigma[i]) free_pos.emplace_back(i, j);
        std::vector<std::size_t> idx(free_pos.size(), 0);
        while (true) {
            Matrix<Fq> b(n, r, Fq(F, 0));
            for (std::size_t j = 0; j < r; ++j) b.at(sigma[j], j) = Fq(F, 1);
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                b.at(free_pos[t].first, free_pos[t].second) = elems[idx[t]];
            EPoint cand{b};
            if (is_elementary(Lk, cand)) out.push_back(std::move(cand));
            // odometer
            std::size_t t = 0;
            for (; t < idx.size(); ++t) {
                if (++idx[t] < elems.size()) break;
                idx[t] = 0;
            }
            if (t == idx.size()) break;
        }
        if (free_pos.empty() && r == n) break;  // single chart when r == n
    } while (next_subset(sigma, n));
    return out;
}

ScanReport scan_ranks(const RestrictedLieAlgebra& L, const UModule& M,
                      const std::vector<EPoint>& points, std::size_t j_lo, std::size_t j_hi) {
    (void)L;
    ScanReport rep;
    for (std::size_t j = j_lo; j <= j_hi; ++j) rep.js.push_back(j);
    for (const auto& pt : points) {
        PointScan ps;
        ps.point = pt;
        for (std::size_t j : rep.js) {
            ps.rad_dim[j] = rad_j(M, pt, j).cols();
            ps.soc_dim[j] = soc_j(M, pt, j).cols();
        }
        rep.points.push_back(std::move(ps));
    }
    for (std::size_t j : rep.js) {
        std::size_t mx = 0, mn = M.dim;
        for (const auto& ps : rep.points) {
            mx = std::max(mx, ps.rad_dim.at(j));
            mn = std::min(mn, ps.soc_dim.at(j));
        }
        rep.observed_max_rad[j] = mx;
        rep.observed_min_soc[j] = mn;
        for (std::size_t i = 0; i < rep.points.size(); ++i) {
            if (rep.points[i].rad_dim.at(j) < mx) rep.rad_locus[j].push_back(i);
            if (rep.points[i].soc_dim.at(j) > mn) rep.soc_locus[j].push_back(i);
        }
    }
    return rep;
}

}  // namespace evs
