#include "evs/p1split.hpp"

#include <algorithm>

namespace evs {

namespace {

/// substitute t = 1, s = T: k[s,t] -> k[T]
Poly dehomog_t1(const Poly& f) {
    if (f.nvars() != 2) throw std::invalid_argument("dehomog_t1: expected 2 variables");
    Poly r(f.ctx(), 1);
    for (const auto& [e, c] : f.terms()) r += Poly::monomial(f.ctx(), {e[0]}, c);
    return r;
}

Matrix<Poly> dehomog_t1(const Matrix<Poly>& m) {
    Matrix<Poly> r(m.rows(), m.cols(), Poly(m.proto().ctx(), 1));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = dehomog_t1(m.at(i, j));
    return r;
}

/// homogeneous entry degree of an operator matrix; zero matrix counts as 0
int operator_degree(const Matrix<Poly>& th) {
    int e = -1;
    for (std::size_t i = 0; i < th.rows(); ++i)
        for (std::size_t j = 0; j < th.cols(); ++j) {
            const Poly& f = th.at(i, j);
            if (f.is_zero()) continue;
            auto hd = f.homogeneous_degree();
            if (!hd) throw std::invalid_argument("P1System: entry not homogeneous");
            if (e == -1)
                e = *hd;
            else if (e != *hd)
                throw std::invalid_argument("P1System: entries of one operator have mixed degrees");
        }
    return e == -1 ? 0 : e;
}

/// per-composition-block entry degree of K_j / I_j
std::vector<int> block_degrees(const P1System& sys, std::size_t j) {
    std::vector<int> out;
    for (const auto& comp : degree_compositions(j, sys.r())) {
        int D = 0;
        for (std::size_t s = 0; s < sys.r(); ++s)
            D += static_cast<int>(comp[s]) * sys.entry_degree[s];
        out.push_back(D);
    }
    return out;
}

/// multiplication by s^N (by_t = false) or t^N from the degree-d piece of
/// k[s,t]^m to the degree-(d+N) piece, in graded_piece_map coordinates
/// (generator-major, monomial s^{deg-b} t^b at index b)
Matrix<Fq> mult_power(const FqCtx* ctx, std::size_t m, std::size_t d, std::size_t N, bool by_t) {
    Matrix<Fq> M(m * (d + N + 1), m * (d + 1), Fq(ctx, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t b = 0; b <= d; ++b)
            M.at(i * (d + N + 1) + b + (by_t ? N : 0), i * (d + 1) + b) = Fq(ctx, 1);
    return M;
}

/// dim { v in degree d : s^N v and t^N v in colspan(G) }, where G presents
/// the degree-(d+N) piece of the image module
std::size_t sat_dim(const Matrix<Fq>& G, const FqCtx* ctx, std::size_t m, std::size_t d,
                    std::size_t N) {
    Matrix<Fq> S = mult_power(ctx, m, d, N, false), T = mult_power(ctx, m, d, N, true);
    const std::size_t vr = S.rows(), vc = S.cols(), gc = G.cols();
    Matrix<Fq> A(2 * vr, vc + 2 * gc, Fq(ctx, 0));
    for (std::size_t i = 0; i < vr; ++i)
        for (std::size_t j = 0; j < vc; ++j) {
            A.at(i, j) = S.at(i, j);
            A.at(vr + i, j) = T.at(i, j);
        }
    for (std::size_t i = 0; i < vr; ++i)
        for (std::size_t j = 0; j < gc; ++j) {
            A.at(i, vc + j) = -G.at(i, j);
            A.at(vr + i, vc + gc + j) = -G.at(i, j);
        }
    std::size_t ker_a = A.cols() - rank_kernel_image(A).rank;
    std::size_t ker_g = gc - rank_kernel_image(G).rank;
    // solutions (v, w1, w2) project onto the admissible v's with fiber
    // ker(G) x ker(G)
    return ker_a - 2 * ker_g;
}

}  // namespace

int P1System::max_entry_degree() const {
    int e = 0;
    for (int d : entry_degree) e = std::max(e, d);
    return e;
}

int SplittingType::total_degree() const {
    int s = 0;
    for (int a : twists) s += a;
    return s;
}

std::string SplittingType::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < twists.size(); ++i) {
        if (i) s += ", ";
        s += "O(" + std::to_string(twists[i]) + ")";
    }
    return s + "}";
}

P1System make_p1system(const UModule& M, std::vector<Matrix<Poly>> theta, std::string note) {
    if (theta.empty()) throw std::invalid_argument("make_p1system: no operators");
    P1System sys;
    sys.M = M;
    sys.note = std::move(note);
    for (const auto& th : theta) {
        if (th.rows() != M.dim || th.cols() != M.dim)
            throw std::invalid_argument("make_p1system: operator shape mismatch");
        if (th.proto().nvars() != 2)
            throw std::invalid_argument("make_p1system: operators must live in k[s,t]");
        sys.entry_degree.push_back(operator_degree(th));
    }
    sys.theta = std::move(theta);
    for (std::size_t a = 0; a < sys.r(); ++a)
        for (std::size_t b = a + 1; b < sys.r(); ++b)
            if (!(sys.theta[a] * sys.theta[b] == sys.theta[b] * sys.theta[a]))
                throw std::invalid_argument("make_p1system: operators do not commute");
    const std::uint32_t p = M.ctx->p;
    Poly proto = sys.theta[0].proto();
    for (std::size_t a = 0; a < sys.r(); ++a) {
        Matrix<Poly> pw = Matrix<Poly>::identity(M.dim, proto);
        for (std::uint32_t e = 0; e < p; ++e) pw = pw * sys.theta[a];
        if (!pw.is_zero())
            throw std::invalid_argument("make_p1system: Theta_" + std::to_string(a + 1) +
                                        "^p != 0: locus leaves E(r,g)");
    }
    return sys;
}

P1System homogenize(const ThetaSystem& ts) {
    if (ts.param.d != 1)
        throw std::invalid_argument("homogenize: expected a one-parameter affine chart");
    const FqCtx* ctx = ts.M.ctx;
    std::vector<Matrix<Poly>> hth;
    for (const auto& th : ts.theta) {
        int e = 0;
        for (std::size_t i = 0; i < th.rows(); ++i)
            for (std::size_t j = 0; j < th.cols(); ++j)
                e = std::max(e, th.at(i, j).total_degree());
        Matrix<Poly> h(th.rows(), th.cols(), Poly(ctx, 2));
        for (std::size_t i = 0; i < th.rows(); ++i)
            for (std::size_t j = 0; j < th.cols(); ++j)
                for (const auto& [ex, c] : th.at(i, j).terms())
                    h.at(i, j) += Poly::monomial(
                        ctx, {ex[0], static_cast<std::uint32_t>(e) - ex[0]}, c);
        if (dehomog_t1(h) != th) throw std::logic_error("homogenize: self-check failed");
        hth.push_back(std::move(h));
    }
    return make_p1system(ts.M, std::move(hth),
                         "homogenized from affine chart: " + ts.param.domain_note);
}

std::vector<std::size_t> graded_kernel_hilbert(const P1System& sys, std::size_t j,
                                               std::size_t d_max) {
    auto [K, I] = kernel_image_matrices(sys.theta, sys.M.ctx->p, j);
    (void)I;
    auto bd = block_degrees(sys, j);
    std::vector<int> src(sys.m(), 0), tgt;
    for (int D : bd) tgt.insert(tgt.end(), sys.m(), -D);
    std::vector<std::size_t> h;
    for (std::size_t d = 0; d <= d_max; ++d) {
        Matrix<Fq> g = graded_piece_map(K, src, tgt, static_cast<int>(d));
        h.push_back(g.cols() - rank_kernel_image(g).rank);
    }
    return h;
}

ImageHilbert graded_image_hilbert(const P1System& sys, std::size_t j, std::size_t d_max) {
    auto [K, I] = kernel_image_matrices(sys.theta, sys.M.ctx->p, j);
    (void)K;
    auto bd = block_degrees(sys, j);
    std::vector<int> tgt(sys.m(), 0), src;
    for (int D : bd) src.insert(src.end(), sys.m(), D);
    const FqCtx* ctx = sys.M.ctx;
    ImageHilbert out;
    auto piece = [&](std::size_t d) {
        return graded_piece_map(I, src, tgt, static_cast<int>(d));
    };
    for (std::size_t d = 0; d <= d_max; ++d)
        out.raw.push_back(rank_kernel_image(piece(d)).rank);
    const std::size_t n_cap = d_max + 4;
    for (std::size_t d = 0; d <= d_max; ++d) {
        std::size_t N = 2;
        std::size_t cur = sat_dim(piece(d + N), ctx, sys.m(), d, N);
        while (true) {
            std::size_t nxt = sat_dim(piece(d + N + 1), ctx, sys.m(), d, N + 1);
            if (nxt == cur) break;
            cur = nxt;
            if (++N > n_cap)
                throw std::runtime_error(
                    "graded_image_hilbert: saturation did not stabilize in degree " +
                    std::to_string(d) + "; increase d_max");
        }
        out.saturated.push_back(cur);
    }
    return out;
}

SplittingType splitting_from_hilbert(const std::vector<std::size_t>& h, std::size_t rank) {
    SplittingType st;
    st.hilbert = h;
    std::vector<int> tw;
    for (std::size_t d = 0; d < h.size(); ++d) {
        std::size_t pred = 0;
        for (int a : tw) {
            int c = static_cast<int>(d) + a + 1;
            if (c > 0) pred += static_cast<std::size_t>(c);
        }
        if (h[d] < pred)
            throw std::runtime_error(
                "splitting_from_hilbert: Hilbert data inconsistent with a splitting (drop below "
                "prediction at degree " +
                std::to_string(d) + ")");
        for (std::size_t k = 0; k < h[d] - pred; ++k) tw.push_back(-static_cast<int>(d));
    }
    if (tw.size() != rank)
        throw std::runtime_error("splitting_from_hilbert: recovered " +
                                 std::to_string(tw.size()) + " summands, expected rank " +
                                 std::to_string(rank) + " (no stable window reached)");
    const std::size_t w = std::max<std::size_t>(4, rank);
    if (h.size() < w + 1)
        throw std::runtime_error("splitting_from_hilbert: verification window too short");
    for (std::size_t d = h.size() - w - 1; d + 1 < h.size(); ++d)
        if (h[d + 1] - h[d] != rank)
            throw std::runtime_error(
                "splitting_from_hilbert: tail difference not equal to the rank (no stable "
                "window)");
    std::sort(tw.rbegin(), tw.rend());
    st.twists = std::move(tw);
    return st;
}

std::size_t default_dmax(const P1System& sys, std::size_t j) {
    return sys.m() * j * static_cast<std::size_t>(std::max(1, sys.max_entry_degree())) +
           2 * sys.m() + 4;
}

namespace {

std::pair<std::size_t, std::size_t> generic_ranks_dehomog(const P1System& sys, std::size_t j) {
    // generic ranks over k(s,t) equal ranks over the function field of the
    // affine chart t != 0, where Bareiss elimination stays univariate
    std::vector<Matrix<Poly>> aff;
    for (const auto& th : sys.theta) aff.push_back(dehomog_t1(th));
    auto [K, I] = kernel_image_matrices(aff, sys.M.ctx->p, j);
    return {sys.m() - bareiss_rank(K), bareiss_rank(I)};
}

SplittingType finish(const P1System& sys, std::size_t rank,
                     const std::vector<std::size_t>& h) {
    SplittingType st = splitting_from_hilbert(h, rank);
    st.entry_degree = sys.max_entry_degree();
    return st;
}

}  // namespace

SplittingType kernel_splitting(const P1System& sys, std::size_t j, std::size_t d_max) {
    auto [kr, ir] = generic_ranks_dehomog(sys, j);
    (void)ir;
    if (d_max == 0) {
        // adaptive depth: enough for twists down to -(j*e + 1) plus the
        // verification window, growing to the conservative cap on demand
        std::size_t d = static_cast<std::size_t>(std::max(1, sys.max_entry_degree())) * j +
                        std::max<std::size_t>(4, kr) + 2;
        const std::size_t cap = default_dmax(sys, j);
        while (true) {
            try {
                return finish(sys, kr, graded_kernel_hilbert(sys, j, d));
            } catch (const std::runtime_error&) {
                if (d >= cap) throw;
                d = std::min(cap, 2 * d);
            }
        }
    }
    return finish(sys, kr, graded_kernel_hilbert(sys, j, d_max));
}

SplittingType image_splitting(const P1System& sys, std::size_t j, std::size_t d_max) {
    auto [kr, ir] = generic_ranks_dehomog(sys, j);
    (void)kr;
    if (d_max == 0) {
        std::size_t d = static_cast<std::size_t>(std::max(1, sys.max_entry_degree())) * j +
                        std::max<std::size_t>(4, ir) + 2;
        const std::size_t cap = default_dmax(sys, j);
        while (true) {
            try {
                return finish(sys, ir, graded_image_hilbert(sys, j, d).saturated);
            } catch (const std::runtime_error&) {
                if (d >= cap) throw;
                d = std::min(cap, 2 * d);
            }
        }
    }
    return finish(sys, ir, graded_image_hilbert(sys, j, d_max).saturated);
}

}  // namespace evs
