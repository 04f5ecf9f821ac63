#include "evs/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace evs {

namespace {

Matrix<Fq> unit(const FqCtx* ctx, std::size_t N, std::size_t i, std::size_t j) {
    Matrix<Fq> m(N, N, Fq(ctx, 0));
    m.at(i, j) = Fq(ctx, 1);
    return m;
}

Matrix<Fq> mat_pow(Matrix<Fq> a, std::uint32_t e) {
    Matrix<Fq> r = Matrix<Fq>::identity(a.rows(), a.proto());
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

Matrix<Fq> comm(const Matrix<Fq>& a, const Matrix<Fq>& b) { return a * b - b * a; }

void require_odd_prime(std::uint32_t p, const char* who) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(who) + ": need p odd >= 3");
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

/// ---- classical ------------------------------------------------------------

ClassicalBundle make_classical(Family f, std::size_t n, std::uint32_t p) {
    require_odd_prime(p, "make_classical");
    if (n < 1 || (f != Family::sp && n < 2))
        throw std::invalid_argument("make_classical: n too small");
    if (f == Family::sl && p % n == 0)
        throw std::invalid_argument("make_classical: sl_n requires p not dividing n");
    ClassicalBundle b;
    b.L = classical_algebra(f, n, p);
    b.defining.ctx = b.L.ctx;
    b.defining.dim = classical_defining_dim(f, n);
    b.defining.label = "defining";
    b.defining.actions = classical_defining_actions(f, n, p);
    return b;
}

/// ---- Heisenberg -----------------------------------------------------------

HeisenbergBundle make_heisenberg(std::uint32_t p) {
    require_odd_prime(p, "make_heisenberg");
    const FqCtx* ctx = FqCtx::prime(p);
    HeisenbergBundle b;
    b.L = algebra_from_realization(
        ctx, {"x", "y", "z"}, {unit(ctx, 3, 0, 1), unit(ctx, 3, 1, 2), unit(ctx, 3, 0, 2)});
    b.adjoint = adjoint_module(b.L);
    b.line.ctx = ctx;
    b.line.n = 3;
    b.line.r = 2;
    b.line.d = 1;
    b.line.chart.sigma = {0, 2};
    b.line.coords.emplace_back(1, 0, Poly::variable(ctx, 1, 0));
    b.line.domain_note = "affine chart of (s:t) |-> span(s x + t y, z) = E(2, u_3)";
    b.p1 = homogenize(build_theta(b.adjoint, b.line));
    return b;
}

/// ---- sl_2 regular module at p = 3 -----------------------------------------

namespace {

/// Left and right multiplications by e, f, h on the PBW basis e^a h^b f^c of
/// u(sl_2).  Rewriting rules (normal order e^a h^b f^c, reductions e^p = 0,
/// f^p = 0, h^p = h):
///   e . (a,b,c) = (a+1,b,c)
///   h . (a,b,c) = (a,b+1,c) + 2a (a,b,c)
///   f . (a,b,c) = sum_k C(b,k) 2^{b-k} (a,k,c+1)
///                 - a (a-1,b+1,c) - a(a-1) (a-1,b,c)
///   (a,b,c) . f = (a,b,c+1)
///   (a,b,c) . h = (a,b+1,c) + 2c (a,b,c)
///   (a,b,c) . e = sum_k C(b,k) 2^{b-k} (a+1,k,c)
///                 - c (a,b+1,c-1) - c(c-1) (a,b,c-1)
struct RegularRep {
    UModule M;                        // actions ordered [e, f, h]
    std::vector<Matrix<Fq>> rmult;    // right multiplications [e, f, h]
};

RegularRep build_regular(std::uint32_t p) {
    if (p != 3)
        throw std::invalid_argument("sl2 regular module: only p = 3 is supported (dim 27)");
    const FqCtx* ctx = FqCtx::prime(p);
    const std::size_t P = p, D = P * P * P;
    auto id = [P](std::size_t a, std::size_t b, std::size_t c) { return a * P * P + b * P + c; };
    Matrix<Fq> Le(D, D, Fq(ctx, 0)), Lh = Le, Lf = Le, Re = Le, Rh = Le, Rf = Le;
    auto add = [&](Matrix<Fq>& m, std::size_t a, std::size_t b, std::size_t c, std::size_t col,
                   std::int64_t coef) {
        if (b >= P) b -= P - 1;  // h^p = h
        if (a >= P || c >= P) return;  // e^p = 0, f^p = 0
        m.at(id(a, b, c), col) += Fq(ctx, coef);
    };
    for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = 0; b < P; ++b)
            for (std::size_t c = 0; c < P; ++c) {
                const std::size_t col = id(a, b, c);
                const auto A = static_cast<std::int64_t>(a), C = static_cast<std::int64_t>(c);
                add(Le, a + 1, b, c, col, 1);
                add(Lh, a, b + 1, c, col, 1);
                add(Lh, a, b, c, col, 2 * A);
                add(Rf, a, b, c + 1, col, 1);
                add(Rh, a, b + 1, c, col, 1);
                add(Rh, a, b, c, col, 2 * C);
                // binomial expansion of (h+2)^b
                for (std::size_t k = 0; k <= b; ++k) {
                    std::int64_t w = static_cast<std::int64_t>(binom(b, k));
                    for (std::size_t i = 0; i < b - k; ++i) w *= 2;
                    add(Lf, a, k, c + 1, col, w);
                    add(Re, a + 1, k, c, col, w);
                }
                if (a >= 1) {
                    add(Lf, a - 1, b + 1, c, col, -A);
                    add(Lf, a - 1, b, c, col, -A * (A - 1));
                }
                if (c >= 1) {
                    add(Re, a, b + 1, c - 1, col, -C);
                    add(Re, a, b, c - 1, col, -C * (C - 1));
                }
            }
    // self-checks: the construction is rewriting-rule based, so verify the
    // defining relations of u(sl_2) exactly before handing the module out
    const Fq two(ctx, 2);
    auto ok = [](bool cond) {
        if (!cond) throw std::logic_error("sl2 regular module: internal relation check failed");
    };
    ok(comm(Lh, Le) == Le * two);
    ok(comm(Lh, Lf) == -(Lf * two));
    ok(comm(Le, Lf) == Lh);
    ok(mat_pow(Le, p).is_zero() && mat_pow(Lf, p).is_zero() && mat_pow(Lh, p) == Lh);
    ok(comm(Rh, Re) == -(Re * two));  // right mult is an anti-homomorphism
    ok(comm(Rh, Rf) == Rf * two);
    ok(comm(Re, Rf) == -Rh);
    ok(mat_pow(Re, p).is_zero() && mat_pow(Rf, p).is_zero() && mat_pow(Rh, p) == Rh);
    for (const auto* l : {&Le, &Lf, &Lh})
        for (const auto* r : {&Re, &Rf, &Rh}) ok(comm(*l, *r).is_zero());
    RegularRep reg;
    reg.M.ctx = ctx;
    reg.M.dim = D;
    reg.M.label = "u(sl2) regular";
    reg.M.actions = {Le, Lf, Lh};
    reg.rmult = {Re, Rf, Rh};
    return reg;
}

}  // namespace

UModule sl2_regular_module(std::uint32_t p) { return build_regular(p).M; }

Sl2Pims make_sl2_pims(std::uint32_t p, std::uint64_t seed, std::size_t budget) {
    RegularRep reg = build_regular(p);
    const FqCtx* ctx = reg.M.ctx;
    const std::size_t P = p, D = reg.M.dim;
    // right multiplication by every PBW monomial: R_{e^a h^b f^c} = Rf^c Rh^b Re^a
    std::vector<Matrix<Fq>> rmono;
    for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = 0; b < P; ++b)
            for (std::size_t c = 0; c < P; ++c)
                rmono.push_back(mat_pow(reg.rmult[1], static_cast<std::uint32_t>(c)) *
                                mat_pow(reg.rmult[2], static_cast<std::uint32_t>(b)) *
                                mat_pow(reg.rmult[0], static_cast<std::uint32_t>(a)));

    std::mt19937_64 rng(seed);
    std::vector<Matrix<Fq>> blocks{Matrix<Fq>::identity(D, Fq(ctx, 0))};
    std::vector<std::size_t> fails{0};
    // split blocks by Fitting decompositions of random module endomorphisms:
    // a random right multiplication, projected back into the block along the
    // complementary blocks, is a uniformly random element of End_u(block)
    for (std::size_t i = 0; i < blocks.size();) {
        const std::size_t d = blocks[i].cols();
        if (d <= 3 || fails[i] >= budget) {  // no projective has dim < 3
            ++i;
            continue;
        }
        Matrix<Fq> Ball = blocks[i];
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (j != i) Ball = hstack(Ball, blocks[j]);
        Matrix<Fq> psi(D, D, Fq(ctx, 0));
        for (const auto& rm : rmono) {
            auto c = static_cast<std::int64_t>(rng() % p);
            if (c) psi = psi + rm * Fq(ctx, c);
        }
        auto X = solve_columns(Ball, psi * blocks[i]);
        if (!X) throw std::logic_error("make_sl2_pims: block system is not a direct sum");
        Matrix<Fq> phi(d, d, Fq(ctx, 0));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) phi.at(r, c) = X->at(r, c);
        // Fitting: exponent D >= d guarantees ker/im of phi^D split the block
        auto fit = rank_kernel_image(mat_pow(phi, static_cast<std::uint32_t>(D)));
        if (fit.rank == 0 || fit.rank == d) {
            ++fails[i];
            continue;
        }
        Matrix<Fq> B1 = blocks[i] * fit.kernel_basis;
        Matrix<Fq> B2 = blocks[i] * fit.image_basis;
        if (rank_of(hstack(B1, B2)) != d) {
            ++fails[i];
            continue;
        }
        blocks[i] = std::move(B1);
        fails[i] = 0;
        blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(B2));
        fails.insert(fails.begin() + static_cast<std::ptrdiff_t>(i) + 1, 0);
    }

    std::vector<std::size_t> dims;
    for (const auto& b : blocks) dims.push_back(b.cols());
    std::sort(dims.rbegin(), dims.rend());
    if (dims != std::vector<std::size_t>{6, 6, 6, 3, 3, 3})
        throw std::runtime_error(
            "make_sl2_pims: decomposition did not converge to the block structure "
            "{6,6,6,3,3,3} within the iteration budget; rerun with a different seed");

    Sl2Pims out;
    out.L = classical_algebra(Family::sl, 2, p);
    out.pims.resize(3);
    out.multiplicity.assign(3, 0);
    out.summand_dims = dims;
    for (const auto& B : blocks) {
        const std::size_t d = B.cols();
        UModule S;
        S.ctx = ctx;
        S.dim = d;
        for (const auto& act : reg.M.actions) {
            auto ind = solve_columns(B, act * B);
            if (!ind) throw std::logic_error("make_sl2_pims: block is not a submodule");
            S.actions.push_back(*ind);
        }
        std::size_t lambda;
        if (d == 3) {
            lambda = 2;  // Steinberg: the only projective of dim 3
        } else {
            // P_0 is the block with a trivial submodule (soc = trivial simple)
            Matrix<Fq> stacked = vstack(vstack(S.actions[0], S.actions[1]), S.actions[2]);
            lambda = rank_kernel_image(stacked).rank < d ? 0 : 1;
        }
        S.label = "P" + std::to_string(lambda);
        if (out.multiplicity[lambda] == 0) out.pims[lambda] = S;
        ++out.multiplicity[lambda];
    }
    if (out.multiplicity != std::vector<std::size_t>{1, 2, 3})
        throw std::runtime_error(
            "make_sl2_pims: summand identification did not yield multiplicities {1,2,3}; "
            "rerun with a different seed");
    return out;
}

P1System nilcone_system(const UModule& M) {
    if (M.actions.size() != 3)
        throw std::invalid_argument("nilcone_system: expected an sl_2 module (3 actions)");
    const FqCtx* ctx = M.ctx;
    Poly s = Poly::variable(ctx, 2, 0), t = Poly::variable(ctx, 2, 1);
    Matrix<Poly> th(M.dim, M.dim, zero_like(s));
    for (std::size_t i = 0; i < M.dim; ++i)
        for (std::size_t j = 0; j < M.dim; ++j) {
            const Fq &e = M.actions[0].at(i, j), &f = M.actions[1].at(i, j),
                     &h = M.actions[2].at(i, j);
            if (!h.is_zero()) th.at(i, j) += s * t * h;
            if (!e.is_zero()) th.at(i, j) += s * s * e;
            if (!f.is_zero()) th.at(i, j) -= t * t * f;
        }
    return make_p1system(M, {th}, "projectivized nilpotent cone of sl_2, (s:t) |-> st h + s^2 e - t^2 f");
}

ChartParam nilcone_chart(std::uint32_t p) {
    require_odd_prime(p, "nilcone_chart");
    const FqCtx* ctx = FqCtx::prime(p);
    ChartParam cp;
    cp.ctx = ctx;
    cp.n = 3;
    cp.r = 1;
    cp.d = 1;
    cp.chart.sigma = {0};  // sl_2 basis order [e, f, h]
    Poly T = Poly::variable(ctx, 1, 0);
    cp.coords.emplace_back(2, 0, T);
    cp.coords.emplace_back(1, 0, -(T * T));
    cp.domain_note = "affine chart span(e + T h - T^2 f) of the nilpotent cone line";
    return cp;
}

/// ---- sl_2^{+r} -------------------------------------------------------------

Sl2rBundle make_sl2_r(std::uint32_t p, std::size_t r, std::size_t s, std::size_t lambda,
                      std::uint64_t seed) {
    if (p != 3) throw std::invalid_argument("make_sl2_r: only p = 3 is supported");
    if (r < 1 || r > 3 || s < 1 || s > r)
        throw std::invalid_argument("make_sl2_r: need 1 <= s <= r <= 3");
    if (lambda > 2) throw std::invalid_argument("make_sl2_r: lambda out of range");
    const FqCtx* ctx = FqCtx::prime(p);
    const std::size_t N = 2 * r;
    // block-diagonal realization: factor i occupies rows/cols 2i, 2i+1
    std::vector<Matrix<Fq>> mats;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) {
        mats.push_back(unit(ctx, N, 2 * i, 2 * i + 1));  // e_i
        mats.push_back(unit(ctx, N, 2 * i + 1, 2 * i));  // f_i
        mats.push_back(unit(ctx, N, 2 * i, 2 * i) - unit(ctx, N, 2 * i + 1, 2 * i + 1));
        const std::string suf = std::to_string(i + 1);
        labels.push_back("e" + suf);
        labels.push_back("f" + suf);
        labels.push_back("h" + suf);
    }
    Sl2rBundle b;
    b.L = algebra_from_realization(ctx, std::move(labels), std::move(mats));

    Sl2Pims pims = make_sl2_pims(p, seed);
    const UModule& P = pims.pims[lambda];
    b.M.ctx = ctx;
    b.M.dim = P.dim;
    b.M.label = "pi_" + std::to_string(s) + "^* " + P.label;
    Matrix<Fq> zero(P.dim, P.dim, Fq(ctx, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t g = 0; g < 3; ++g)
            b.M.actions.push_back(i == s - 1 ? P.actions[g] : zero);

    Poly T = Poly::variable(ctx, 1, 0);
    for (std::size_t t = 0; t < r; ++t) {
        ChartParam cp;
        cp.ctx = ctx;
        cp.n = 3 * r;
        cp.r = r;
        cp.d = 1;
        for (std::size_t i = 0; i < r; ++i) cp.chart.sigma.push_back(3 * i);  // e_i rows
        cp.coords.emplace_back(3 * t + 2, t, T);
        cp.coords.emplace_back(3 * t + 1, t, -(T * T));
        cp.domain_note = "coordinate line of (P^1)^r varying factor " + std::to_string(t + 1);
        b.lines.push_back(std::move(cp));
    }
    return b;
}

/// ---- V x| gl_n --------------------------------------------------------------

namespace {

RestrictedLieAlgebra semidirect_algebra(std::size_t n, std::uint32_t p) {
    const FqCtx* ctx = FqCtx::prime(p);
    const std::size_t N = n + 1;  // realization on k + V
    std::vector<Matrix<Fq>> mats;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        mats.push_back(unit(ctx, N, i + 1, 0));
        labels.push_back("v" + std::to_string(i + 1));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            mats.push_back(unit(ctx, N, a + 1, b + 1));
            labels.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
        }
    return algebra_from_realization(ctx, std::move(labels), std::move(mats));
}

using Expo = std::vector<std::uint32_t>;

/// All exponent vectors of length n and total degree d with entries <= cap,
/// in lexicographic order.
std::vector<Expo> expos_of_degree(std::size_t n, std::uint32_t d, std::uint32_t cap) {
    std::vector<Expo> out;
    Expo cur(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
        if (pos + 1 == n) {
            if (left <= cap) {
                cur[pos] = left;
                out.push_back(cur);
            }
            return;
        }
        for (std::uint32_t v = 0; v <= std::min(left, cap); ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n) rec(0, d);
    else if (d == 0) out.push_back({});
    return out;
}

/// Monomial module on the given basis: v_i acts by multiplication by x_i
/// (zero when the product leaves the basis or an exponent exceeds cap),
/// E_ab by the derivation x_a d/dx_b (zero when an exponent exceeds cap).
UModule monomial_module(const FqCtx* ctx, std::size_t n, std::uint32_t cap,
                        const std::vector<Expo>& basis, std::string label) {
    std::map<Expo, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    const std::size_t dim = basis.size();
    UModule M;
    M.ctx = ctx;
    M.dim = dim;
    M.label = std::move(label);
    Matrix<Fq> zero(dim, dim, Fq(ctx, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<Fq> act = zero;
        for (std::size_t col = 0; col < dim; ++col) {
            Expo t = basis[col];
            if (++t[i] > cap) continue;
            auto it = index.find(t);
            if (it != index.end()) act.at(it->second, col) = Fq(ctx, 1);
        }
        M.actions.push_back(std::move(act));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix<Fq> act = zero;
            for (std::size_t col = 0; col < dim; ++col) {
                const Expo& e = basis[col];
                if (e[b] == 0) continue;
                Expo t = e;
                --t[b];
                if (++t[a] > cap) continue;
                auto it = index.find(t);
                if (it != index.end())
                    act.at(it->second, col) = Fq(ctx, static_cast<std::int64_t>(e[b]));
            }
            M.actions.push_back(std::move(act));
        }
    return M;
}

/// Sorted index subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

UModule exterior_module(const FqCtx* ctx, std::size_t n, std::size_t r, std::string label) {
    std::vector<std::vector<std::size_t>> basis = subsets_of_size(n, r);
    const std::size_t lower = basis.size();
    for (auto& s : subsets_of_size(n, r + 1)) basis.push_back(std::move(s));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    const std::size_t dim = basis.size();
    UModule M;
    M.ctx = ctx;
    M.dim = dim;
    M.label = std::move(label);
    Matrix<Fq> zero(dim, dim, Fq(ctx, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<Fq> act = zero;
        for (std::size_t col = 0; col < lower; ++col) {  // Lambda^{r+2} is truncated away
            const auto& S = basis[col];
            if (std::find(S.begin(), S.end(), i) != S.end()) continue;
            std::vector<std::size_t> t = S;
            auto pos = std::lower_bound(t.begin(), t.end(), i);
            std::int64_t sign = (pos - t.begin()) % 2 ? -1 : 1;
            t.insert(pos, i);
            act.at(index.at(t), col) = Fq(ctx, sign);
        }
        M.actions.push_back(std::move(act));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix<Fq> act = zero;
            for (std::size_t col = 0; col < dim; ++col) {
                const auto& S = basis[col];
                auto itb = std::find(S.begin(), S.end(), b);
                if (itb == S.end()) continue;
                if (a == b) {
                    act.at(col, col) = Fq(ctx, 1);
                    continue;
                }
                if (std::find(S.begin(), S.end(), a) != S.end()) continue;
                std::vector<std::size_t> t = S;
                std::size_t from = static_cast<std::size_t>(itb - S.begin());
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(from));
                auto pos = std::lower_bound(t.begin(), t.end(), a);
                std::size_t to = static_cast<std::size_t>(pos - t.begin());
                t.insert(pos, a);
                std::int64_t sign = (from + to) % 2 ? -1 : 1;
                act.at(index.at(t), col) = Fq(ctx, sign);
            }
            M.actions.push_back(std::move(act));
        }
    return M;
}

}  // namespace

SemidirectBundle make_semidirect(std::size_t n, std::uint32_t p, SemidirectKind kind,
                                 std::size_t param) {
    require_odd_prime(p, "make_semidirect");
    if (n < 2) throw std::invalid_argument("make_semidirect: need n >= 2");
    SemidirectBundle b;
    b.L = semidirect_algebra(n, p);
    const FqCtx* ctx = b.L.ctx;
    switch (kind) {
        case SemidirectKind::N: {
            if (param < 1 || param > p - 1)
                throw std::invalid_argument("make_semidirect: N needs 1 <= j <= p-1");
            std::vector<Expo> basis;
            for (std::uint32_t d = 0; d <= param; ++d)
                for (auto& e : expos_of_degree(n, d, d)) basis.push_back(std::move(e));
            b.M = monomial_module(ctx, n, p - 1, basis,
                                  "S*(V)/S^{>=" + std::to_string(param + 1) + "}");
            break;
        }
        case SemidirectKind::M_trunc: {
            if (param < 1 || param + 1 > n)
                throw std::invalid_argument("make_semidirect: M needs 1 <= r <= n-1");
            b.M = exterior_module(ctx, n, param,
                                  "Lambda^" + std::to_string(param) + "+Lambda^" +
                                      std::to_string(param + 1));
            break;
        }
        case SemidirectKind::R: {
            if (param < 1 || param + 1 > n)
                throw std::invalid_argument("make_semidirect: R needs 1 <= r <= n-1");
            const std::uint32_t d0 = static_cast<std::uint32_t>(param) * (p - 1);
            std::vector<Expo> basis;
            for (std::uint32_t d = d0; d <= d0 + 1; ++d)
                for (auto& e : expos_of_degree(n, d, p - 1)) basis.push_back(std::move(e));
            b.M = monomial_module(ctx, n, p - 1, basis,
                                  "degrees {" + std::to_string(d0) + "," + std::to_string(d0 + 1) +
                                      "} of k[V]/(v^p)");
            break;
        }
    }
    b.line.ctx = ctx;
    b.line.n = b.L.n;
    b.line.r = 1;
    b.line.d = 1;
    b.line.chart.sigma = {0};  // row of v_1
    b.line.coords.emplace_back(1, 0, Poly::variable(ctx, 1, 0));
    b.line.domain_note = "line span(v_1 + T v_2) in Grass(1, V) inside E(1, g)";
    return b;
}

/// ---- cominuscule -----------------------------------------------------------

std::vector<CominusculeRow> cominuscule_table() {
    return {
        {"A_n", "alpha_r (any r)", "r(n+1-r)", true},
        {"B_n", "alpha_1", "2n-1", true},
        {"C_n", "alpha_n", "n(n+1)/2", true},
        {"D_n", "alpha_1", "2n-2", false},
        {"D_n", "alpha_{n-1}, alpha_n", "n(n-1)/2", false},
        {"E_6", "alpha_1, alpha_6", "16", false},
        {"E_7", "alpha_7", "27", false},
    };
}

RestrictedLieAlgebra so_odd(std::size_t n, std::uint32_t p) {
    require_odd_prime(p, "so_odd");
    if (n < 1) throw std::invalid_argument("so_odd: need n >= 1");
    const FqCtx* ctx = FqCtx::prime(p);
    const std::size_t N = 2 * n + 1;
    // S e_j = e_{sig(j)} for the form [[1,0,0],[0,0,I],[0,I,0]]
    auto sig = [n](std::size_t j) { return j == 0 ? 0 : (j <= n ? j + n : j - n); };
    // condition X^T S + S X = 0: X_{sig(j), i} + X_{sig(i), j} = 0 for all i, j
    Matrix<Fq> cond(N * N, N * N, Fq(ctx, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            cond.at(i * N + j, sig(j) * N + i) += Fq(ctx, 1);
            cond.at(i * N + j, sig(i) * N + j) += Fq(ctx, 1);
        }
    auto sol = rank_kernel_image(cond);
    std::vector<Matrix<Fq>> mats;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < sol.kernel_basis.cols(); ++k) {
        Matrix<Fq> X(N, N, Fq(ctx, 0));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) X.at(i, j) = sol.kernel_basis.at(i * N + j, k);
        mats.push_back(std::move(X));
        labels.push_back("so" + std::to_string(k + 1));
    }
    if (mats.size() != n * (2 * n + 1))
        throw std::logic_error("so_odd: unexpected solution-space dimension");
    return algebra_from_realization(ctx, std::move(labels), std::move(mats));
}

EPoint so_odd_nilradical(const RestrictedLieAlgebra& L, std::size_t n) {
    const std::size_t N = 2 * n + 1;
    if (!L.has_realization() || L.realization[0].rows() != N)
        throw std::invalid_argument("so_odd_nilradical: algebra is not a realized so_{2n+1}");
    // u = { X : X(l) = 0, X(l-perp) <= l, X(V) <= l-perp } for the isotropic
    // line l = k e_1; here l-perp = { v : v_{n+1} = 0 }
    const std::size_t iso = 1, dual = n + 1;
    std::vector<std::vector<Fq>> rows;
    auto row_of = [&](std::size_t out_coord, std::size_t in_coord) {
        std::vector<Fq> r;
        for (const auto& B : L.realization) r.push_back(B.at(out_coord, in_coord));
        return r;
    };
    for (std::size_t j = 0; j < N; ++j) rows.push_back(row_of(j, iso));  // X e_iso = 0
    for (std::size_t k = 0; k < N; ++k) {
        rows.push_back(row_of(dual, k));  // X(V) <= l-perp
        if (k == dual) continue;
        for (std::size_t j = 0; j < N; ++j)  // X(l-perp) <= l
            if (j != iso) rows.push_back(row_of(j, k));
    }
    Matrix<Fq> C(rows.size(), L.n, Fq(L.ctx, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < L.n; ++j) C.at(i, j) = rows[i][j];
    auto sol = rank_kernel_image(C);
    EPoint u{sol.kernel_basis};
    if (u.r() != 2 * n - 1 || !is_elementary(L, u))
        throw std::logic_error("so_odd_nilradical: did not produce an elementary point of dim 2n-1");
    return u;
}

CominusculeCheck cominuscule_check(const RestrictedLieAlgebra& L, const EPoint& u) {
    CominusculeCheck out;
    const std::size_t n = L.n, r = u.r();
    Matrix<Fq> U = span_canonical(u.basis);
    out.dim_u = U.cols();
    auto bracket_span = [&](const Matrix<Fq>& right) {
        Matrix<Fq> cols(n, r * right.cols(), Fq(L.ctx, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < right.cols(); ++j) {
                Matrix<Fq> w = L.bracket(u.basis.col(i), right.col(j));
                for (std::size_t k = 0; k < n; ++k) cols.at(k, i * right.cols() + j) = w.at(k, 0);
            }
        return span_canonical(cols);
    };
    Matrix<Fq> UG = bracket_span(Matrix<Fq>::identity(n, Fq(L.ctx, 0)));
    out.dim_u_g = UG.cols();
    Matrix<Fq> UUG = bracket_span(UG);
    out.dim_u_u_g = UUG.cols();
    // normalizer N_g(u): x with [x, u_i] in span(u) for all i; conditions are
    // K^T ad(u_i) x = 0 where the columns of K cut out span(u)
    Matrix<Fq> K = rank_kernel_image(U.transpose()).kernel_basis;
    Matrix<Fq> norm_cond(0, n, Fq(L.ctx, 0));
    Matrix<Fq> cent_cond(0, n, Fq(L.ctx, 0));
    for (std::size_t i = 0; i < r; ++i) {
        Matrix<Fq> ad = L.ad(u.basis.col(i));
        norm_cond = norm_cond.rows() ? vstack(norm_cond, K.transpose() * ad) : K.transpose() * ad;
        cent_cond = cent_cond.rows() ? vstack(cent_cond, ad) : ad;
    }
    Matrix<Fq> P = rank_kernel_image(norm_cond).kernel_basis;
    out.dim_p = P.cols();
    out.dim_centralizer = n - rank_kernel_image(cent_cond).rank;
    Matrix<Fq> UP = bracket_span(P);
    out.identities_hold =
        UP == U && UUG == U && span_canonical(P) == UG;  // [u,p]=u, [u,[u,g]]=u, p=[u,g]
    return out;
}

/// ---- catalog surface --------------------------------------------------------

ChartParam constant_chart(const RestrictedLieAlgebra& L, const EPoint& eps) {
    auto [chart, norm] = chart_of_point(eps);
    ChartParam cp;
    cp.ctx = L.ctx;
    cp.n = L.n;
    cp.r = eps.r();
    cp.d = 0;
    cp.chart = chart;
    for (std::size_t i = 0; i < cp.n; ++i) {
        if (std::find(chart.sigma.begin(), chart.sigma.end(), i) != chart.sigma.end()) continue;
        for (std::size_t j = 0; j < cp.r; ++j)
            if (!norm.basis.at(i, j).is_zero())
                cp.coords.emplace_back(i, j, Poly::constant(L.ctx, 0, norm.basis.at(i, j)));
    }
    cp.domain_note = "constant locus (single elementary point)";
    return cp;
}

std::vector<CatalogEntry> catalog_list() {
    return {
        {"gl3-defining", 5, "gl_3 with the defining module; constant locus at u_{1,2}",
         "p odd >= 3"},
        {"gl4-defining", 7, "gl_4 with the defining module; constant locus at u_{2,2}",
         "p odd >= 3"},
        {"sl2-defining", 3, "sl_2 with the defining module; nilpotent-cone line locus",
         "p odd >= 3, p not dividing 2"},
        {"sp4-defining", 7,
         "sp_4 (form [[0,I],[-I,0]]) with the defining module; constant locus at the "
         "cominuscule nilradical",
         "p odd >= 3"},
        {"heisenberg", 5, "Heisenberg u_3 with the adjoint module; P^1 locus E(2, u_3)",
         "p odd >= 3"},
        {"sl2-pim0", 3, "sl_2 projective cover P_0 (dim 6); nilpotent-cone line locus", "p = 3"},
        {"sl2-pim1", 3, "sl_2 projective cover P_1 (dim 6); nilpotent-cone line locus", "p = 3"},
        {"sl2-pim2", 3, "sl_2 Steinberg P_2 (dim 3); nilpotent-cone line locus", "p = 3"},
        {"semidirect-n2-N2", 5,
         "V x| gl_2 with S*(V)/S^{>=3}; line span(v_1 + T v_2) in Grass(1, V)", "p odd >= 3"},
        {"semidirect-n3-M1", 5,
         "V x| gl_3 with Lambda^1 + Lambda^2; line span(v_1 + T v_2) in Grass(1, V)",
         "p odd >= 3"},
        {"semidirect-n2-R1", 3,
         "V x| gl_2 with degrees {p-1, p} of k[V]/(v^p); line span(v_1 + T v_2)", "p odd >= 3"},
        {"so5-adjoint", 7,
         "so_5 with the adjoint module; constant locus at the P_{alpha_1} nilradical",
         "p odd >= 3"},
    };
}

CatalogBundle catalog_build(const std::string& id, std::uint64_t seed) {
    CatalogBundle b;
    if (id == "gl3-defining" || id == "gl4-defining") {
        const std::size_t n = id == "gl3-defining" ? 3 : 4;
        const std::uint32_t p = n == 3 ? 5 : 7;
        auto cb = make_classical(Family::gl, n, p);
        b.L = cb.L;
        b.M = cb.defining;
        b.locus = constant_chart(b.L, nilradical_of_parabolic(Family::gl, n, n / 2, p));
    } else if (id == "sl2-defining") {
        auto cb = make_classical(Family::sl, 2, 3);
        b.L = cb.L;
        b.M = cb.defining;
        b.locus = nilcone_chart(3);
    } else if (id == "sp4-defining") {
        auto cb = make_classical(Family::sp, 2, 7);
        b.L = cb.L;
        b.M = cb.defining;
        b.locus = constant_chart(b.L, nilradical_of_parabolic(Family::sp, 2, 0, 7));
    } else if (id == "heisenberg") {
        auto hb = make_heisenberg(5);
        b.L = hb.L;
        b.M = hb.adjoint;
        b.locus = hb.line;
    } else if (id == "sl2-pim0" || id == "sl2-pim1" || id == "sl2-pim2") {
        auto pims = make_sl2_pims(3, seed);
        b.L = pims.L;
        b.M = pims.pims[static_cast<std::size_t>(id.back() - '0')];
        b.locus = nilcone_chart(3);
    } else if (id == "semidirect-n2-N2") {
        auto sb = make_semidirect(2, 5, SemidirectKind::N, 2);
        b.L = sb.L;
        b.M = sb.M;
        b.locus = sb.line;
    } else if (id == "semidirect-n3-M1") {
        auto sb = make_semidirect(3, 5, SemidirectKind::M_trunc, 1);
        b.L = sb.L;
        b.M = sb.M;
        b.locus = sb.line;
    } else if (id == "semidirect-n2-R1") {
        auto sb = make_semidirect(2, 3, SemidirectKind::R, 1);
        b.L = sb.L;
        b.M = sb.M;
        b.locus = sb.line;
    } else if (id == "so5-adjoint") {
        b.L = so_odd(2, 7);
        b.M = adjoint_module(b.L);
        b.locus = constant_chart(b.L, so_odd_nilradical(b.L, 2));
    } else {
        throw std::invalid_argument("catalog_build: unknown id '" + id + "'");
    }
    return b;
}

}  // namespace evs
