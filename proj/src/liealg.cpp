#include "evs/liealg.hpp"

#include <random>
#include <set>

namespace evs {

namespace {

Matrix<Fq> vec(const Matrix<Fq>& m) {
    Matrix<Fq> v(m.rows() * m.cols(), 1, m.proto());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
    return v;
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

std::string span_key(const Matrix<Fq>& m) {
    Matrix<Fq> c = span_canonical(m);
    std::string s = std::to_string(c.cols()) + ";";
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) s += c.at(i, j).str() + ",";
    return s;
}

}  // namespace

std::string ValidationReport::summary() const {
    if (pass()) return "pass";
    std::string s = "fail:";
    for (const auto& f : failures) s += "\n  " + f;
    return s;
}

Matrix<Fq> RestrictedLieAlgebra::basis_element(std::size_t i) const {
    Matrix<Fq> v = zero_element();
    v.at(i, 0) = Fq(ctx, 1);
    return v;
}

Matrix<Fq> RestrictedLieAlgebra::ad(const Matrix<Fq>& v) const {
    Matrix<Fq> a(n, n, Fq(ctx, 0));
    for (std::size_t i = 0; i < n; ++i)
        if (!v.at(i, 0).is_zero()) a = a + adb[i] * v.at(i, 0);
    return a;
}

Matrix<Fq> RestrictedLieAlgebra::bracket(const Matrix<Fq>& v, const Matrix<Fq>& w) const {
    return ad(v) * w;
}

Matrix<Fq> RestrictedLieAlgebra::realize(const Matrix<Fq>& v) const {
    if (!has_realization()) throw std::logic_error("RestrictedLieAlgebra: no matrix realization");
    Matrix<Fq> r(realization[0].rows(), realization[0].cols(), Fq(ctx, 0));
    for (std::size_t i = 0; i < n; ++i)
        if (!v.at(i, 0).is_zero()) r = r + realization[i] * v.at(i, 0);
    return r;
}

Matrix<Fq> RestrictedLieAlgebra::p_power(const Matrix<Fq>& v) const {
    if (has_realization()) {
        Matrix<Fq> X = mat_pow(realize(v), ctx->p);
        Matrix<Fq> B(realization[0].rows() * realization[0].cols(), n, Fq(ctx, 0));
        for (std::size_t i = 0; i < n; ++i) {
            Matrix<Fq> col = vec(realization[i]);
            for (std::size_t k = 0; k < B.rows(); ++k) B.at(k, i) = col.at(k, 0);
        }
        auto sol = solve_columns(B, vec(X));
        if (!sol)
            throw std::logic_error("p_power: matrix p-th power left the realized span");
        return *sol;
    }
    // p-semilinear candidate, valid on commuting spans; cross-check via ad
    Matrix<Fq> w = zero_element();
    for (std::size_t i = 0; i < n; ++i)
        if (!v.at(i, 0).is_zero()) w = w + p_pow[i] * v.at(i, 0).pow(ctx->p);
    if (!(ad(w) == mat_pow(ad(v), ctx->p)))
        throw std::domain_error(
            "p_power: semilinear candidate inconsistent with ad(v)^p "
            "(element lies outside a commuting span; supply a matrix realization)");
    return w;
}

ValidationReport validate_algebra(const RestrictedLieAlgebra& L) {
    ValidationReport rep;
    auto idx = [&](std::size_t i) {
        return i < L.labels.size() ? L.labels[i] : "x" + std::to_string(i + 1);
    };
    // antisymmetry
    for (std::size_t i = 0; i < L.n && rep.failures.size() < 8; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Matrix<Fq> a = L.adb[i].col(j), b = L.adb[j].col(i);
            if (!(a == -b)) {
                rep.failures.push_back("antisymmetry fails at (" + idx(i) + ", " + idx(j) + ")");
                break;
            }
        }
    // Jacobi
    for (std::size_t i = 0; i < L.n && rep.failures.size() < 8; ++i)
        for (std::size_t j = i + 1; j < L.n; ++j)
            for (std::size_t k = j + 1; k < L.n; ++k) {
                Matrix<Fq> s = L.bracket(L.basis_element(i), L.adb[j].col(k)) +
                               L.bracket(L.basis_element(j), L.adb[k].col(i)) +
                               L.bracket(L.basis_element(k), L.adb[i].col(j));
                if (!s.is_zero()) {
                    rep.failures.push_back("Jacobi fails at (" + idx(i) + ", " + idx(j) + ", " +
                                           idx(k) + ")");
                    j = k = L.n;
                }
            }
    // restrictedness: ad(x_i^{[p]}) = ad(x_i)^p
    for (std::size_t i = 0; i < L.n; ++i) {
        if (!(L.ad(L.p_pow[i]) == mat_pow(L.adb[i], L.p())))
            rep.failures.push_back("ad(x^[p]) != ad(x)^p at " + idx(i));
    }
    if (L.has_realization()) {
        if (L.realization.size() != L.n)
            rep.failures.push_back("realization size mismatch");
        else {
            for (std::size_t i = 0; i < L.n; ++i) {
                for (std::size_t j = 0; j < L.n; ++j) {
                    Matrix<Fq> comm =
                        L.realization[i] * L.realization[j] - L.realization[j] * L.realization[i];
                    if (!(comm == L.realize(L.adb[i].col(j)))) {
                        rep.failures.push_back("realization bracket mismatch at (" + idx(i) + ", " +
                                               idx(j) + ")");
                        break;
                    }
                }
                if (!(mat_pow(L.realization[i], L.p()) == L.realize(L.p_pow[i])))
                    rep.failures.push_back("realization p-power mismatch at " + idx(i));
            }
        }
    }
    return rep;
}

bool is_elementary(const RestrictedLieAlgebra& L, const EPoint& eps) {
    const std::size_t r = eps.r();
    if (rank_kernel_image(eps.basis).rank != r)
        throw std::invalid_argument("is_elementary: rank-deficient basis");
    std::vector<Matrix<Fq>> cols;
    for (std::size_t j = 0; j < r; ++j) cols.push_back(eps.basis.col(j));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (!L.bracket(cols[a], cols[b]).is_zero()) return false;
    for (const auto& v : cols)
        if (!L.p_power(v).is_zero()) return false;
    return true;
}

RestrictedLieAlgebra algebra_from_realization(const FqCtx* ctx, std::vector<std::string> labels,
                                              std::vector<Matrix<Fq>> mats) {
    RestrictedLieAlgebra L;
    L.ctx = ctx;
    L.n = mats.size();
    L.labels = std::move(labels);
    const std::size_t N = mats[0].rows();
    Matrix<Fq> B(N * N, L.n, Fq(ctx, 0));
    for (std::size_t i = 0; i < L.n; ++i) {
        Matrix<Fq> col = vec(mats[i]);
        for (std::size_t k = 0; k < N * N; ++k) B.at(k, i) = col.at(k, 0);
    }
    if (rank_kernel_image(B).rank != L.n)
        throw std::invalid_argument("algebra_from_realization: matrices are dependent");
    auto coords = [&](const Matrix<Fq>& X) {
        auto sol = solve_columns(B, vec(X));
        if (!sol) throw std::invalid_argument("algebra_from_realization: span not closed");
        return *sol;
    };
    for (std::size_t i = 0; i < L.n; ++i) {
        Matrix<Fq> a(L.n, L.n, Fq(ctx, 0));
        for (std::size_t j = 0; j < L.n; ++j) {
            Matrix<Fq> c = coords(mats[i] * mats[j] - mats[j] * mats[i]);
            for (std::size_t k = 0; k < L.n; ++k) a.at(k, j) = c.at(k, 0);
        }
        L.adb.push_back(std::move(a));
        L.p_pow.push_back(coords(mat_pow(mats[i], ctx->p)));
    }
    L.realization = std::move(mats);
    return L;
}

std::size_t classical_defining_dim(Family f, std::size_t n) {
    return f == Family::sp ? 2 * n : n;
}

std::vector<Matrix<Fq>> classical_defining_actions(Family f, std::size_t n, std::uint32_t p) {
    const FqCtx* ctx = FqCtx::prime(p);
    const Fq z(ctx, 0), one(ctx, 1);
    std::vector<Matrix<Fq>> mats;
    auto E = [&](std::size_t N, std::size_t a, std::size_t b) {
        Matrix<Fq> m(N, N, z);
        m.at(a, b) = one;
        return m;
    };
    switch (f) {
        case Family::gl:
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) mats.push_back(E(n, a, b));
            break;
        case Family::sl:
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b) mats.push_back(E(n, a, b));
            for (std::size_t a = 0; a + 1 < n; ++a)
                mats.push_back(E(n, a, a) - E(n, a + 1, a + 1));
            break;
        case Family::sp: {
            const std::size_t N = 2 * n;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    mats.push_back(E(N, a, b) - E(N, n + b, n + a));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    mats.push_back(i == j ? E(N, i, n + i) : E(N, i, n + j) + E(N, j, n + i));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    mats.push_back(i == j ? E(N, n + i, i) : E(N, n + i, j) + E(N, n + j, i));
            break;
        }
    }
    return mats;
}

RestrictedLieAlgebra classical_algebra(Family f, std::size_t n, std::uint32_t p) {
    const FqCtx* ctx = FqCtx::prime(p);
    std::vector<std::string> labels;
    auto lab = [](const std::string& pre, std::size_t a, std::size_t b) {
        return pre + std::to_string(a + 1) + "_" + std::to_string(b + 1);
    };
    switch (f) {
        case Family::gl:
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) labels.push_back(lab("E", a, b));
            break;
        case Family::sl:
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b) labels.push_back(lab("E", a, b));
            for (std::size_t a = 0; a + 1 < n; ++a) labels.push_back("h" + std::to_string(a + 1));
            break;
        case Family::sp:
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) labels.push_back(lab("a", a, b));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) labels.push_back(lab("b", i, j));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) labels.push_back(lab("c", i, j));
            break;
    }
    return algebra_from_realization(ctx, std::move(labels), classical_defining_actions(f, n, p));
}

EPoint nilradical_of_parabolic(Family f, std::size_t n, std::size_t r, std::uint32_t p) {
    const FqCtx* ctx = FqCtx::prime(p);
    std::vector<std::size_t> idx;
    std::size_t dim = 0;
    switch (f) {
        case Family::gl:
            if (r == 0 || r >= n) throw std::invalid_argument("nilradical_of_parabolic: bad r");
            dim = n * n;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = r; b < n; ++b) idx.push_back(a * n + b);
            break;
        case Family::sl: {
            if (r == 0 || r >= n) throw std::invalid_argument("nilradical_of_parabolic: bad r");
            dim = n * n - 1;
            std::size_t off = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    if (a == b) continue;
                    if (a < r && b >= r) idx.push_back(off);
                    ++off;
                }
            break;
        }
        case Family::sp:
            dim = 2 * n * n + n;
            for (std::size_t k = 0; k < n * (n + 1) / 2; ++k) idx.push_back(n * n + k);
            break;
    }
    EPoint e;
    e.basis = Matrix<Fq>(dim, idx.size(), Fq(ctx, 0));
    for (std::size_t j = 0; j < idx.size(); ++j) e.basis.at(idx[j], j) = Fq(ctx, 1);
    return e;
}

Matrix<Fq> exp_ad(const RestrictedLieAlgebra& L, const Matrix<Fq>& x) {
    Matrix<Fq> a = L.ad(x);
    if (!mat_pow(a, L.p()).is_zero())
        throw std::invalid_argument("exp_ad: (ad x)^p != 0");
    Matrix<Fq> term = Matrix<Fq>::identity(L.n, a.proto());
    Matrix<Fq> sum = term;
    Fq fact(L.ctx, 1);
    for (std::uint32_t i = 1; i < L.p(); ++i) {
        term = term * a;
        fact *= Fq(L.ctx, i);
        sum = sum + term * fact.inverse();
    }
    return sum;
}

std::vector<EPoint> adjoint_orbit_points(const RestrictedLieAlgebra& L, const EPoint& eps,
                                         const std::vector<Matrix<Fq>>& generators,
                                         std::size_t count, std::uint64_t seed) {
    for (const auto& g : generators)
        if (!mat_pow(L.ad(g), L.p()).is_zero())
            throw std::invalid_argument("adjoint_orbit_points: generator with (ad x)^p != 0");
    std::mt19937_64 rng(seed);
    std::vector<EPoint> out;
    std::set<std::string> seen;
    std::size_t budget = 60 * count + 10;
    for (std::size_t t = 0; t < budget && out.size() < count; ++t) {
        Matrix<Fq> b = eps.basis;
        std::size_t rounds = 1 + (generators.empty() ? 0 : rng() % 3);
        for (std::size_t rd = 0; rd < rounds; ++rd)
            for (const auto& g : generators) {
                Fq c(L.ctx, static_cast<std::int64_t>(rng() % L.p()));
                if (c.is_zero()) continue;
                b = exp_ad(L, g * c) * b;
            }
        std::string key = span_key(b);
        if (!seen.insert(key).second) continue;
        EPoint q{b};
        if (!is_elementary(L, q))
            throw std::logic_error("adjoint_orbit_points: orbit left E(r,g)");
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace evs
