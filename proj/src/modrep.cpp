#include "evs/modrep.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace evs {

namespace {

std::vector<std::vector<std::size_t>> compositions(std::size_t j, std::size_t r) {
    // all (j_1,...,j_r) with sum j, lexicographic
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(r, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
        if (pos + 1 == r) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (r) rec(0, j);
    return out;
}

// All degree-j ordered products of the specialized operators of eps.
std::vector<Matrix<Fq>> degree_products(const UModule& M, const EPoint& eps, std::size_t j) {
    const std::size_t r = eps.r();
    const std::uint32_t p = M.ctx->p;
    if (j < 1 || j > static_cast<std::size_t>(p - 1) * r)
        throw std::invalid_argument("rad_j/soc_j: j out of range");
    std::vector<Matrix<Fq>> ops;
    for (std::size_t s = 0; s < r; ++s) ops.push_back(M.action_of(eps.basis.col(s)));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (!(ops[a] * ops[b] == ops[b] * ops[a]))
                throw std::invalid_argument("rad_j/soc_j: operators do not commute (eps not elementary?)");
    // memoized powers ops[s]^e
    std::vector<std::vector<Matrix<Fq>>> pw(r);
    for (std::size_t s = 0; s < r; ++s) {
        pw[s].push_back(Matrix<Fq>::identity(M.dim, ops[s].proto()));
        for (std::size_t e = 1; e <= j; ++e) pw[s].push_back(pw[s][e - 1] * ops[s]);
    }
    std::vector<Matrix<Fq>> prods;
    for (const auto& comp : compositions(j, r)) {
        Matrix<Fq> m = Matrix<Fq>::identity(M.dim, ops[0].proto());
        for (std::size_t s = 0; s < r; ++s)
            if (comp[s]) m = m * pw[s][comp[s]];
        prods.push_back(std::move(m));
    }
    return prods;
}

}  // namespace

Matrix<Fq> UModule::action_of(const Matrix<Fq>& v) const {
    Matrix<Fq> a(dim, dim, Fq(ctx, 0));
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (!v.at(i, 0).is_zero()) a = a + actions[i] * v.at(i, 0);
    return a;
}

std::string JordanType::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

ValidationReport validate_module(const RestrictedLieAlgebra& L, const UModule& M) {
    ValidationReport rep;
    auto idx = [&](std::size_t i) {
        return i < L.labels.size() ? L.labels[i] : "x" + std::to_string(i + 1);
    };
    if (M.actions.size() != L.n) {
        rep.failures.push_back("action count != algebra dimension");
        return rep;
    }
    for (std::size_t i = 0; i < L.n && rep.failures.size() < 8; ++i)
        for (std::size_t j = i + 1; j < L.n; ++j) {
            Matrix<Fq> comm = M.actions[i] * M.actions[j] - M.actions[j] * M.actions[i];
            if (!(comm == M.action_of(L.adb[i].col(j)))) {
                rep.failures.push_back("rho([x,y]) != [rho x, rho y] at (" + idx(i) + ", " + idx(j) +
                                       ")");
                break;
            }
        }
    for (std::size_t i = 0; i < L.n; ++i) {
        Matrix<Fq> pw = Matrix<Fq>::identity(M.dim, Fq(M.ctx, 0));
        for (std::uint32_t e = 0; e < L.p(); ++e) pw = pw * M.actions[i];
        if (!(pw == M.action_of(L.p_pow[i])))
            rep.failures.push_back("rho(x^[p]) != rho(x)^p at " + idx(i));
    }
    return rep;
}

UModule adjoint_module(const RestrictedLieAlgebra& L) {
    UModule M;
    M.ctx = L.ctx;
    M.dim = L.n;
    M.label = "adjoint";
    M.actions = L.adb;
    return M;
}

Matrix<Fq> rad_j(const UModule& M, const EPoint& eps, std::size_t j) {
    auto prods = degree_products(M, eps, j);
    Matrix<Fq> h = prods[0];
    for (std::size_t i = 1; i < prods.size(); ++i) h = hstack(h, prods[i]);
    return rank_kernel_image(h).image_basis;
}

Matrix<Fq> soc_j(const UModule& M, const EPoint& eps, std::size_t j) {
    auto prods = degree_products(M, eps, j);
    Matrix<Fq> v = prods[0];
    for (std::size_t i = 1; i < prods.size(); ++i) v = vstack(v, prods[i]);
    return rank_kernel_image(v).kernel_basis;
}

JordanType jordan_type(const UModule& M, const Matrix<Fq>& v) {
    const std::uint32_t p = M.ctx->p;
    Matrix<Fq> a = M.action_of(v);
    std::vector<std::size_t> rk{M.dim};  // rank of a^0
    Matrix<Fq> pw = a;
    for (std::uint32_t e = 1; e <= p; ++e) {
        rk.push_back(rank_kernel_image(pw).rank);
        pw = pw * a;
    }
    if (rk[p] != 0) throw std::invalid_argument("jordan_type: rho(v)^p != 0");
    JordanType t;
    for (std::uint32_t s = p; s >= 1; --s) {
        // number of blocks of size exactly s
        std::size_t ge_s = rk[s - 1] - rk[s];
        std::size_t ge_s1 = s < p ? rk[s] - rk[s + 1] : 0;
        for (std::size_t c = ge_s1; c < ge_s; ++c) t.parts.push_back(s);
    }
    return t;
}

UModule dual(const UModule& M) {
    UModule D;
    D.ctx = M.ctx;
    D.dim = M.dim;
    D.label = M.label + "^#";
    for (const auto& a : M.actions) D.actions.push_back(-a.transpose());
    return D;
}

UModule tensor(const UModule& M, const UModule& N) {
    UModule T;
    T.ctx = M.ctx;
    T.dim = M.dim * N.dim;
    T.label = M.label + "(x)" + N.label;
    for (std::size_t x = 0; x < M.actions.size(); ++x) {
        Matrix<Fq> a(T.dim, T.dim, Fq(T.ctx, 0));
        const auto &A = M.actions[x], &B = N.actions[x];
        // basis e_i (x) f_j at index i*N.dim + j
        for (std::size_t i = 0; i < M.dim; ++i)
            for (std::size_t j = 0; j < N.dim; ++j) {
                for (std::size_t k = 0; k < M.dim; ++k)
                    a.at(k * N.dim + j, i * N.dim + j) += A.at(k, i);
                for (std::size_t l = 0; l < N.dim; ++l)
                    a.at(i * N.dim + l, i * N.dim + j) += B.at(l, j);
            }
        T.actions.push_back(std::move(a));
    }
    return T;
}

UModule sym_power(const UModule& M, std::size_t m) {
    // basis: nondecreasing index tuples, lexicographic
    std::vector<std::vector<std::size_t>> basis;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == m) {
            basis.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < M.dim; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = b;

    UModule S;
    S.ctx = M.ctx;
    S.dim = basis.size();
    S.label = "S^" + std::to_string(m) + "(" + M.label + ")";
    for (const auto& A : M.actions) {
        Matrix<Fq> a(S.dim, S.dim, Fq(S.ctx, 0));
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t pos = 0; pos < m; ++pos)
                for (std::size_t t = 0; t < M.dim; ++t) {
                    const Fq& c = A.at(t, basis[b][pos]);
                    if (c.is_zero()) continue;
                    auto tup = basis[b];
                    tup[pos] = t;
                    std::sort(tup.begin(), tup.end());
                    a.at(index[tup], b) += c;
                }
        S.actions.push_back(std::move(a));
    }
    return S;
}

UModule ext_power(const UModule& M, std::size_t m) {
    // basis: strictly increasing index tuples, lexicographic
    std::vector<std::vector<std::size_t>> basis;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == m) {
            basis.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < M.dim; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = b;

    UModule X;
    X.ctx = M.ctx;
    X.dim = basis.size();
    X.label = "L^" + std::to_string(m) + "(" + M.label + ")";
    for (const auto& A : M.actions) {
        Matrix<Fq> a(X.dim, X.dim, Fq(X.ctx, 0));
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t pos = 0; pos < m; ++pos)
                for (std::size_t t = 0; t < M.dim; ++t) {
                    const Fq& c = A.at(t, basis[b][pos]);
                    if (c.is_zero()) continue;
                    auto tup = basis[b];
                    tup[pos] = t;
                    // sign of sorting; zero if an index repeats
                    bool dup = false;
                    int sign = 1;
                    for (std::size_t i = 0; i + 1 < tup.size() && !dup; ++i)
                        for (std::size_t j = 0; j + 1 < tup.size() - i; ++j) {
                            if (tup[j] == tup[j + 1]) {
                                dup = true;
                                break;
                            }
                            if (tup[j] > tup[j + 1]) {
                                std::swap(tup[j], tup[j + 1]);
                                sign = -sign;
                            }
                        }
                    if (dup) continue;
                    for (std::size_t i = 0; i + 1 < tup.size(); ++i)
                        if (tup[i] == tup[i + 1]) dup = true;
                    if (dup) continue;
                    Fq sc = sign == 1 ? c : -c;
                    a.at(index[tup], b) += sc;
                }
        X.actions.push_back(std::move(a));
    }
    return X;
}

bool duality_check(const UModule& M, const EPoint& eps, std::size_t j) {
    return soc_j(dual(M), eps, j).cols() + rad_j(M, eps, j).cols() == M.dim;
}

}  // namespace evs
