#ifndef EVS_TEST_FIXTURES_HPP
#define EVS_TEST_FIXTURES_HPP

#include <random>

#include "evs/modrep.hpp"

namespace evs::fixtures {

/// Heisenberg u_3 from bare structure constants: basis (x, y, z), [x,y] = z,
/// all p-powers zero.
inline RestrictedLieAlgebra heisenberg_sc(std::uint32_t p) {
    const FqCtx* ctx = FqCtx::prime(p);
    RestrictedLieAlgebra L;
    L.ctx = ctx;
    L.n = 3;
    L.labels = {"x", "y", "z"};
    Fq z0(ctx, 0), one(ctx, 1);
    for (int i = 0; i < 3; ++i) {
        L.adb.emplace_back(3, 3, z0);
        L.p_pow.emplace_back(3, 1, z0);
    }
    L.adb[0].at(2, 1) = one;
    L.adb[1].at(2, 0) = -one;
    return L;
}

inline UModule defining_module(const RestrictedLieAlgebra& L, Family f, std::size_t n) {
    UModule M;
    M.ctx = L.ctx;
    M.dim = classical_defining_dim(f, n);
    M.label = "defining";
    M.actions = classical_defining_actions(f, n, L.p());
    return M;
}

/// The two-dimensional abelian algebra g_a + g_a with the four-dimensional
/// module x_1 m_1 = m_4, x_2 m_1 = m_3, x_2 m_2 = m_4.
inline std::pair<RestrictedLieAlgebra, UModule> remark_fixture(std::uint32_t p) {
    const FqCtx* ctx = FqCtx::prime(p);
    RestrictedLieAlgebra L;
    L.ctx = ctx;
    L.n = 2;
    L.labels = {"x1", "x2"};
    for (int i = 0; i < 2; ++i) {
        L.adb.emplace_back(2, 2, Fq(ctx, 0));
        L.p_pow.emplace_back(2, 1, Fq(ctx, 0));
    }
    UModule M;
    M.ctx = ctx;
    M.dim = 4;
    M.label = "remark";
    M.actions.assign(2, Matrix<Fq>(4, 4, Fq(ctx, 0)));
    M.actions[0].at(3, 0) = Fq(ctx, 1);
    M.actions[1].at(2, 0) = Fq(ctx, 1);
    M.actions[1].at(3, 1) = Fq(ctx, 1);
    return {L, M};
}

inline Matrix<Fq> rnd_invertible(const FqCtx* ctx, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Matrix<Fq> q(n, n, Fq(ctx, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                q.at(i, j) = Fq(ctx, static_cast<std::int64_t>(rng() % ctx->p));
        if (rank_kernel_image(q).rank == n) return q;
    }
}

}  // namespace evs::fixtures

#endif
