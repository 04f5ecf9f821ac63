#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evs/modrep.hpp"

using namespace evs;

namespace {

UModule defining_module(const RestrictedLieAlgebra& L, Family f, std::size_t n) {
    UModule M;
    M.ctx = L.ctx;
    M.dim = classical_defining_dim(f, n);
    M.label = "defining";
    M.actions = classical_defining_actions(f, n, L.p());
    return M;
}

RestrictedLieAlgebra heisenberg_sc(std::uint32_t p) {
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

Matrix<Fq> rnd_invertible(const FqCtx* ctx, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Matrix<Fq> q(n, n, Fq(ctx, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                q.at(i, j) = Fq(ctx, static_cast<std::int64_t>(rng() % ctx->p));
        if (rank_kernel_image(q).rank == n) return q;
    }
}

}  // namespace

TEST_CASE("validate_module: defining reps pass, a transposed action fails") {
    auto L = classical_algebra(Family::gl, 3, 5);
    auto M = defining_module(L, Family::gl, 3);
    CHECK(validate_module(L, M).pass());
    auto bad = M;
    bad.actions[1] = bad.actions[1].transpose();
    CHECK(!validate_module(L, bad).pass());

    auto Lh = heisenberg_sc(5);
    CHECK(validate_module(Lh, adjoint_module(Lh)).pass());
}

TEST_CASE("rad_j / soc_j: gl_3 defining rep at u_{1,2}") {
    auto L = classical_algebra(Family::gl, 3, 5);
    auto M = defining_module(L, Family::gl, 3);
    auto e = nilradical_of_parabolic(Family::gl, 3, 1, 5);
    CHECK(rad_j(M, e, 1).cols() == 1);  // span e_1
    CHECK(rad_j(M, e, 2).cols() == 0);
    // common kernel of E_12, E_13 on k^3 is span(e_1)
    CHECK(soc_j(M, e, 1).cols() == 1);
    CHECK_THROWS(rad_j(M, e, 0));
    CHECK_THROWS(rad_j(M, e, (5 - 1) * 2 + 1));
}

TEST_CASE("rad_j / soc_j: sp_4 defining rep at the nilradical") {
    auto L = classical_algebra(Family::sp, 2, 7);
    auto M = defining_module(L, Family::sp, 2);
    CHECK(validate_module(L, M).pass());
    auto e = nilradical_of_parabolic(Family::sp, 2, 0, 7);
    CHECK(rad_j(M, e, 1).cols() == 2);
    CHECK(soc_j(M, e, 1).cols() == 2);
    CHECK(rad_j(M, e, 2).cols() == 0);
    // Rad = Soc = W, the Lagrangian spanned by e_1, e_2
    auto r = rad_j(M, e, 1);
    auto s = soc_j(M, e, 1);
    CHECK(span_canonical(r) == span_canonical(s));
}

TEST_CASE("soc_1 of the u_3 adjoint at a maximal plane is the plane itself") {
    auto L = heisenberg_sc(5);
    auto M = adjoint_module(L);
    EPoint e;
    e.basis = Matrix<Fq>(3, 2, Fq(L.ctx, 0));
    e.basis.at(2, 0) = Fq(L.ctx, 1);
    e.basis.at(0, 1) = Fq(L.ctx, 1);
    auto s = soc_j(M, e, 1);
    CHECK(s.cols() == 2);
    CHECK(span_canonical(s) == span_canonical(e.basis));
}

TEST_CASE("rad/soc basis-change invariance and chain conditions") {
    auto L = classical_algebra(Family::gl, 4, 5);
    auto M = defining_module(L, Family::gl, 4);
    auto e = nilradical_of_parabolic(Family::gl, 4, 2, 5);
    std::mt19937_64 rng(77);
    for (int t = 0; t < 10; ++t) {
        EPoint e2{e.basis * rnd_invertible(L.ctx, e.r(), rng)};
        for (std::size_t j = 1; j <= 3; ++j) {
            CHECK(span_canonical(rad_j(M, e, j)) == span_canonical(rad_j(M, e2, j)));
            CHECK(span_canonical(soc_j(M, e, j)) == span_canonical(soc_j(M, e2, j)));
        }
    }
    auto T = tensor(M, M);
    for (std::size_t j = 1; j + 1 <= 4; ++j) {
        auto rj = rad_j(T, e, j), rj1 = rad_j(T, e, j + 1);
        CHECK(rank_kernel_image(hstack(rj, rj1)).rank == rj.cols());  // rad_{j+1} subset rad_j
        auto sj = soc_j(T, e, j), sj1 = soc_j(T, e, j + 1);
        CHECK(rank_kernel_image(hstack(sj1, sj)).rank == sj1.cols());  // soc_j subset soc_{j+1}
    }
}

TEST_CASE("jordan_type examples and r=1 rank identity") {
    auto L = classical_algebra(Family::gl, 2, 5);
    auto M = defining_module(L, Family::gl, 2);
    Matrix<Fq> v = L.zero_element();
    v.at(1, 0) = Fq(L.ctx, 1);  // E_12
    auto t = jordan_type(M, v);
    CHECK(t.parts == std::vector<std::size_t>{2});
    CHECK(t.str() == "[2]");

    auto Z = tensor(M, M);
    Matrix<Fq> zero = L.zero_element();
    auto tz = jordan_type(Z, zero);
    CHECK(tz.parts == std::vector<std::size_t>(4, 1));

    // r=1: dim rad_j = rank rho(v)^j, reconstructed from the partition
    EPoint e1;
    e1.basis = v;
    for (std::size_t j = 1; j <= 4; ++j) {
        std::size_t from_parts = 0;
        for (auto part : t.parts) from_parts += part > j ? part - j : 0;
        CHECK(rad_j(M, e1, j).cols() == from_parts);
    }

    Matrix<Fq> h = L.zero_element();
    h.at(0, 0) = Fq(L.ctx, 1);
    CHECK_THROWS(jordan_type(M, h));  // E_11 is not p-nilpotent on V
}

TEST_CASE("dual, tensor, sym, ext pass validation; dual is involutive") {
    auto L = classical_algebra(Family::gl, 3, 5);
    auto M = defining_module(L, Family::gl, 3);
    auto D = dual(M);
    CHECK(validate_module(L, D).pass());
    auto DD = dual(D);
    for (std::size_t i = 0; i < M.actions.size(); ++i) CHECK(DD.actions[i] == M.actions[i]);
    CHECK(validate_module(L, tensor(M, M)).pass());
    CHECK(validate_module(L, sym_power(M, 2)).pass());
    CHECK(validate_module(L, ext_power(M, 2)).pass());
    CHECK(sym_power(M, 2).dim == 6);
    CHECK(ext_power(M, 2).dim == 3);
    CHECK(ext_power(M, 3).dim == 1);
}

TEST_CASE("sym_power weights: E_11 eigenvalues 2,1,0 on S^2 of defining gl_2") {
    auto L = classical_algebra(Family::gl, 2, 5);
    auto M = defining_module(L, Family::gl, 2);
    auto S = sym_power(M, 2);
    REQUIRE(S.dim == 3);
    // basis order: e1e1, e1e2, e2e2; E_11 is basis index 0 of gl_2
    const auto& A = S.actions[0];
    CHECK(A.at(0, 0).to_int() == 2);
    CHECK(A.at(1, 1).to_int() == 1);
    CHECK(A.at(2, 2).to_int() == 0);
}

TEST_CASE("ext_power fiber dim: Rad^2(Lambda^2 V) at u_{2,2} in gl_4") {
    auto L = classical_algebra(Family::gl, 4, 7);
    auto M = defining_module(L, Family::gl, 4);
    auto e = nilradical_of_parabolic(Family::gl, 4, 2, 7);
    auto X = ext_power(M, 2);
    CHECK(rad_j(X, e, 2).cols() == 1);  // Lambda^2 of the rank-2 fiber
}

TEST_CASE("duality_check examples and randomized suite") {
    auto L = classical_algebra(Family::gl, 3, 5);
    auto M = defining_module(L, Family::gl, 3);
    auto e = nilradical_of_parabolic(Family::gl, 3, 1, 5);
    CHECK(soc_j(dual(M), e, 1).cols() == 2);
    CHECK(rad_j(M, e, 1).cols() == 1);
    CHECK(duality_check(M, e, 1));

    auto Lh = heisenberg_sc(5);
    auto Mh = adjoint_module(Lh);
    EPoint eh;
    eh.basis = Matrix<Fq>(3, 2, Fq(Lh.ctx, 0));
    eh.basis.at(2, 0) = Fq(Lh.ctx, 1);
    eh.basis.at(0, 1) = Fq(Lh.ctx, 1);
    CHECK(duality_check(Mh, eh, 1));

    std::mt19937_64 rng(123);
    std::vector<UModule> mods{M, dual(M), tensor(M, M), sym_power(M, 2), ext_power(M, 2)};
    for (int t = 0; t < 60; ++t) {
        EPoint e2{e.basis * rnd_invertible(L.ctx, e.r(), rng)};
        const auto& Mx = mods[rng() % mods.size()];
        std::size_t j = 1 + rng() % 4;
        CHECK(duality_check(Mx, e2, j));
    }
}
