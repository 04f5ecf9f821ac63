#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "evs/evariety.hpp"
#include "fixtures.hpp"

using namespace evs;
using namespace evs::fixtures;

TEST_CASE("chart_of_point: trivial chart, normalization, idempotence") {
    const FqCtx* F5 = FqCtx::prime(5);
    Matrix<Fq> b(4, 2, Fq(F5, 0));
    b.at(0, 0) = Fq(F5, 1);
    b.at(1, 1) = Fq(F5, 1);
    auto [c, np] = chart_of_point(EPoint{b});
    CHECK(c.sigma == std::vector<std::size_t>{0, 1});
    CHECK(np.basis == b);

    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        Matrix<Fq> q = rnd_invertible(F5, 2, rng);
        auto [c2, np2] = chart_of_point(EPoint{b * q});
        CHECK(c2.sigma == c.sigma);
        CHECK(np2.basis == np.basis);
        auto [c3, np3] = chart_of_point(np2);
        CHECK(np3.basis == np2.basis);
    }
}

TEST_CASE("chart_of_point: u_3 span(z, x+2y) lands in chart {1,3}") {
    const FqCtx* F5 = FqCtx::prime(5);
    Matrix<Fq> b(3, 2, Fq(F5, 0));
    b.at(2, 0) = Fq(F5, 1);  // z
    b.at(0, 1) = Fq(F5, 1);  // x + 2y
    b.at(1, 1) = Fq(F5, 2);
    auto [c, np] = chart_of_point(EPoint{b});
    CHECK(c.sigma == std::vector<std::size_t>{0, 2});
    CHECK(np.basis.at(0, 0).to_int() == 1);
    CHECK(np.basis.at(1, 0).to_int() == 2);
    CHECK(np.basis.at(2, 1).to_int() == 1);
    CHECK(np.basis.at(2, 0).to_int() == 0);
}

TEST_CASE("enumerate_elementary: u_3 has 6 planes over F_5, all containing z") {
    auto L = heisenberg_sc(5);
    auto pts = enumerate_elementary(L, 2, 1);
    REQUIRE(pts.size() == 6);
    Matrix<Fq> zc(3, 1, Fq(L.ctx, 0));
    zc.at(2, 0) = Fq(L.ctx, 1);
    for (const auto& q : pts) {
        CHECK(is_elementary(L, q));
        CHECK(in_column_span(q.basis, zc));
    }
    // duplicate-free under span equality
    std::set<std::string> keys;
    for (const auto& q : pts) {
        auto c = span_canonical(q.basis);
        std::string k;
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) k += c.at(i, j).str() + ",";
        keys.insert(k);
    }
    CHECK(keys.size() == 6);
}

TEST_CASE("enumerate_elementary: nilpotent directions of gl_2 over F_3") {
    auto L = classical_algebra(Family::gl, 2, 3);
    auto pts = enumerate_elementary(L, 1, 1);
    CHECK(pts.size() == 4);  // P^1(F_3) of the nilpotent cone of sl_2
    auto L7 = heisenberg_sc(7);
    CHECK(enumerate_elementary(L7, 3, 1).empty());  // no 3-dim elementary in u_3
    auto Lgl3 = classical_algebra(Family::gl, 3, 5);
    CHECK_THROWS(enumerate_elementary(Lgl3, 2, 1, 100));  // budget
}

TEST_CASE("enumerate_elementary over an extension: u_3 over F_{3^2}") {
    auto L = heisenberg_sc(3);
    auto p1 = enumerate_elementary(L, 2, 1);
    CHECK(p1.size() == 4);  // P^1(F_3)
    auto p2 = enumerate_elementary(L, 2, 2);
    CHECK(p2.size() == 10);  // P^1(F_9)
}

TEST_CASE("scan_ranks: u_3 adjoint over all 6 planes") {
    auto L = heisenberg_sc(5);
    auto M = adjoint_module(L);
    auto pts = enumerate_elementary(L, 2, 1);
    auto rep = scan_ranks(L, M, pts, 1, 2);
    for (const auto& ps : rep.points) {
        CHECK(ps.soc_dim.at(1) == 2);
        CHECK(ps.rad_dim.at(1) == 1);
    }
    CHECK(rep.observed_min_soc.at(1) == 2);
    CHECK(rep.observed_max_rad.at(1) == 1);
    CHECK(rep.soc_locus[1].empty());  // every plane is maximal
    CHECK(rep.rad_locus[1].empty());
}

TEST_CASE("scan_ranks: zero module action") {
    auto L = heisenberg_sc(5);
    UModule Z;
    Z.ctx = L.ctx;
    Z.dim = 3;
    Z.label = "zero";
    Z.actions.assign(3, Matrix<Fq>(3, 3, Fq(L.ctx, 0)));
    auto pts = enumerate_elementary(L, 2, 1);
    auto rep = scan_ranks(L, Z, pts, 1, 1);
    for (const auto& ps : rep.points) {
        CHECK(ps.rad_dim.at(1) == 0);
        CHECK(ps.soc_dim.at(1) == 3);
    }
}

TEST_CASE("scan_ranks: gl_3 defining on orbit sample of u_{1,2}") {
    auto L = classical_algebra(Family::gl, 3, 5);
    auto M = defining_module(L, Family::gl, 3);
    auto e = nilradical_of_parabolic(Family::gl, 3, 1, 5);
    std::vector<Matrix<Fq>> gens;
    for (auto [a, b] : {std::pair<int, int>{1, 0}, {2, 0}, {2, 1}}) {
        Matrix<Fq> g = L.zero_element();
        g.at(a * 3 + b, 0) = Fq(L.ctx, 1);
        gens.push_back(g);
    }
    auto pts = adjoint_orbit_points(L, e, gens, 20, 2024);
    auto rep = scan_ranks(L, M, pts, 1, 1);
    for (const auto& ps : rep.points) CHECK(ps.rad_dim.at(1) == 1);
    CHECK(rep.rad_locus[1].empty());
}

TEST_CASE("ChartParam: pattern, sampling, elementarity of sampled points") {
    auto L = heisenberg_sc(5);
    ChartParam cp;
    cp.ctx = L.ctx;
    cp.n = 3;
    cp.r = 2;
    cp.d = 1;
    cp.chart.sigma = {0, 2};
    cp.coords.emplace_back(1, 0, Poly::variable(L.ctx, 1, 0));  // row y, col 0: T
    cp.domain_note = "planes span(x + T y, z)";
    auto pat = cp.pattern();
    CHECK(pat.rows() == 3);
    CHECK(pat.cols() == 2);
    for (int t = 0; t < 5; ++t) {
        EPoint q = cp.at({Fq(L.ctx, t)});
        CHECK(is_elementary(L, q));
    }
    // assigning a coordinate into a Sigma-row is rejected
    ChartParam bad = cp;
    bad.coords.emplace_back(0, 1, Poly::variable(L.ctx, 1, 0));
    CHECK_THROWS(bad.pattern());
}
