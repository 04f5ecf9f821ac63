#ifndef EVS_CATALOG_HPP
#define EVS_CATALOG_HPP

#include <optional>

#include "evs/p1split.hpp"

namespace evs {

/// ---- classical algebras with their defining modules -----------------------

struct ClassicalBundle {
    RestrictedLieAlgebra L;
    UModule defining;
};

/// gl_n / sl_n / sp_2n with the defining representation, matrix realization
/// included.  Requires p odd >= 3; for sl_n additionally p not dividing n
/// (the trace form degenerates otherwise and the standard fiber-dimension
/// statements fail).  sp_2n is built with the block form [[0, I], [-I, 0]].
ClassicalBundle make_classical(Family f, std::size_t n, std::uint32_t p);

/// ---- Heisenberg -----------------------------------------------------------

struct HeisenbergBundle {
    RestrictedLieAlgebra L;  // basis (x, y, z), [x, y] = z, realized in gl_3
    UModule adjoint;
    /// Affine chart span(x + T y, z) of the projective line
    /// (s : t) |-> span(s x + t y, z) = E(2, u_3).
    ChartParam line;
    P1System p1;  // homogenized adjoint Theta system on that line
};
HeisenbergBundle make_heisenberg(std::uint32_t p);

/// ---- sl_2 at p = 3: regular module and its projective indecomposables ----

/// The left regular module of the restricted enveloping algebra u(sl_2),
/// dim p^3, on the PBW basis e^a h^b f^c (0 <= a, b, c < p), index
/// a p^2 + b p + c.  Actions ordered like the sl_2 basis [e, f, h].
/// Only p = 3 is supported (dim 27).
UModule sl2_regular_module(std::uint32_t p);

struct Sl2Pims {
    RestrictedLieAlgebra L;  // sl_2 over F_3
    /// pims[lambda] = the projective cover P_lambda of the simple module of
    /// highest weight lambda, lambda = 0..p-1, as a representative summand
    /// of the regular module.  dims: P_0 = 6, P_1 = 6, P_2 = 3 (Steinberg).
    std::vector<UModule> pims;
    /// Multiplicity of P_lambda in the regular module (= dim of the simple
    /// of highest weight lambda): {1, 2, 3}.
    std::vector<std::size_t> multiplicity;
    /// Dimensions of all indecomposable summands found, descending.
    std::vector<std::size_t> summand_dims;
};

/// Decomposes the regular module of u(sl_2) into indecomposable summands by
/// randomized Fitting splitting: module endomorphisms are drawn from right
/// multiplications (projected to the current summand), and ker/im of a high
/// power split off complementary submodules.  Deterministic under `seed`;
/// throws if the expected block structure is not reached within `budget`
/// failed attempts per summand.
Sl2Pims make_sl2_pims(std::uint32_t p, std::uint64_t seed = 1, std::size_t budget = 64);

/// Theta = s t rho(h) + s^2 rho(e) - t^2 rho(f): a degree-2 parametrization
/// of the projectivized nilpotent cone of sl_2 (actions in order [e, f, h]).
P1System nilcone_system(const UModule& M);

/// Affine chart span(e + T h - T^2 f) of the same line, as a locus in
/// E(1, sl_2).
ChartParam nilcone_chart(std::uint32_t p);

/// ---- sl_2^{+r} with pulled-back projectives -------------------------------

struct Sl2rBundle {
    RestrictedLieAlgebra L;  // sl_2^{+r}, factor-major basis [e_i, f_i, h_i]
    UModule M;               // pi_s^* P_lambda: factor s acts, others act by 0
    /// lines[t] = coordinate line through (span e_0, ..., span e_{r-1}) that
    /// varies factor t along the nilpotent cone: E(r, sl_2^{+r}) = (P^1)^r.
    std::vector<ChartParam> lines;
};

/// p = 3, 1 <= s <= r <= 3, 0 <= lambda <= 2 (s is 1-based).
Sl2rBundle make_sl2_r(std::uint32_t p, std::size_t r, std::size_t s, std::size_t lambda,
                      std::uint64_t seed = 1);

/// ---- V x| gl_n with truncated polynomial / exterior modules ---------------

enum class SemidirectKind {
    N,        // S^*(V) / S^{*>=j+1}(V), param = j, 1 <= j <= p-1
    M_trunc,  // Lambda^r(V) + Lambda^{r+1}(V), param = r, 1 <= r <= n-1
    R,        // degrees r(p-1), r(p-1)+1 of k[V]/(v^p), param = r, 1 <= r <= n-1
};

struct SemidirectBundle {
    /// g_{1,n} = V x| gl_n: basis v_1..v_n then E_ab row-major; [v, w] = 0,
    /// [A, v] = A v, v^{[p]} = 0, A^{[p]} = A^p.  Realized on k + V.
    RestrictedLieAlgebra L;
    /// V acts by (truncated) multiplication, gl_n by derivations.
    UModule M;
    /// Chart span(v_1 + T v_2) of a line in Grass(1, V) inside E(1, g).
    ChartParam line;
};
SemidirectBundle make_semidirect(std::size_t n, std::uint32_t p, SemidirectKind kind,
                                 std::size_t param);

/// ---- cominuscule parabolics ----------------------------------------------

/// One row of the classification of maximal parabolics with abelian
/// nilradical: simple type, distinguished simple root, nilradical dimension,
/// and whether this catalog can construct the pair (g, u).
struct CominusculeRow {
    std::string type;
    std::string root;
    std::string nilradical_dim;
    bool has_constructor = false;
};

/// The complete list: A_n (any alpha_i), B_n (alpha_1), C_n (alpha_n),
/// D_n (alpha_1, alpha_{n-1}, alpha_n), E_6 (alpha_1, alpha_6), E_7
/// (alpha_7); none for E_8, F_4, G_2.
std::vector<CominusculeRow> cominuscule_table();

/// so_{2n+1} for the split symmetric form [[1,0,0],[0,0,I_n],[0,I_n,0]]:
/// all X with X^T S + S X = 0, basis chosen canonically from the solution
/// space; matrix realization included.  Requires p odd >= 3.
RestrictedLieAlgebra so_odd(std::size_t n, std::uint32_t p);

/// Abelian nilradical (dim 2n-1) of the parabolic P_{alpha_1} of so_{2n+1}:
/// the stabilizer of the isotropic line through the first basis vector of
/// the middle block.
EPoint so_odd_nilradical(const RestrictedLieAlgebra& L, std::size_t n);

/// Brute-force bracket-span verification of the structural identities of an
/// abelian nilradical u of a cominuscule parabolic p:
///   [u, g] = p   (checked as: the normalizer N_g(u) equals span [u, g]),
///   [u, p] = u,  [u, [u, g]] = u,  C_g(u) = u.
struct CominusculeCheck {
    std::size_t dim_u = 0;
    std::size_t dim_p = 0;            // dim of the normalizer N_g(u)
    std::size_t dim_u_g = 0;          // dim span [u, g]
    std::size_t dim_u_u_g = 0;        // dim span [u, [u, g]]
    std::size_t dim_centralizer = 0;  // dim C_g(u)
    bool identities_hold = false;
};
CominusculeCheck cominuscule_check(const RestrictedLieAlgebra& L, const EPoint& u);

/// ---- the catalog surface --------------------------------------------------

struct CatalogEntry {
    std::string id;
    std::uint32_t p = 0;     // the prime the bundle is built over
    std::string note;        // what the entry is
    std::string constraints; // validity constraints on p / parameters
};

std::vector<CatalogEntry> catalog_list();

struct CatalogBundle {
    RestrictedLieAlgebra L;
    UModule M;
    std::optional<ChartParam> locus;
};

/// Builds the bundle for a catalog id (see catalog_list); throws
/// std::invalid_argument for unknown ids.  Randomized constructions are
/// driven by `seed` only.
CatalogBundle catalog_build(const std::string& id, std::uint64_t seed = 1);

/// A d = 0 chart pinned at one elementary point (for scans of constant loci).
ChartParam constant_chart(const RestrictedLieAlgebra& L, const EPoint& eps);

}  // namespace evs

#endif
