#ifndef EVS_MODREP_HPP
#define EVS_MODREP_HPP

#include "evs/liealg.hpp"

namespace evs {

/// Restricted representation of a fixed algebra: one m x m matrix per
/// algebra basis vector, acting on column coordinates.
struct UModule {
    const FqCtx* ctx = nullptr;
    std::size_t dim = 0;
    std::string label;
    std::vector<Matrix<Fq>> actions;

    /// rho(v) for a coordinate column v of the algebra.
    Matrix<Fq> action_of(const Matrix<Fq>& v) const;
};

/// Jordan type of a p-nilpotent operator: block-size partition, parts
/// descending, each in [1, p], summing to dim.
struct JordanType {
    std::vector<std::size_t> parts;
    bool operator==(const JordanType& o) const { return parts == o.parts; }
    std::string str() const;
};

ValidationReport validate_module(const RestrictedLieAlgebra& L, const UModule& M);

/// The adjoint module of L on itself.
UModule adjoint_module(const RestrictedLieAlgebra& L);

/// Basis of Rad^j(eps*M): column space of all degree-j ordered products of
/// the actions of eps's columns (C(j+r-1, r-1) products; commutativity is
/// asserted).  1 <= j <= (p-1) r.
Matrix<Fq> rad_j(const UModule& M, const EPoint& eps, std::size_t j);

/// Basis of Soc^j(eps*M): common kernel of the same products.
Matrix<Fq> soc_j(const UModule& M, const EPoint& eps, std::size_t j);

/// Jordan type of rho(v); throws unless rho(v)^p = 0.
JordanType jordan_type(const UModule& M, const Matrix<Fq>& v);

UModule dual(const UModule& M);
UModule tensor(const UModule& M, const UModule& N);
UModule sym_power(const UModule& M, std::size_t m);
UModule ext_power(const UModule& M, std::size_t m);

/// CFP duality: dim Soc^j(eps * M^#) + dim Rad^j(eps * M) == dim M.
bool duality_check(const UModule& M, const EPoint& eps, std::size_t j);

}  // namespace evs

#endif
