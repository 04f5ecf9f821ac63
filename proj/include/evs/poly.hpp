#ifndef EVS_POLY_HPP
#define EVS_POLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "evs/fq.hpp"

namespace evs {

/// Multivariate polynomial over F_{p^k} in a fixed number of named-by-index
/// variables.  Sparse exponent-vector representation, no stored zero terms.
class Poly {
  public:
    using Expo = std::vector<std::uint32_t>;

    Poly() = default;
    Poly(const FqCtx* ctx, std::uint32_t nvars) : ctx_(ctx), nvars_(nvars) {}

    static Poly constant(const FqCtx* ctx, std::uint32_t nvars, const Fq& c);
    static Poly constant(const FqCtx* ctx, std::uint32_t nvars, std::int64_t c) {
        return constant(ctx, nvars, Fq(ctx, c));
    }
    static Poly variable(const FqCtx* ctx, std::uint32_t nvars, std::uint32_t i);
    static Poly monomial(const FqCtx* ctx, Expo e, const Fq& c);

    const FqCtx* ctx() const { return ctx_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::map<Expo, Fq>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Degree if homogeneous (zero counts as homogeneous of any degree).
    std::optional<int> homogeneous_degree() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Fq& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Entrywise evaluation; the point may live in an extension of the
    /// coefficient field (coefficients are lifted).
    Fq eval(const std::vector<Fq>& point) const;

    /// Coefficient of the lex-leading monomial (zero for the zero poly).
    Fq lead_coeff() const;
    const Expo* lead_expo() const;

    /// Componentwise minimum of all exponent vectors (monomial content).
    Expo monomial_content() const;
    /// Divide by a monomial known to divide every term.
    Poly shift_down(const Expo& e) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    void put(const Expo& e, const Fq& c);

    const FqCtx* ctx_ = nullptr;
    std::uint32_t nvars_ = 0;
    std::map<Expo, Fq> terms_;

    friend Poly poly_exact_div(const Poly& a, const Poly& b);
};

inline Poly zero_like(const Poly& a) { return Poly(a.ctx(), a.nvars()); }
inline Poly one_like(const Poly& a) { return Poly::constant(a.ctx(), a.nvars(), 1); }
inline bool is_zero(const Poly& a) { return a.is_zero(); }

/// Exact division; throws if b does not divide a.
Poly poly_exact_div(const Poly& a, const Poly& b);

/// gcd of univariate polynomials (nvars arbitrary but all terms must involve
/// only variable `var`); monic result.  Used for fraction normalization in
/// one-parameter charts.
Poly poly_gcd_univar(const Poly& a, const Poly& b, std::uint32_t var);

/// Univariate division with remainder: a = q b + r, deg r < deg b.
std::pair<Poly, Poly> poly_divmod_univar(const Poly& a, const Poly& b, std::uint32_t var);

/// Degree in `var` of a univariate polynomial (-1 for zero); throws if other
/// variables appear.
int poly_degree_univar(const Poly& a, std::uint32_t var);

}  // namespace evs

#endif
