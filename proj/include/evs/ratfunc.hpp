#ifndef EVS_RATFUNC_HPP
#define EVS_RATFUNC_HPP

#include "evs/poly.hpp"

namespace evs {

/// Fraction of multivariate polynomials.  Kept in a weak normal form:
/// common monomial content cancelled, denominator lex-lead coefficient 1,
/// and full gcd cancellation when numerator and denominator are univariate
/// in the same variable (the one-parameter chart case, where growth control
/// actually matters).  Equality is decided by cross-multiplication, so the
/// weak normal form never affects correctness.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly num) : RatFunc(num, one_like(num)) {}

    static RatFunc constant(const FqCtx* ctx, std::uint32_t nvars, const Fq& c) {
        return RatFunc(Poly::constant(ctx, nvars, c));
    }
    static RatFunc variable(const FqCtx* ctx, std::uint32_t nvars, std::uint32_t i) {
        return RatFunc(Poly::variable(ctx, nvars, i));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FqCtx* ctx() const { return num_.ctx(); }
    std::uint32_t nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;

    /// Evaluation; throws if the denominator vanishes at the point.
    Fq eval(const std::vector<Fq>& point) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    void normalize();

    Poly num_, den_;
};

inline RatFunc zero_like(const RatFunc& a) { return RatFunc(zero_like(a.num())); }
inline RatFunc one_like(const RatFunc& a) { return RatFunc(one_like(a.num())); }
inline bool is_zero(const RatFunc& a) { return a.is_zero(); }

}  // namespace evs

#endif
