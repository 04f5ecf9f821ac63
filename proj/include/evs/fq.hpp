#ifndef EVS_FQ_HPP
#define EVS_FQ_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace evs {

/// Field context for F_{p^k}, p an odd prime < 2^31, k <= 4.
/// For k > 1 the modulus is a monic irreducible of degree k over F_p,
/// chosen deterministically (smallest in the coefficient enumeration order).
struct FqCtx {
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    std::array<std::uint32_t, 5> modulus{};  // modulus[0..k], modulus[k] == 1

    static const FqCtx* prime(std::uint32_t p);
    static const FqCtx* ext(std::uint32_t p, std::uint32_t k);

    bool operator==(const FqCtx& o) const { return p == o.p && k == o.k; }
};

/// Element of F_{p^k}; coordinate vector in the basis 1, x, ..., x^{k-1}.
/// Immutable value type; arithmetic requires both operands from the same
/// context (prime-field values embed via lift()).
class Fq {
  public:
    Fq() = default;
    Fq(const FqCtx* ctx, std::int64_t v) : ctx_(ctx) {
        c_.fill(0);
        std::int64_t r = v % static_cast<std::int64_t>(ctx->p);
        if (r < 0) r += ctx->p;
        c_[0] = static_cast<std::uint32_t>(r);
    }
    Fq(const FqCtx* ctx, std::array<std::uint32_t, 4> coords) : ctx_(ctx), c_(coords) {}

    const FqCtx* ctx() const { return ctx_; }
    std::uint32_t coord(std::uint32_t i) const { return c_[i]; }

    bool is_zero() const {
        if (!ctx_) return true;
        for (std::uint32_t i = 0; i < ctx_->k; ++i)
            if (c_[i]) return false;
        return true;
    }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const { return *this * o.inverse(); }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }
    /// Total order for deterministic container keys and report sorting.
    bool operator<(const Fq& o) const;

    Fq inverse() const;
    Fq pow(std::uint64_t e) const;
    /// Frobenius x -> x^p.
    Fq frobenius() const { return pow(ctx_->p); }

    /// Embed into a larger context with the same characteristic.
    /// Only prime-field elements embed (coordinates above 0 must vanish
    /// unless the contexts agree).
    Fq lift(const FqCtx* bigger) const;

    /// Integer value of a prime-field element.
    std::uint32_t to_int() const { return c_[0]; }

    std::string str() const;

  private:
    const FqCtx* ctx_ = nullptr;
    std::array<std::uint32_t, 4> c_{};
};

inline Fq zero_like(const Fq& a) { return Fq(a.ctx(), 0); }
inline Fq one_like(const Fq& a) { return Fq(a.ctx(), 1); }
inline bool is_zero(const Fq& a) { return a.is_zero(); }

/// All elements of F_{p^k}, in deterministic coordinate order.
std::vector<Fq> all_field_elements(const FqCtx* ctx);

bool is_prime_u32(std::uint32_t n);

}  // namespace evs

#endif
