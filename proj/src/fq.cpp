#include "evs/fq.hpp"

#include <map>
#include <mutex>

namespace evs {

namespace {

using u32 = std::uint32_t;
using i64 = std::int64_t;

u32 addm(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
u32 subm(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
u32 mulm(u32 a, u32 b, u32 p) {
    return static_cast<u32>((static_cast<i64>(a) * b) % p);
}

u32 powm(u32 a, std::uint64_t e, u32 p) {
    u32 r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u32 invm(u32 a, u32 p) {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    return powm(a, p - 2, p);
}

// Dense univariate polynomials over F_p, used only for modulus search and
// extension-field inversion.
using UPoly = std::vector<u32>;  // coefficients, low degree first

void utrim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly umod(UPoly a, const UPoly& m, u32 p) {
    utrim(a);
    while (a.size() >= m.size()) {
        u32 c = mulm(a.back(), invm(m.back(), p), p);
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[off + i] = subm(a[off + i], mulm(c, m[i], p), p);
        utrim(a);
    }
    return a;
}

UPoly umul(const UPoly& a, const UPoly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    return r;
}

UPoly upowmod(UPoly base, std::uint64_t e, const UPoly& m, u32 p) {
    UPoly r{1};
    base = umod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = umod(umul(r, base, p), m, p);
        base = umod(umul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

UPoly ugcd(UPoly a, UPoly b, u32 p) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree k; irreducible iff x^{p^k} == x (mod f) and
// gcd(x^{p^{k/q}} - x, f) = 1 for every prime q | k.  k <= 4 here.
bool is_irreducible(const UPoly& f, u32 k, u32 p) {
    UPoly x{0, 1};
    std::uint64_t pk = 1;
    for (u32 i = 0; i < k; ++i) pk *= p;
    UPoly xq = upowmod(x, pk, f, p);
    UPoly diff = xq;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = subm(diff[1], 1, p);
    utrim(diff);
    if (!diff.empty()) return false;
    for (u32 q : {2u, 3u}) {
        if (k % q != 0) continue;
        std::uint64_t pd = 1;
        for (u32 i = 0; i < k / q; ++i) pd *= p;
        UPoly xd = upowmod(x, pd, f, p);
        UPoly d = xd;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = subm(d[1], 1, p);
        utrim(d);
        UPoly g = ugcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::mutex ctx_mutex;
std::map<std::pair<u32, u32>, std::unique_ptr<FqCtx>> ctx_cache;

}  // namespace

bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const FqCtx* FqCtx::prime(u32 p) { return ext(p, 1); }

const FqCtx* FqCtx::ext(u32 p, u32 k) {
    if (!is_prime_u32(p) || p < 3) throw std::invalid_argument("FqCtx: p must be an odd prime >= 3");
    if (k < 1 || k > 4) throw std::invalid_argument("FqCtx: extension degree k must be in 1..4");
    std::lock_guard<std::mutex> lock(ctx_mutex);
    auto key = std::make_pair(p, k);
    auto it = ctx_cache.find(key);
    if (it != ctx_cache.end()) return it->second.get();

    auto ctx = std::make_unique<FqCtx>();
    ctx->p = p;
    ctx->k = k;
    ctx->modulus.fill(0);
    ctx->modulus[k] = 1;
    if (k > 1) {
        // smallest monic irreducible in lex order of (c_{k-1},...,c_0)
        std::uint64_t total = 1;
        for (u32 i = 0; i < k; ++i) total *= p;
        bool found = false;
        for (std::uint64_t code = 0; code < total && !found; ++code) {
            UPoly f(k + 1, 0);
            f[k] = 1;
            std::uint64_t c = code;
            for (u32 i = 0; i < k; ++i) {
                f[i] = static_cast<u32>(c % p);
                c /= p;
            }
            if (is_irreducible(f, k, p)) {
                for (u32 i = 0; i <= k; ++i) ctx->modulus[i] = f[i];
                found = true;
            }
        }
        if (!found) throw std::logic_error("FqCtx: no irreducible modulus found");
    }
    const FqCtx* raw = ctx.get();
    ctx_cache.emplace(key, std::move(ctx));
    return raw;
}

Fq Fq::operator+(const Fq& o) const {
    if (!ctx_ || ctx_ != o.ctx_) throw std::invalid_argument("Fq: context mismatch");
    std::array<u32, 4> r{};
    for (u32 i = 0; i < ctx_->k; ++i) r[i] = addm(c_[i], o.c_[i], ctx_->p);
    return Fq(ctx_, r);
}

Fq Fq::operator-(const Fq& o) const {
    if (!ctx_ || ctx_ != o.ctx_) throw std::invalid_argument("Fq: context mismatch");
    std::array<u32, 4> r{};
    for (u32 i = 0; i < ctx_->k; ++i) r[i] = subm(c_[i], o.c_[i], ctx_->p);
    return Fq(ctx_, r);
}

Fq Fq::operator-() const {
    if (!ctx_) throw std::invalid_argument("Fq: null context");
    std::array<u32, 4> r{};
    for (u32 i = 0; i < ctx_->k; ++i) r[i] = subm(0, c_[i], ctx_->p);
    return Fq(ctx_, r);
}

Fq Fq::operator*(const Fq& o) const {
    if (!ctx_ || ctx_ != o.ctx_) throw std::invalid_argument("Fq: context mismatch");
    const u32 p = ctx_->p, k = ctx_->k;
    if (k == 1) return Fq(ctx_, std::array<u32, 4>{mulm(c_[0], o.c_[0], p), 0, 0, 0});
    std::array<u32, 8> prod{};
    for (u32 i = 0; i < k; ++i)
        for (u32 j = 0; j < k; ++j)
            prod[i + j] = addm(prod[i + j], mulm(c_[i], o.c_[j], p), p);
    // reduce by monic modulus
    for (int d = 2 * static_cast<int>(k) - 2; d >= static_cast<int>(k); --d) {
        u32 c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (u32 i = 0; i < k; ++i)
            prod[d - k + i] = subm(prod[d - k + i], mulm(c, ctx_->modulus[i], p), p);
    }
    std::array<u32, 4> r{};
    for (u32 i = 0; i < k; ++i) r[i] = prod[i];
    return Fq(ctx_, r);
}

bool Fq::operator==(const Fq& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (!ctx_ || !o.ctx_) return false;
    if (ctx_ != o.ctx_) throw std::invalid_argument("Fq: context mismatch in ==");
    for (u32 i = 0; i < ctx_->k; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

bool Fq::operator<(const Fq& o) const {
    for (int i = 3; i >= 0; --i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

Fq Fq::pow(std::uint64_t e) const {
    if (!ctx_) throw std::invalid_argument("Fq: null context");
    Fq r(ctx_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Fq Fq::inverse() const {
    if (is_zero()) throw std::domain_error("Fq: inverse of zero");
    std::uint64_t q = 1;
    for (u32 i = 0; i < ctx_->k; ++i) q *= ctx_->p;
    return pow(q - 2);
}

Fq Fq::lift(const FqCtx* bigger) const {
    if (!ctx_ || ctx_ == bigger) {
        Fq r(bigger, 0);
        if (ctx_) r = Fq(bigger, c_);
        return r;
    }
    if (ctx_->p != bigger->p) throw std::invalid_argument("Fq: lift across characteristics");
    for (u32 i = 1; i < ctx_->k; ++i)
        if (c_[i]) throw std::invalid_argument("Fq: lift of a non-prime-field element");
    return Fq(bigger, static_cast<i64>(c_[0]));
}

std::string Fq::str() const {
    if (!ctx_ || ctx_->k == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (u32 i = 0; i < ctx_->k; ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

std::vector<Fq> all_field_elements(const FqCtx* ctx) {
    std::uint64_t q = 1;
    for (u32 i = 0; i < ctx->k; ++i) q *= ctx->p;
    std::vector<Fq> out;
    out.reserve(q);
    for (std::uint64_t code = 0; code < q; ++code) {
        std::array<u32, 4> c{};
        std::uint64_t v = code;
        for (u32 i = 0; i < ctx->k; ++i) {
            c[i] = static_cast<u32>(v % ctx->p);
            v /= ctx->p;
        }
        out.emplace_back(ctx, c);
    }
    return out;
}

}  // namespace evs
