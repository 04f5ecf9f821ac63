#include "evs/ratfunc.hpp"

#include <stdexcept>

namespace evs {

namespace {

constexpr std::uint32_t kNoVar = UINT32_MAX;

// The single variable appearing in f (kNoVar for constants), or nullopt if
// f uses more than one variable.
std::optional<std::uint32_t> sole_variable(const Poly& f) {
    std::uint32_t v = kNoVar;
    for (const auto& [e, c] : f.terms()) {
        for (std::uint32_t i = 0; i < f.nvars(); ++i) {
            if (!e[i]) continue;
            if (v != kNoVar && v != i) return std::nullopt;
            v = i;
        }
    }
    return v;
}

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("RatFunc: nvars mismatch");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = one_like(den_);
        return;
    }
    Poly::Expo cn = num_.monomial_content(), cd = den_.monomial_content();
    Poly::Expo common(cn.size());
    bool any = false;
    for (std::size_t i = 0; i < cn.size(); ++i) {
        common[i] = std::min(cn[i], cd[i]);
        any = any || common[i];
    }
    if (any) {
        num_ = num_.shift_down(common);
        den_ = den_.shift_down(common);
    }
    auto vn = sole_variable(num_), vd = sole_variable(den_);
    if (vn && vd && (*vn == kNoVar || *vd == kNoVar || *vn == *vd)) {
        std::uint32_t var = *vn != kNoVar ? *vn : (*vd != kNoVar ? *vd : 0);
        if (var != kNoVar && num_.total_degree() > 0 && den_.total_degree() > 0) {
            Poly g = poly_gcd_univar(num_, den_, var);
            if (g.total_degree() > 0) {
                num_ = poly_exact_div(num_, g);
                den_ = poly_exact_div(den_, g);
            }
        }
    }
    Fq lc = den_.lead_coeff();
    if (!(lc == one_like(lc))) {
        Fq inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Fq RatFunc::eval(const std::vector<Fq>& point) const {
    Fq d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("RatFunc::eval: denominator vanishes at point");
    return num_.eval(point) / d;
}

std::string RatFunc::str(const std::vector<std::string>& var_names) const {
    if (den_.total_degree() == 0 && den_.lead_coeff() == one_like(den_.lead_coeff()))
        return num_.str(var_names);
    return "(" + num_.str(var_names) + ")/(" + den_.str(var_names) + ")";
}

}  // namespace evs
