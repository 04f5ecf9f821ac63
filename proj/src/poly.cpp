#include "evs/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evs {

void Poly::put(const Expo& e, const Fq& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        Fq s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Poly Poly::constant(const FqCtx* ctx, std::uint32_t nvars, const Fq& c) {
    Poly r(ctx, nvars);
    if (!c.is_zero()) r.terms_.emplace(Expo(nvars, 0), c);
    return r;
}

Poly Poly::variable(const FqCtx* ctx, std::uint32_t nvars, std::uint32_t i) {
    if (i >= nvars) throw std::out_of_range("Poly::variable");
    Poly r(ctx, nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    r.terms_.emplace(std::move(e), Fq(ctx, 1));
    return r;
}

Poly Poly::monomial(const FqCtx* ctx, Expo e, const Fq& c) {
    Poly r(ctx, static_cast<std::uint32_t>(e.size()));
    if (!c.is_zero()) r.terms_.emplace(std::move(e), c);
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int td = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        if (d == -2)
            d = td;
        else if (d != td)
            return std::nullopt;
    }
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.put(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.put(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
    Poly r(ctx_ ? ctx_ : o.ctx_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.put(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Fq& c) const {
    Poly r(ctx_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

Fq Poly::eval(const std::vector<Fq>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly::eval: point dimension mismatch");
    const FqCtx* pc = nvars_ ? point[0].ctx() : ctx_;
    if (!pc) pc = ctx_;
    Fq acc(pc, 0);
    for (const auto& [e, c] : terms_) {
        Fq t = c.lift(pc);
        for (std::uint32_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * point[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

Fq Poly::lead_coeff() const {
    if (terms_.empty()) return Fq(ctx_, 0);
    return terms_.rbegin()->second;
}

const Poly::Expo* Poly::lead_expo() const {
    if (terms_.empty()) return nullptr;
    return &terms_.rbegin()->first;
}

Poly::Expo Poly::monomial_content() const {
    Expo m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::uint32_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

Poly Poly::shift_down(const Expo& s) const {
    Poly r(ctx_, nvars_);
    for (const auto& [e, c] : terms_) {
        Expo ne(nvars_);
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (e[i] < s[i]) throw std::invalid_argument("Poly::shift_down: monomial does not divide");
            ne[i] = e[i] - s[i];
        }
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.str();
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (!it->first[i]) continue;
            s += "*";
            s += i < var_names.size() ? var_names[i] : ("T" + std::to_string(i));
            if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
        }
    }
    return s;
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_exact_div: division by zero");
    Poly rem = a;
    Poly quot(a.ctx() ? a.ctx() : b.ctx(), a.nvars());
    const Poly::Expo& lb = *b.lead_expo();
    Fq lcb = b.lead_coeff();
    while (!rem.is_zero()) {
        const Poly::Expo& lr = *rem.lead_expo();
        Poly::Expo q(lr.size());
        for (std::size_t i = 0; i < lr.size(); ++i) {
            if (lr[i] < lb[i]) throw std::domain_error("poly_exact_div: not divisible");
            q[i] = lr[i] - lb[i];
        }
        Fq c = rem.lead_coeff() / lcb;
        Poly m = Poly::monomial(rem.ctx(), q, c);
        quot += m;
        rem -= m * b;
    }
    return quot;
}

namespace {

std::vector<Fq> to_dense_univar(const Poly& f, std::uint32_t var) {
    std::vector<Fq> d;
    for (const auto& [e, c] : f.terms()) {
        for (std::uint32_t i = 0; i < f.nvars(); ++i)
            if (i != var && e[i]) throw std::invalid_argument("univariate helper: not univariate");
        if (e[var] >= d.size()) d.resize(e[var] + 1, Fq(f.ctx(), 0));
        d[e[var]] = c;
    }
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

Poly from_dense_univar(const std::vector<Fq>& d, const FqCtx* ctx, std::uint32_t nvars,
                       std::uint32_t var) {
    Poly g(ctx, nvars);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].is_zero()) continue;
        Poly::Expo e(nvars, 0);
        e[var] = static_cast<std::uint32_t>(i);
        g += Poly::monomial(ctx, e, d[i]);
    }
    return g;
}

}  // namespace

Poly poly_gcd_univar(const Poly& a, const Poly& b, std::uint32_t var) {
    auto to_dense = [&](const Poly& f) { return to_dense_univar(f, var); };
    const FqCtx* ctx = a.ctx() ? a.ctx() : b.ctx();
    std::vector<Fq> x = to_dense(a), y = to_dense(b);
    while (!y.empty()) {
        // x mod y
        while (x.size() >= y.size()) {
            Fq c = x.back() / y.back();
            std::size_t off = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[off + i] = x[off + i] - c * y[i];
            while (!x.empty() && x.back().is_zero()) x.pop_back();
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    if (x.empty()) return Poly(ctx, a.nvars());
    Fq lc = x.back();
    for (Fq& c : x) c = c / lc;
    return from_dense_univar(x, ctx, a.nvars(), var);
}

std::pair<Poly, Poly> poly_divmod_univar(const Poly& a, const Poly& b, std::uint32_t var) {
    if (b.is_zero()) throw std::domain_error("poly_divmod_univar: division by zero");
    const FqCtx* ctx = a.ctx() ? a.ctx() : b.ctx();
    std::vector<Fq> x = to_dense_univar(a, var), y = to_dense_univar(b, var);
    std::vector<Fq> q(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, Fq(ctx, 0));
    while (x.size() >= y.size() && !x.empty()) {
        Fq c = x.back() / y.back();
        std::size_t off = x.size() - y.size();
        q[off] = c;
        for (std::size_t i = 0; i < y.size(); ++i) x[off + i] = x[off + i] - c * y[i];
        while (!x.empty() && x.back().is_zero()) x.pop_back();
    }
    return {from_dense_univar(q, ctx, a.nvars(), var),
            from_dense_univar(x, ctx, a.nvars(), var)};
}

int poly_degree_univar(const Poly& a, std::uint32_t var) {
    return static_cast<int>(to_dense_univar(a, var).size()) - 1;
}

}  // namespace evs
