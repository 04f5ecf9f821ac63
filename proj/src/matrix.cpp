#include "evs/matrix.hpp"

namespace evs {

std::size_t bareiss_rank(const Matrix<Poly>& m) {
    Matrix<Poly> a = m;
    const std::size_t R = a.rows(), C = a.cols();
    Poly prev = one_like(m.proto());
    std::size_t k = 0;
    while (k < R && k < C) {
        // full pivot search in the trailing block, first nonzero in
        // column-major order for determinism
        std::size_t pi = R, pj = C;
        for (std::size_t j = k; j < C && pi == R; ++j)
            for (std::size_t i = k; i < R; ++i)
                if (!a.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == R) break;
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        for (std::size_t i = k + 1; i < R; ++i) {
            for (std::size_t j = k + 1; j < C; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num.is_zero() ? num : poly_exact_div(num, prev);
            }
            a.at(i, k) = zero_like(m.proto());
        }
        prev = a.at(k, k);
        ++k;
    }
    return k;
}

Matrix<Poly> kernel_module_basis(const Matrix<Poly>& A) {
    const std::size_t R = A.rows(), C = A.cols();
    const Poly proto = A.proto();
    if (proto.nvars() < 1)
        throw std::invalid_argument("kernel_module_basis: needs a polynomial ring");
    constexpr std::uint32_t var = 0;
    Matrix<Poly> H = A;
    Matrix<Poly> U = Matrix<Poly>::identity(C, proto);
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Poly& q) {
        for (std::size_t i = 0; i < R; ++i) H.at(i, dst) -= q * H.at(i, src);
        for (std::size_t i = 0; i < C; ++i) U.at(i, dst) -= q * U.at(i, src);
    };
    std::vector<char> active(C, 1);
    for (std::size_t row = 0; row < R; ++row) {
        while (true) {
            std::size_t best = C, count = 0;
            int best_deg = 0;
            for (std::size_t c = 0; c < C; ++c) {
                if (!active[c] || H.at(row, c).is_zero()) continue;
                ++count;
                int deg = poly_degree_univar(H.at(row, c), var);
                if (best == C || deg < best_deg) {
                    best = c;
                    best_deg = deg;
                }
            }
            if (count <= 1) {
                if (count == 1) active[best] = 0;  // pivot for this row, frozen
                break;
            }
            for (std::size_t c = 0; c < C; ++c) {
                if (!active[c] || c == best || H.at(row, c).is_zero()) continue;
                col_axpy(c, best, poly_divmod_univar(H.at(row, c), H.at(row, best), var).first);
            }
        }
    }
    std::size_t k = 0;
    for (std::size_t c = 0; c < C; ++c) k += active[c] ? 1 : 0;
    Matrix<Poly> out(C, k, proto);
    std::size_t oc = 0;
    for (std::size_t c = 0; c < C; ++c) {
        if (!active[c]) continue;
        for (std::size_t i = 0; i < R; ++i)
            if (!H.at(i, c).is_zero())
                throw std::logic_error("kernel_module_basis: reduction invariant broken");
        for (std::size_t i = 0; i < C; ++i) out.at(i, oc) = U.at(i, c);
        ++oc;
    }
    return out;
}

Matrix<Poly> saturate_span(const Matrix<Poly>& V) {
    // The saturation is the common kernel of all functionals vanishing on the
    // span; both steps are kernel-module computations (kernels are saturated).
    Matrix<Poly> L = kernel_module_basis(V.transpose());
    return kernel_module_basis(L.transpose());
}

Matrix<Fq> graded_piece_map(const Matrix<Poly>& m, const std::vector<int>& source_degrees,
                            const std::vector<int>& target_degrees, int d) {
    if (source_degrees.size() != m.cols() || target_degrees.size() != m.rows())
        throw std::invalid_argument("graded_piece_map: degree list size mismatch");
    if (m.proto().nvars() != 2)
        throw std::invalid_argument("graded_piece_map: expected a matrix in 2 variables");
    const FqCtx* ctx = m.proto().ctx();

    auto piece_dim = [&](int g) { return d >= g ? static_cast<std::size_t>(d - g + 1) : 0; };
    std::vector<std::size_t> src_off(m.cols() + 1, 0), tgt_off(m.rows() + 1, 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        src_off[j + 1] = src_off[j] + piece_dim(source_degrees[j]);
    for (std::size_t i = 0; i < m.rows(); ++i)
        tgt_off[i + 1] = tgt_off[i] + piece_dim(target_degrees[i]);

    Matrix<Fq> out(tgt_off[m.rows()], src_off[m.cols()], Fq(ctx, 0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly& f = m.at(i, j);
            if (f.is_zero()) continue;
            int e = source_degrees[j] - target_degrees[i];
            auto hd = f.homogeneous_degree();
            if (!hd || *hd != e)
                throw std::invalid_argument("graded_piece_map: entry not homogeneous of the required degree");
            std::size_t nsrc = piece_dim(source_degrees[j]);
            // basis monomial b of summand j is s^{d-g-b} t^b; the term
            // c*s^u t^v sends it to basis index b+v of summand i
            for (std::size_t b = 0; b < nsrc; ++b) {
                for (const auto& [ex, c] : f.terms()) {
                    std::size_t tb = b + ex[1];
                    out.at(tgt_off[i] + tb, src_off[j] + b) += c;
                }
            }
        }
    }
    return out;
}

}  // namespace evs
