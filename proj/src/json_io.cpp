#include "evs/json_io.hpp"

namespace evs {

namespace {

json fq_mat_to_json(const Matrix<Fq>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_int());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Fq> fq_mat_from_json(const json& j, const FqCtx* ctx) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    Matrix<Fq> m(rows, cols, Fq(ctx, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("json matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = Fq(ctx, j.at(i).at(c).get<std::int64_t>());
    }
    return m;
}

json sparse_column(const Matrix<Fq>& col) {
    json terms = json::array();
    for (std::size_t k = 0; k < col.rows(); ++k)
        if (!col.at(k, 0).is_zero()) terms.push_back({k, col.at(k, 0).to_int()});
    return terms;
}

json poly_to_json(const Poly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({e, c.to_int()});
    return terms;
}

Poly poly_from_json(const json& j, const FqCtx* ctx, std::uint32_t nvars) {
    Poly f(ctx, nvars);
    for (const auto& term : j) {
        Poly::Expo e = term.at(0).get<Poly::Expo>();
        if (e.size() != nvars) throw std::invalid_argument("locus poly: exponent length != params");
        f += Poly::monomial(ctx, e, Fq(ctx, term.at(1).get<std::int64_t>()));
    }
    return f;
}

json fq_vec_strs(const std::vector<Fq>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

template <class K, class V>
json map_to_pairs(const std::map<K, V>& m) {
    json out = json::array();
    for (const auto& [k, v] : m) out.push_back({k, v});
    return out;
}

}  // namespace

json algebra_to_json(const RestrictedLieAlgebra& L) {
    json j;
    j["p"] = L.p();
    j["dim"] = L.n;
    j["labels"] = L.labels;
    json brackets = json::array();
    for (std::size_t a = 0; a < L.n; ++a)
        for (std::size_t b = a + 1; b < L.n; ++b) {
            json terms = sparse_column(L.adb[a].col(b));
            if (!terms.empty()) brackets.push_back({a, b, std::move(terms)});
        }
    j["brackets"] = std::move(brackets);
    json p_powers = json::array();
    for (std::size_t a = 0; a < L.n; ++a) {
        json terms = sparse_column(L.p_pow[a]);
        if (!terms.empty()) p_powers.push_back({a, std::move(terms)});
    }
    j["p_powers"] = std::move(p_powers);
    if (L.has_realization()) {
        json mats = json::array();
        for (const auto& m : L.realization) mats.push_back(fq_mat_to_json(m));
        j["matrix_realization"] = {{"N", L.realization[0].rows()}, {"mats", std::move(mats)}};
    }
    return j;
}

RestrictedLieAlgebra algebra_from_json(const json& j) {
    RestrictedLieAlgebra L;
    const auto p = j.at("p").get<std::uint32_t>();
    if (p < 3 || !is_prime_u32(p)) throw std::invalid_argument("algebra.json: p must be an odd prime >= 3");
    L.ctx = FqCtx::prime(p);
    L.n = j.at("dim").get<std::size_t>();
    L.labels = j.value("labels", std::vector<std::string>{});
    if (L.labels.empty())
        for (std::size_t i = 0; i < L.n; ++i) L.labels.push_back("x" + std::to_string(i + 1));
    if (L.labels.size() != L.n) throw std::invalid_argument("algebra.json: labels/dim mismatch");
    for (std::size_t i = 0; i < L.n; ++i) {
        L.adb.emplace_back(L.n, L.n, Fq(L.ctx, 0));
        L.p_pow.emplace_back(L.n, 1, Fq(L.ctx, 0));
    }
    for (const auto& br : j.at("brackets")) {
        const auto a = br.at(0).get<std::size_t>(), b = br.at(1).get<std::size_t>();
        if (a >= L.n || b >= L.n || a == b)
            throw std::invalid_argument("algebra.json: bad bracket indices");
        for (const auto& term : br.at(2)) {
            const auto k = term.at(0).get<std::size_t>();
            Fq c(L.ctx, term.at(1).get<std::int64_t>());
            L.adb[a].at(k, b) += c;
            L.adb[b].at(k, a) -= c;
        }
    }
    for (const auto& pp : j.value("p_powers", json::array())) {
        const auto a = pp.at(0).get<std::size_t>();
        for (const auto& term : pp.at(1))
            L.p_pow[a].at(term.at(0).get<std::size_t>(), 0) =
                Fq(L.ctx, term.at(1).get<std::int64_t>());
    }
    if (j.contains("matrix_realization")) {
        const auto& mr = j.at("matrix_realization");
        for (const auto& m : mr.at("mats")) L.realization.push_back(fq_mat_from_json(m, L.ctx));
        if (L.realization.size() != L.n ||
            (L.realization.size() && L.realization[0].rows() != mr.at("N").get<std::size_t>()))
            throw std::invalid_argument("algebra.json: realization shape mismatch");
    }
    return L;
}

json module_to_json(const UModule& M) {
    json j;
    j["label"] = M.label;
    j["dim"] = M.dim;
    json acts = json::array();
    for (const auto& a : M.actions) acts.push_back(fq_mat_to_json(a));
    j["actions"] = std::move(acts);
    return j;
}

UModule module_from_json(const json& j, const FqCtx* ctx) {
    UModule M;
    M.ctx = ctx;
    M.label = j.value("label", "module");
    M.dim = j.at("dim").get<std::size_t>();
    for (const auto& a : j.at("actions")) {
        Matrix<Fq> m = fq_mat_from_json(a, ctx);
        if (m.rows() != M.dim || m.cols() != M.dim)
            throw std::invalid_argument("module.json: action shape != dim");
        M.actions.push_back(std::move(m));
    }
    return M;
}

json locus_to_json(const ChartParam& cp) {
    json j;
    j["sigma"] = cp.chart.sigma;
    j["params"] = cp.d;
    json coords = json::array();
    for (const auto& [i, jj, f] : cp.coords)
        coords.push_back({{"i", i}, {"j", jj}, {"poly", poly_to_json(f)}});
    j["coords"] = std::move(coords);
    j["label"] = cp.domain_note;
    return j;
}

ChartParam locus_from_json(const json& j, const FqCtx* ctx, std::size_t n) {
    ChartParam cp;
    cp.ctx = ctx;
    cp.n = n;
    cp.chart.sigma = j.at("sigma").get<std::vector<std::size_t>>();
    cp.r = cp.chart.sigma.size();
    cp.d = j.at("params").get<std::size_t>();
    for (const auto& c : j.at("coords")) {
        const auto i = c.at("i").get<std::size_t>(), col = c.at("j").get<std::size_t>();
        if (i >= n || col >= cp.r) throw std::invalid_argument("locus.json: coord out of range");
        cp.coords.emplace_back(
            i, col, poly_from_json(c.at("poly"), ctx, static_cast<std::uint32_t>(cp.d)));
    }
    cp.domain_note = j.value("label", "");
    return cp;
}

json sheaf_report_to_json(const SheafReport& rep) {
    json j;
    j["j"] = rep.j;
    j["generic"] = {{"ker", rep.generic_ker}, {"im", rep.generic_im}};
    json pts = json::array();
    for (const auto& sp : rep.points)
        pts.push_back({{"coords", fq_vec_strs(sp.coords)},
                       {"ker", sp.ker},
                       {"im", sp.im},
                       {"soc", sp.soc},
                       {"rad", sp.rad},
                       {"agree", sp.agree}});
    j["points"] = std::move(pts);
    j["certified"] = rep.certified;
    j["sheaf_rank_constant"] = rep.sheaf_rank_constant;
    j["narrative"] = rep.narrative;
    return j;
}

json splitting_to_json(const SplittingType& st) {
    return {{"rank", st.rank()},
            {"twists", st.twists},
            {"hilbert", st.hilbert},
            {"entry_degree", st.entry_degree}};
}

json scan_report_to_json(const ScanReport& rep) {
    json j;
    j["js"] = rep.js;
    json pts = json::array();
    for (const auto& ps : rep.points) {
        json basis = json::array();
        for (std::size_t i = 0; i < ps.point.basis.rows(); ++i) {
            json row = json::array();
            for (std::size_t c = 0; c < ps.point.basis.cols(); ++c)
                row.push_back(ps.point.basis.at(i, c).str());
            basis.push_back(std::move(row));
        }
        pts.push_back({{"basis", std::move(basis)},
                       {"rad", map_to_pairs(ps.rad_dim)},
                       {"soc", map_to_pairs(ps.soc_dim)}});
    }
    j["points"] = std::move(pts);
    j["observed_max_rad"] = map_to_pairs(rep.observed_max_rad);
    j["observed_min_soc"] = map_to_pairs(rep.observed_min_soc);
    j["rad_locus"] = map_to_pairs(rep.rad_locus);
    j["soc_locus"] = map_to_pairs(rep.soc_locus);
    return j;
}

json constancy_to_json(const ConstancyCertificate& c) {
    json dev = json::array(), mis = json::array();
    for (const auto& p : c.deviating) dev.push_back(fq_vec_strs(p));
    for (const auto& p : c.fiber_mismatch) mis.push_back(fq_vec_strs(p));
    return {{"j", c.j},
            {"generic_soc_rank", c.generic_soc_rank},
            {"generic_rad_rank", c.generic_rad_rank},
            {"constant", c.constant},
            {"exhaustive", c.exhaustive},
            {"deviating", std::move(dev)},
            {"fiber_mismatch", std::move(mis)},
            {"narrative", c.narrative}};
}

}  // namespace evs
