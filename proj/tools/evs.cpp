#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "evs/catalog.hpp"
#include "evs/json_io.hpp"

namespace {

using namespace evs;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;          // validation failure or error
constexpr int kExitNotCertified = 2;  // computation fine, certification not achieved

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return json::parse(f);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << j.dump(2) << "\n";
}

struct Inputs {
    std::string algebra_path, module_path, locus_path, out_path;
    std::size_t j = 1;
    std::uint32_t k = 1;
    std::uint64_t seed = 1;

    RestrictedLieAlgebra algebra() const { return algebra_from_json(read_json(algebra_path)); }
    UModule module(const RestrictedLieAlgebra& L) const {
        return module_from_json(read_json(module_path), L.ctx);
    }
    ChartParam locus(const RestrictedLieAlgebra& L) const {
        return locus_from_json(read_json(locus_path), L.ctx, L.n);
    }
};

void add_common(CLI::App* cmd, Inputs& in, bool need_locus) {
    cmd->add_option("--algebra", in.algebra_path, "algebra.json")->required();
    cmd->add_option("--module", in.module_path, "module.json")->required();
    auto* loc = cmd->add_option("--locus", in.locus_path, "locus.json");
    if (need_locus) loc->required();
}

/// All parameter points of the locus over F_{p^k}, capped at `samples`
/// (deterministic enumeration order; no locus parameters = the single point).
std::vector<std::vector<Fq>> locus_points(const ChartParam& cp, std::uint32_t k,
                                          std::size_t samples) {
    const FqCtx* F = k == 1 ? cp.ctx : FqCtx::ext(cp.ctx->p, k);
    std::vector<std::vector<Fq>> pts{{}};
    for (std::size_t v = 0; v < cp.d; ++v) {
        std::vector<std::vector<Fq>> next;
        for (const auto& base : pts)
            for (const auto& c : all_field_elements(F)) {
                auto ext = base;
                ext.push_back(c);
                next.push_back(std::move(ext));
                if (next.size() >= samples * 4) break;  // cap growth early
            }
        pts = std::move(next);
    }
    if (pts.size() > samples) pts.resize(samples);
    return pts;
}

int cmd_validate(const std::string& algebra_path, const std::string& module_path,
                 const std::string& out_path) {
    auto L = algebra_from_json(read_json(algebra_path));
    auto rep = validate_algebra(L);
    json out;
    out["algebra"] = {{"pass", rep.pass()}, {"failures", rep.failures}};
    bool ok = rep.pass();
    if (!module_path.empty()) {
        auto M = module_from_json(read_json(module_path), L.ctx);
        auto mrep = validate_module(L, M);
        out["module"] = {{"pass", mrep.pass()}, {"failures", mrep.failures}};
        ok = ok && mrep.pass();
    }
    emit(out, out_path);
    return ok ? kExitOk : kExitFail;
}

int cmd_scan(const Inputs& in, std::size_t j_lo, std::size_t j_hi, std::size_t enumerate_r,
             std::size_t samples) {
    auto L = in.algebra();
    auto M = in.module(L);
    json out;
    bool certified = true;
    if (enumerate_r > 0) {
        auto pts = enumerate_elementary(L, enumerate_r, in.k);
        if (pts.size() > samples) pts.resize(samples);
        if (pts.empty()) throw std::runtime_error("scan: empty point set");
        out["scan"] = scan_report_to_json(scan_ranks(L, M, pts, j_lo, j_hi));
    } else {
        if (in.locus_path.empty())
            throw std::runtime_error("scan: need --locus or --enumerate");
        auto cp = in.locus(L);
        auto ppts = locus_points(cp, in.k, samples);
        std::vector<EPoint> pts;
        for (const auto& p : ppts) pts.push_back(cp.at(p));
        out["scan"] = scan_report_to_json(scan_ranks(L, M, pts, j_lo, j_hi));
        json certs = json::array();
        const bool exhaustive = cp.d == 0 || ppts.size() == locus_points(cp, in.k, SIZE_MAX).size();
        for (std::size_t j = j_lo; j <= j_hi; ++j) {
            auto c = constancy_certificate(L, M, cp, ppts, j, exhaustive);
            certified = certified && c.constant;
            certs.push_back(constancy_to_json(c));
        }
        out["certificates"] = std::move(certs);
    }
    emit(out, in.out_path);
    return certified ? kExitOk : kExitNotCertified;
}

int cmd_splitting(const Inputs& in, const std::string& sheaf, std::size_t d_max) {
    auto L = in.algebra();
    auto M = in.module(L);
    auto sys = homogenize(build_theta(M, in.locus(L)));
    SplittingType st =
        sheaf == "image" ? image_splitting(sys, in.j, d_max) : kernel_splitting(sys, in.j, d_max);
    json out = splitting_to_json(st);
    out["sheaf"] = sheaf;
    out["j"] = in.j;
    emit(out, in.out_path);
    return kExitOk;
}

int cmd_generic_rank(const Inputs& in) {
    auto L = in.algebra();
    auto M = in.module(L);
    auto ts = build_theta(M, in.locus(L));
    auto [ker, im] = generic_ranks(ts, in.j);
    emit({{"j", in.j}, {"ker", ker}, {"im", im}}, in.out_path);
    return kExitOk;
}

int cmd_fiber(const Inputs& in, const std::vector<std::int64_t>& point) {
    auto L = in.algebra();
    auto M = in.module(L);
    auto cp = in.locus(L);
    if (point.size() != cp.d) throw std::runtime_error("fiber: point size != locus params");
    const FqCtx* F = in.k == 1 ? L.ctx : FqCtx::ext(L.p(), in.k);
    std::vector<Fq> pt;
    for (auto c : point) pt.push_back(Fq(F, c));
    auto rep = bundle_certificate(build_theta(M, cp), in.j, {pt});
    emit(sheaf_report_to_json(rep), in.out_path);
    return rep.certified ? kExitOk : kExitNotCertified;
}

int cmd_catalog(const std::string& action, const std::string& id, const std::string& out_dir,
                std::uint64_t seed) {
    if (action == "list") {
        json out = json::array();
        for (const auto& e : catalog_list())
            out.push_back(
                {{"id", e.id}, {"p", e.p}, {"note", e.note}, {"constraints", e.constraints}});
        emit(out, "");
        return kExitOk;
    }
    if (action != "emit") throw std::runtime_error("catalog: action must be list or emit");
    if (id.empty()) throw std::runtime_error("catalog emit: missing id");
    auto b = catalog_build(id, seed);
    const std::string base = (out_dir.empty() ? std::string(".") : out_dir) + "/" + id;
    emit(algebra_to_json(b.L), base + ".algebra.json");
    emit(module_to_json(b.M), base + ".module.json");
    if (b.locus) emit(locus_to_json(*b.locus), base + ".locus.json");
    std::cout << "wrote " << base << ".{algebra,module" << (b.locus ? ",locus" : "")
              << "}.json\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel/image sheaf computations for elementary subalgebras of "
                 "restricted Lie algebras"};
    app.require_subcommand(1);

    Inputs in;
    std::size_t j_lo = 1, j_hi = 0, enumerate_r = 0, samples = 25, d_max = 0;
    std::string sheaf = "kernel", action, id, out_dir, module_path_opt;
    std::vector<std::int64_t> point;

    auto* validate = app.add_subcommand("validate", "validate algebra (and module) JSON");
    validate->add_option("algebra", in.algebra_path, "algebra.json")->required();
    validate->add_option("module", module_path_opt, "module.json");
    validate->add_option("--out", in.out_path);

    auto* scan = app.add_subcommand("scan", "Rad/Soc ranks over sampled elementary points");
    add_common(scan, in, false);
    scan->add_option("--j", j_lo, "lowest j (default 1)");
    scan->add_option("--j-hi", j_hi, "highest j (default = --j)");
    scan->add_option("--enumerate", enumerate_r, "enumerate E(r,g) instead of a locus");
    scan->add_option("--samples", samples, "max points scanned");
    scan->add_option("--k", in.k, "field extension degree (<= 4)");
    scan->add_option("--seed", in.seed);
    scan->add_option("--out", in.out_path);

    auto* split = app.add_subcommand("splitting", "splitting type on a P^1 locus");
    add_common(split, in, true);
    split->add_option("--j", in.j)->required();
    split->add_option("--sheaf", sheaf)->check(CLI::IsMember({"kernel", "image"}));
    split->add_option("--dmax", d_max, "verification depth override");
    split->add_option("--out", in.out_path);

    auto* grank = app.add_subcommand("generic-rank", "kernel/image ranks over the function field");
    add_common(grank, in, true);
    grank->add_option("--j", in.j)->required();
    grank->add_option("--out", in.out_path);

    auto* fiber = app.add_subcommand("fiber", "sheaf fiber vs Soc/Rad at one parameter point");
    add_common(fiber, in, true);
    fiber->add_option("--j", in.j)->required();
    fiber->add_option("--point", point, "parameter coordinates")->expected(0, 8);
    fiber->add_option("--k", in.k, "field extension degree (<= 4)");
    fiber->add_option("--out", in.out_path);

    auto* cat = app.add_subcommand("catalog", "built-in algebra/module/locus bundles");
    cat->add_option("action", action, "list | emit")->required();
    cat->add_option("id", id, "catalog id (for emit)");
    cat->add_option("--out-dir", out_dir, "output directory (default .)");
    cat->add_option("--seed", in.seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (in.k > 4) throw std::runtime_error("field extension degree k must be <= 4");
        if (*validate) return cmd_validate(in.algebra_path, module_path_opt, in.out_path);
        if (*scan) return cmd_scan(in, j_lo, j_hi ? j_hi : j_lo, enumerate_r, samples);
        if (*split) return cmd_splitting(in, sheaf, d_max);
        if (*grank) return cmd_generic_rank(in);
        if (*fiber) return cmd_fiber(in, point);
        if (*cat) return cmd_catalog(action, id, out_dir, in.seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitFail;
}
