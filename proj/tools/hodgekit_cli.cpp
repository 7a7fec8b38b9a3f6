// hodgekit command line: model-file checks and the worked demonstrations.
// Every subcommand prints a report (text or --json) and exits 0 iff all
// checks pass.

#include <CLI11.hpp>
#include <cstdio>
#include <hodgekit/io.hpp>
#include <hodgekit/surface.hpp>
#include <hodgekit/zinf.hpp>

using namespace hodgekit;

namespace {

std::string render_vec(const Vec &v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s + "]";
}

std::string render_basis(const Subspace &s) {
    if (s.dim() == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i)
        out += (i ? ", " : "") + render_vec(s.basis_vector(i));
    return out;
}

// One check per distinct subspace, with the index range it occupies.
Report filtration_report(const Filtration &w, const std::string &letter) {
    Report rep;
    int lo = w.lo(), hi = w.hi();
    int run_start = lo;
    for (int k = lo; k <= hi; ++k) {
        bool last = k == hi || w.level(k + 1) != w.level(k);
        if (!last) continue;
        std::string name = letter + "_" + std::to_string(run_start);
        if (k != run_start) name += ".." + std::to_string(k);
        rep.add(name, true,
                "dim " + std::to_string(w.level(k).dim()) + ": " + render_basis(w.level(k)));
        run_start = k + 1;
    }
    return rep;
}

int emit(const Report &rep, bool json, const std::string &tail = "") {
    if (json)
        std::fputs(rep.json().c_str(), stdout);
    else {
        std::fputs(rep.text().c_str(), stdout);
        if (!tail.empty()) std::printf("%s\n", tail.c_str());
    }
    return rep.all_pass() ? 0 : 1;
}

Report check_model(const ModelFile &mf) {
    if (mf.is_pure()) {
        const PureLocalModel &m = mf.pure();
        Report rep = validate_model(m);
        if (rep.all_pass()) rep.merge(check_mmh_all(m.fam, m.f, m.weight));
        return rep;
    }
    return validate_mixed(mf.mixed(), /*with_mmh=*/true);
}

Report restrict_report(const ModelFile &mf, const std::vector<std::size_t> &j) {
    Report rep;
    if (mf.is_pure()) {
        StratumRestriction r = restrict_pure(mf.pure(), j);
        for (const auto &sp : r.pieces)
            rep.add("gr_" + std::to_string(sp.k), true,
                    "rank " + std::to_string(sp.piece.dim()) + ", residual directions " +
                        std::to_string(sp.residual.size()));
        return rep;
    }
    MixedLocalModel st = phi_restrict(mf.mixed(), j);
    rep.add("restriction_built", true,
            "dim " + std::to_string(st.dim()) + ", " + std::to_string(st.graded.size()) +
                " graded entries");
    rep.merge(validate_mixed(st));
    return rep;
}

Report refine_report(const MixedLocalModel &mx, const std::vector<std::size_t> &j) {
    RefinedRestriction rr = build_refinement(mx, j);
    Refinement r{mx.w, rr.m_filt, rr.phi};
    Report rep = validate_refinement(r);
    for (const auto &[k, l] : rr.l_of)
        rep.add("M_" + std::to_string(k), true,
                "inside W_" + std::to_string(m_of(rr.phi, k)) + ", cone level " +
                    std::to_string(l) + ", dim " + std::to_string(rr.m_filt.level(k).dim()));
    return rep;
}

Report higgs_report(const PureLocalModel &m, const std::vector<std::size_t> &j) {
    HiggsField h = higgs(m, j);
    Report rep;
    rep.add("higgs_consistency", true,
            std::to_string(h.pieces.size()) + " graded pieces, " +
                std::to_string(h.blocks.size()) + " blocks");
    for (const auto &b : h.blocks) {
        std::string name = "theta_" + std::to_string(b.i) + "_k" + std::to_string(b.k) + "_p" +
                           std::to_string(b.p);
        rep.add(name, true,
                std::to_string(b.block.rows()) + "x" + std::to_string(b.block.cols()) +
                    (b.block.is_zero() ? " zero" : ""));
    }
    return rep;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact filtered linear algebra checks"};
    app.require_subcommand(1);

    std::string model_path, matrix_path, quotient_path;
    std::vector<std::size_t> jset;
    bool json = false;
    int center = 0;
    long n_param = 1, b_param = 0;
    std::size_t count = 100;

    auto add_json = [&](CLI::App *c) { c->add_flag("--json", json, "machine-readable report"); };
    auto add_j = [&](CLI::App *c) {
        c->add_option("--j", jset, "boundary direction indices (1-based)")->delimiter(',');
    };

    CLI::App *check = app.add_subcommand("check", "validate a model file");
    check->add_option("file", model_path)->required();
    add_json(check);

    CLI::App *weight = app.add_subcommand("weight", "weight filtration of a nilpotent matrix");
    weight->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    weight->add_option("--center", center, "center of symmetry");
    add_json(weight);

    CLI::App *restr = app.add_subcommand("restrict", "restrict a model to a boundary stratum");
    restr->add_option("file", model_path)->required();
    add_j(restr);
    add_json(restr);

    CLI::App *refine = app.add_subcommand("refine", "refinement of W by the cone filtrations");
    refine->add_option("file", model_path)->required();
    add_j(refine);
    add_json(refine);

    CLI::App *hg = app.add_subcommand("higgs", "graded Higgs field blocks of a pure model");
    hg->add_option("file", model_path)->required();
    add_j(hg);
    add_json(hg);

    CLI::App *hyp = app.add_subcommand("hypothesis", "zero-composite hypothesis for a quotient");
    hyp->add_option("model", model_path)->required();
    hyp->add_option("--quotient", quotient_path, "quotient target file")->required();
    add_json(hyp);

    CLI::App *ex2 = app.add_subcommand("example2", "ruled-surface counterexample walkthrough");
    ex2->add_option("--n", n_param, "surface parameter (>= 1)")->required();
    ex2->add_option("--b", b_param, "Hodge index of the sub-bundle");
    add_json(ex2);

    CLI::App *zdemo = app.add_subcommand("demo-zinf", "degenerate filtration over Z^infinity");
    zdemo->add_option("--count", count, "number of sampled levels");
    add_json(zdemo);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return emit(check_model(parse_model(model_path)), json);
        if (weight->parsed()) {
            Filtration w = weight_filtration(parse_matrix_file(matrix_path), center);
            return emit(filtration_report(w, "W"), json);
        }
        if (restr->parsed()) return emit(restrict_report(parse_model(model_path), jset), json);
        if (refine->parsed()) {
            ModelFile mf = parse_model(model_path);
            if (mf.is_pure()) throw std::invalid_argument("refine: mixed model file required");
            return emit(refine_report(mf.mixed(), jset), json);
        }
        if (hg->parsed()) {
            ModelFile mf = parse_model(model_path);
            if (!mf.is_pure()) throw std::invalid_argument("higgs: pure model file required");
            return emit(higgs_report(mf.pure(), jset), json);
        }
        if (hyp->parsed()) {
            ModelFile mf = parse_model(model_path);
            if (mf.is_pure()) throw std::invalid_argument("hypothesis: mixed model file required");
            QuotientTarget a = parse_quotient(quotient_path, mf.mixed());
            HypothesisResult res = check_theorem2_hypothesis(mf.mixed(), a);
            Report rep;
            rep.add("zero_composite", res.ok, res.describe());
            return emit(rep, json);
        }
        if (ex2->parsed()) {
            Report rep = verify_example2(n_param, b_param);
            std::string tail = rep.all_pass() ? "conclusion violated: A* not nef" : "";
            return emit(rep, json, tail);
        }
        if (zdemo->parsed()) return emit(zinf_gr_demo(count), json);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
