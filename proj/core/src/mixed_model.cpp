#include "hodgekit/mixed_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgekit {

const GradedModelEntry *MixedLocalModel::entry(int m) const {
    for (const auto &e : graded)
        if (e.m == m) return &e;
    return nullptr;
}

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t> &j, std::size_t l) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= l; ++i)
        if (std::find(j.begin(), j.end(), i) == j.end()) out.push_back(i);
    return out;
}

}  // namespace

MixedLocalModel make_mixed(NilpotentFamily fam, Filtration f, Filtration w,
                           const std::map<int, Mat> &pairings,
                           const std::map<int, int> &weights) {
    MixedLocalModel mx;
    mx.fam = std::move(fam);
    mx.f = std::move(f);
    mx.w = std::move(w);
    for (int m : mx.w.graded_support()) {
        GradedModelEntry e;
        e.m = m;
        e.piece = mx.w.graded(m);
        if (e.piece.dim() == 0) continue;
        auto pit = pairings.find(m);
        auto wit = weights.find(m);
        if (pit == pairings.end() || wit == weights.end())
            throw std::invalid_argument("make_mixed: missing pairing or weight for level " +
                                        std::to_string(m));
        if (pit->second.rows() != e.piece.dim() || pit->second.cols() != e.piece.dim())
            throw std::invalid_argument("make_mixed: pairing size mismatch at level " +
                                        std::to_string(m));
        e.model.fam.ambient_dim = e.piece.dim();
        for (std::size_t i = 1; i <= mx.fam.size(); ++i)
            e.model.fam.mats.push_back(e.piece.induced_endo(mx.fam.at(i)));
        e.model.f = mx.f.induce_on_piece(e.piece);
        e.model.s.gram = pit->second;
        e.model.s.weight_parity = wit->second;
        e.model.weight = wit->second;
        mx.graded.push_back(std::move(e));
    }
    return mx;
}

MixedLocalModel mixed_from_pure(const PureLocalModel &m, int at) {
    Filtration w = Filtration::concentrated(Direction::increasing, Subspace::full(m.dim()), at);
    return make_mixed(m.fam, m.f, w, {{at, m.s.gram}}, {{at, m.weight}});
}

Report validate_mixed(const MixedLocalModel &mx, bool with_mmh) {
    Report r = mx.fam.validate();
    r.add("hodge_filtration_decreasing", mx.f.direction() == Direction::decreasing);
    r.add("weight_filtration_increasing", mx.w.direction() == Direction::increasing);
    r.add("ambient_consistent",
          mx.f.ambient_dim() == mx.dim() && mx.w.ambient_dim() == mx.dim());
    auto fv = mx.f.validate();
    r.add("hodge_filtration_monotone", fv.ok, fv.message);
    auto wv = mx.w.validate();
    r.add("weight_filtration_monotone", wv.ok, wv.message);
    if (!r.all_pass()) return r;

    bool stable = true;
    std::string sw;
    for (int t = mx.w.lo(); t <= mx.w.hi() && stable; ++t)
        if (mx.w.level(t).conj() != mx.w.level(t)) {
            stable = false;
            sw = "W_" + std::to_string(t) + " is not defined over the reals";
        }
    r.add("weight_levels_real", stable, sw);

    bool preserved = true;
    std::string pw;
    for (std::size_t i = 1; i <= mx.fam.size() && preserved; ++i)
        for (int t = mx.w.lo(); t <= mx.w.hi() && preserved; ++t)
            if (!mx.w.level(t).contains(mx.w.level(t).apply(mx.fam.at(i)))) {
                preserved = false;
                pw = "N_" + std::to_string(i) + " does not preserve W_" + std::to_string(t);
            }
    r.add("weight_levels_preserved", preserved, pw);
    if (!r.all_pass()) return r;

    std::size_t total = 0;
    for (const auto &e : mx.graded) total += e.piece.dim();
    r.add("graded_dimensions", total == mx.dim());

    for (const auto &e : mx.graded) {
        std::string tag = "gr_" + std::to_string(e.m) + ".";
        bool matches = e.model.dim() == e.piece.dim() &&
                       e.model.f == mx.f.induce_on_piece(e.piece);
        r.add(tag + "induced_data", matches);
        Report mv = validate_model(e.model);
        for (auto &c : mv.checks) c.name = tag + c.name;
        r.merge(mv);
        if (with_mmh) {
            Report mm = check_mmh_all(e.model.fam, e.model.f, e.model.weight);
            for (auto &c : mm.checks) c.name = tag + c.name;
            r.merge(mm);
        }
    }
    return r;
}

Filtration target_weight_filtration(const MixedLocalModel &mx, const QuotientTarget &a) {
    std::map<int, Subspace> levels;
    for (int t = mx.w.lo() - 1; t <= mx.w.hi() + 1; ++t) {
        Subspace acc = Subspace::zero(a.dim);
        for (const auto &[p, blk] : a.blocks) {
            GradedPiece fp = mx.f.graded(p);
            if (fp.dim() == 0) continue;
            if (blk.cols() != fp.dim() || blk.rows() != a.dim)
                throw std::invalid_argument("target_weight_filtration: block shape mismatch "
                                            "at p=" + std::to_string(p));
            acc = join(acc, fp.image_coords(mx.w.level(t)).apply(blk));
        }
        levels.emplace(t, acc);
    }
    return Filtration(Direction::increasing, a.dim, std::move(levels));
}

RefinedRestriction build_refinement(const MixedLocalModel &mx,
                                    const std::vector<std::size_t> &j) {
    RefinedRestriction out;
    out.j = j;
    std::vector<Rational> ones(j.size(), Rational(1));

    std::map<int, Subspace> m_levels;
    std::map<int, int> phi_values;
    int c = 0;
    m_levels.emplace(0, mx.w.level(mx.w.lo()));
    phi_values.emplace(mx.w.lo(), 0);

    for (int m = mx.w.lo() + 1; m <= mx.w.hi(); ++m) {
        GradedPiece piece = mx.w.graded(m);
        if (piece.dim() > 0) {
            const GradedModelEntry *e = mx.entry(m);
            if (!e) throw std::logic_error("build_refinement: missing graded entry");
            if (!j.empty()) {
                auto ck = check_ck_independence(e->model.fam, j);
                if (!ck.ok)
                    throw std::invalid_argument("build_refinement: level " + std::to_string(m) +
                                                ": " + ck.describe());
            }
            Filtration wj =
                j.empty() ? Filtration::concentrated(Direction::increasing,
                                                     Subspace::full(piece.dim()), 0)
                          : cone_weight_filtration(e->model.fam, j, ones);
            Subspace last = wj.level(wj.lo() - 1);
            for (int l = wj.lo(); l <= wj.hi(); ++l) {
                if (wj.level(l) == last) continue;
                last = wj.level(l);
                ++c;
                m_levels.emplace(c, piece.preimage(last));
                out.l_of.emplace(c, l);
            }
            out.wj.emplace(m, std::move(wj));
        } else {
            // W_m = W_{m−1}: φ still has to grow strictly, so repeat the
            // current top of M under a fresh index (gr of M is zero there).
            ++c;
            m_levels.emplace(c, m_levels.rbegin()->second);
        }
        phi_values.emplace(m, c);
    }

    out.m_filt = Filtration(Direction::increasing, mx.dim(), std::move(m_levels));
    out.phi = IndexMap(std::move(phi_values));

    Refinement ref{mx.w, out.m_filt, out.phi};
    Report val = validate_refinement(ref);
    if (!val.all_pass())
        throw std::logic_error("build_refinement: output is not a valid refinement");

    // gr_k^M gr_{m(k)}^W = gr_{l(k)}^{W(J)} gr_{m(k)}^W, as subspaces of
    // the graded-piece coordinates, and matching F-graded dimensions on
    // the two sides of gr_k^M V ≅ gr_k^M gr_{m(k)}^W V.
    for (const auto &[k, l] : out.l_of) {
        int m = m_of(out.phi, k);
        GradedPiece piece = mx.w.graded(m);
        const Filtration &wj = out.wj.at(m);
        if (piece.image_coords(out.m_filt.level(k)) != wj.level(l) ||
            piece.image_coords(out.m_filt.level(k - 1)) != wj.level(l - 1))
            throw std::logic_error("build_refinement: pullback identity fails at k=" +
                                   std::to_string(k));
        for (int p = mx.f.lo(); p <= mx.f.hi() + 1; ++p) {
            IteratedGraded a(mx.dim(), {mx.f, out.m_filt});
            a.take(1, k);
            a.take(0, p);
            IteratedGraded b(mx.dim(), {mx.f, out.m_filt, mx.w});
            b.take(2, m);
            b.take(1, k);
            b.take(0, p);
            if (a.dim() != b.dim())
                throw std::logic_error("build_refinement: F-graded ranks differ at k=" +
                                       std::to_string(k) + ", p=" + std::to_string(p));
        }
    }
    return out;
}

MixedLocalModel phi_restrict(const MixedLocalModel &mx, const std::vector<std::size_t> &j) {
    RefinedRestriction rr = build_refinement(mx, j);
    std::vector<std::size_t> residual = complement(j, mx.fam.size());

    MixedLocalModel out;
    out.fam.ambient_dim = mx.dim();
    for (std::size_t i : residual) out.fam.mats.push_back(mx.fam.at(i));
    out.f = mx.f;
    out.w = rr.m_filt;

    for (const auto &[k, l] : rr.l_of) {
        GradedModelEntry e;
        e.m = k;
        e.piece = out.w.graded(k);
        if (e.piece.dim() == 0) continue;
        e.model.fam.ambient_dim = e.piece.dim();
        for (std::size_t i : residual)
            e.model.fam.mats.push_back(e.piece.induced_endo(mx.fam.at(i)));
        e.model.f = mx.f.induce_on_piece(e.piece);

        // Transport the graded pairing of gr_{l(k)}^{W(J)} gr_{m(k)}^W
        // through the canonical isomorphism with gr_k^M V.
        int m = m_of(rr.phi, k);
        const GradedModelEntry *src = mx.entry(m);
        if (!src) throw std::logic_error("phi_restrict: missing graded entry");
        PolarizationForm s_l = induced_graded_pairing(src->model, j, l);

        Mat u = out.w.level(k).basis().transpose();  // spans M_k
        StratumRestriction sr = restrict_pure(src->model, j);
        GradedPiece wj_piece = sr.w.graded(l);
        Mat p_m = e.piece.coord() * u;
        Mat p_wj = wj_piece.coord() * (src->piece.coord() * u);
        Mat t = canonical_map(p_m, p_wj);
        if (rank(t) != e.piece.dim())
            throw std::logic_error("phi_restrict: transport map is not invertible");

        e.model.s.gram = t.transpose() * s_l.gram * t;
        e.model.s.weight_parity = s_l.weight_parity;
        e.model.weight = src->model.weight + l;
        out.graded.push_back(std::move(e));
    }
    std::sort(out.graded.begin(), out.graded.end(),
              [](const GradedModelEntry &a, const GradedModelEntry &b) { return a.m < b.m; });
    return out;
}

std::string HypothesisResult::describe() const {
    if (ok) return "";
    return "composite nonzero for direction " + std::to_string(i) + " at (m,p)=(" +
           std::to_string(m) + "," + std::to_string(p) + ")";
}

HypothesisResult check_theorem2_hypothesis(const MixedLocalModel &mx, const QuotientTarget &a) {
    // π must be surjective onto the target.
    {
        Subspace img = Subspace::zero(a.dim);
        for (const auto &[p, blk] : a.blocks) img = join(img, image(blk));
        if (img.dim() != a.dim)
            throw std::invalid_argument("check_theorem2_hypothesis: quotient map is not "
                                        "surjective");
    }
    Filtration wa = target_weight_filtration(mx, a);

    for (const auto &e : mx.graded) {
        for (std::size_t i = 1; i <= e.model.fam.size(); ++i) {
            const Mat &n = e.model.fam.at(i);
            for (int p = e.model.f.lo(); p <= e.model.f.hi() + 1; ++p) {
                GradedPiece src = e.model.f.graded(p);
                GradedPiece tgt = e.model.f.graded(p - 1);
                if (src.dim() == 0 || tgt.dim() == 0) continue;
                Mat theta = src.induced_map(n, tgt);

                GradedPiece fq = mx.f.graded(p - 1);
                Filtration w_on_fq = mx.w.induce_on_piece(fq);
                GradedPiece gw = w_on_fq.graded(e.m);
                GradedPiece aw = wa.graded(e.m);
                if (gw.dim() == 0 || aw.dim() == 0) continue;

                Mat pi_blk = a.blocks.count(p - 1) ? a.blocks.at(p - 1) : Mat(a.dim, fq.dim());
                Mat pi_gr = aw.coord() * (pi_blk * gw.lift());

                ExchangeIso ex = bifiltration_exchange(mx.f, mx.w, p - 1, e.m);
                Mat composite = pi_gr * ex.forward * theta;
                if (!composite.is_zero())
                    return {false, i, e.m, p};
            }
        }
    }
    return {};
}

bool check_restriction_preserves(const MixedLocalModel &mx, const QuotientTarget &a,
                                 const std::vector<std::size_t> &j) {
    if (!check_theorem2_hypothesis(mx, a).ok)
        throw std::invalid_argument("check_restriction_preserves: hypothesis fails upstream");
    MixedLocalModel restricted = phi_restrict(mx, j);
    return check_theorem2_hypothesis(restricted, a).ok;
}

}  // namespace hodgekit
