#include "hodgekit/local_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgekit {

std::vector<std::size_t> PureLocalModel::all_indices() const {
    std::vector<std::size_t> out(fam.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i + 1;
    return out;
}

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t> &j, std::size_t l) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= l; ++i)
        if (std::find(j.begin(), j.end(), i) == j.end()) out.push_back(i);
    return out;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t l) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << l); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < l; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

std::string subset_tag(const std::vector<std::size_t> &j) {
    std::string s = "{";
    for (std::size_t t = 0; t < j.size(); ++t) s += (t ? "," : "") + std::to_string(j[t]);
    return s + "}";
}

}  // namespace

Report validate_model(const PureLocalModel &m, bool check_polarization) {
    Report r = m.fam.validate();
    r.add("filtration_decreasing", m.f.direction() == Direction::decreasing);
    r.add("filtration_ambient", m.f.ambient_dim() == m.dim());
    auto fv = m.f.validate();
    r.add("filtration_monotone", fv.ok, fv.message);
    if (!r.all_pass()) return r;

    bool griffiths = true;
    std::string gw;
    for (std::size_t i = 1; i <= m.fam.size() && griffiths; ++i)
        for (int p = m.f.lo(); p <= m.f.hi() + 1 && griffiths; ++p)
            if (!m.f.level(p - 1).contains(m.f.level(p).apply(m.fam.at(i)))) {
                griffiths = false;
                gw = "N_" + std::to_string(i) + " does not map F^" + std::to_string(p) +
                     " into F^" + std::to_string(p - 1);
            }
    r.add("griffiths_transversality", griffiths, gw);

    PolarizationForm s = m.s;
    s.weight_parity = m.weight;
    Report sv = s.validate();
    sv.add("pairing_size", m.s.gram.rows() == m.dim());
    r.merge(sv);

    bool flat = true;
    std::string flat_w;
    for (std::size_t i = 1; i <= m.fam.size(); ++i) {
        const Mat &n = m.fam.at(i);
        if (!(n.transpose() * m.s.gram + m.s.gram * n).is_zero()) {
            flat = false;
            flat_w = "S(N_" + std::to_string(i) + " u, v) + S(u, N_" + std::to_string(i) +
                     " v) != 0";
            break;
        }
    }
    r.add("pairing_flat", flat, flat_w);

    if (m.fam.size() > 4) {
        r.add("family_size", false, "at most 4 boundary directions supported");
        return r;
    }
    for (const auto &k : nonempty_subsets(m.fam.size())) {
        auto ck = check_ck_independence(m.fam, k);
        r.add("cone_independence_" + subset_tag(k), ck.ok, ck.ok ? "" : ck.describe());
    }

    if (check_polarization && r.all_pass()) {
        bool pol_ok = true;
        std::string pol_w;
        try {
            auto pw = is_polarized_hs(m.f, m.weight, s);
            pol_ok = pw.ok;
            pol_w = pw.describe();
        } catch (const std::exception &e) {
            pol_ok = false;
            pol_w = e.what();
        }
        r.add("polarization", pol_ok, pol_w);
    }
    return r;
}

StratumRestriction restrict_pure(const PureLocalModel &m, const std::vector<std::size_t> &j) {
    StratumRestriction out;
    out.j = j;
    out.residual_index = complement(j, m.fam.size());
    if (j.empty()) {
        out.w = Filtration::concentrated(Direction::increasing, Subspace::full(m.dim()), 0);
    } else {
        auto ck = check_ck_independence(m.fam, j);
        if (!ck.ok)
            throw std::invalid_argument("restrict_pure: " + ck.describe());
        out.w = cone_weight_filtration(m.fam, j, std::vector<Rational>(j.size(), Rational(1)));
    }

    // Residual directions must act level by level on W(J).
    for (std::size_t i : out.residual_index)
        for (int t = out.w.lo(); t <= out.w.hi(); ++t)
            if (!out.w.level(t).contains(out.w.level(t).apply(m.fam.at(i))))
                throw std::logic_error("restrict_pure: N_" + std::to_string(i) +
                                       " does not preserve W(J) level " + std::to_string(t));

    for (int k : out.w.graded_support()) {
        StratumPiece sp;
        sp.k = k;
        sp.piece = out.w.graded(k);
        if (sp.piece.dim() == 0) continue;
        sp.f = m.f.induce_on_piece(sp.piece);
        for (std::size_t i : out.residual_index) {
            Mat ni = sp.piece.induced_endo(m.fam.at(i));
            // Griffiths transversality descends to the graded piece.
            for (int p = sp.f.lo(); p <= sp.f.hi() + 1; ++p)
                if (!sp.f.level(p - 1).contains(sp.f.level(p).apply(ni)))
                    throw std::logic_error("restrict_pure: graded Griffiths fails at level " +
                                           std::to_string(k));
            sp.residual.push_back(std::move(ni));
        }
        out.pieces.push_back(std::move(sp));
    }
    return out;
}

BaseChangeResult base_change_check(const PureLocalModel &m, const std::vector<std::size_t> &j,
                                   const std::vector<Rational> &lambdas) {
    if (lambdas.size() != m.fam.size())
        throw std::invalid_argument("base_change_check: one lambda per boundary direction");
    Mat full_sum(m.dim(), m.dim());
    Mat res_sum(m.dim(), m.dim());
    for (std::size_t i = 1; i <= m.fam.size(); ++i) {
        Mat t = m.fam.at(i);
        t *= Scalar(lambdas[i - 1]);
        full_sum += t;
        if (std::find(j.begin(), j.end(), i) == j.end()) res_sum += t;
    }
    Mat g = exp_nilpotent(full_sum);
    Mat gj = exp_nilpotent(res_sum);
    StratumRestriction r = restrict_pure(m, j);
    for (const auto &sp : r.pieces)
        if (sp.piece.induced_endo(g) != sp.piece.induced_endo(gj)) return {false, sp.k};
    return {};
}

const GrFGrW *HiggsField::piece(int k, int p) const {
    for (const auto &q : pieces)
        if (q.k == k && q.p == p) return &q;
    return nullptr;
}

const Mat *HiggsField::block(std::size_t i, int k, int p) const {
    for (const auto &b : blocks)
        if (b.i == i && b.k == k && b.p == p) return &b.block;
    return nullptr;
}

namespace {

// Lemma-8 shape consistency: the map induced by N_i on gr_F preserves
// W(J), and its W(J)-graded blocks agree with the θ blocks through the
// F/W exchange isomorphisms.
void verify_higgs_consistency(const PureLocalModel &m, const Filtration &w,
                              const HiggsField &h) {
    if (h.residual_index.empty()) return;
    std::map<std::pair<int, int>, ExchangeIso> exchanges;
    auto exchange = [&](int p, int k) -> const ExchangeIso & {
        auto it = exchanges.find({p, k});
        if (it == exchanges.end())
            it = exchanges.emplace(std::pair{p, k}, bifiltration_exchange(m.f, w, p, k)).first;
        return it->second;
    };
    for (int p = m.f.lo(); p <= m.f.hi() + 1; ++p) {
        GradedPiece fp = m.f.graded(p);
        if (fp.dim() == 0) continue;
        GradedPiece fq = m.f.graded(p - 1);
        Filtration wp = w.induce_on_piece(fp);
        Filtration wq = fq.dim() ? w.induce_on_piece(fq)
                                 : Filtration::constant(Direction::increasing,
                                                        Subspace::zero(0));
        std::vector<int> support = wp.graded_support();
        for (std::size_t t = 0; t < h.residual_index.size(); ++t) {
            const Mat &n = m.fam.at(h.residual_index[t]);
            Mat theta_f = fp.induced_map(n, fq);
            for (int k = wp.lo(); k <= wp.hi(); ++k)
                if (!wq.level(k).contains(wp.level(k).apply(theta_f)))
                    throw std::logic_error("higgs: induced map does not preserve W(J) on gr_F");
            for (int k : support) {
                GradedPiece src = wp.graded(k);
                if (src.dim() == 0) continue;
                const Mat *blk = h.block(h.residual_index[t], k, p);
                Mat theta_blk = blk ? *blk : Mat(0, src.dim());
                if (fq.dim() == 0 || wq.graded(k).dim() == 0) {
                    if (!theta_blk.is_zero())
                        throw std::logic_error("higgs: nonzero block into a zero piece");
                    continue;
                }
                GradedPiece tgt = wq.graded(k);
                Mat block_f = src.induced_map(theta_f, tgt);
                if (!(exchange(p - 1, k).forward * theta_blk ==
                      block_f * exchange(p, k).forward))
                    throw std::logic_error("higgs: graded blocks disagree with gr_F route");
            }
        }
    }
}

}  // namespace

HiggsField higgs(const PureLocalModel &m, const std::vector<std::size_t> &j) {
    StratumRestriction r = restrict_pure(m, j);
    HiggsField h;
    h.residual_index = r.residual_index;
    for (const auto &sp : r.pieces) {
        for (int p = sp.f.lo(); p <= sp.f.hi() + 1; ++p) {
            GradedPiece src = sp.f.graded(p);
            if (src.dim() == 0) continue;
            GrFGrW g;
            g.k = sp.k;
            g.p = p;
            g.dim = src.dim();
            g.lift = sp.piece.lift() * src.lift();
            g.coord = src.coord() * sp.piece.coord();
            h.pieces.push_back(std::move(g));
            GradedPiece tgt = sp.f.graded(p - 1);
            for (std::size_t t = 0; t < h.residual_index.size(); ++t) {
                HiggsBlock b;
                b.i = h.residual_index[t];
                b.k = sp.k;
                b.p = p;
                b.block = src.induced_map(sp.residual[t], tgt);
                h.blocks.push_back(std::move(b));
            }
        }
    }
    verify_higgs_consistency(m, r.w, h);
    return h;
}

PureLocalModel dual_model(const PureLocalModel &m) {
    PureLocalModel d;
    d.fam.ambient_dim = m.dim();
    for (const auto &n : m.fam.mats) d.fam.mats.push_back(-n.transpose());
    d.f = m.f.dual();
    d.weight = -m.weight;
    auto inv = inverse(m.s.gram);
    if (!inv) throw std::invalid_argument("dual_model: degenerate pairing");
    d.s.gram = *inv;
    if (m.weight % 2 != 0) d.s.gram = -d.s.gram;
    d.s.weight_parity = -m.weight;
    return d;
}

bool higgs_duality_check(const PureLocalModel &m, const std::vector<std::size_t> &j) {
    PureLocalModel dm = dual_model(m);
    HiggsField hp = higgs(m, j);
    HiggsField hd = higgs(dm, j);
    std::size_t n = m.dim();

    auto lift_of = [&](const HiggsField &h, int k, int p) {
        const GrFGrW *q = h.piece(k, p);
        return q ? q->lift : Mat(n, 0);
    };
    auto pairing = [&](int k, int p) {  // dual (k,p) against primal (−k,−p)
        return lift_of(hd, k, p).transpose() * lift_of(hp, -k, -p);
    };

    // Graded duality: each pairing matrix is square and invertible.
    for (const auto &q : hd.pieces) {
        Mat d = pairing(q.k, q.p);
        if (d.rows() != d.cols() || rank(d) != d.rows()) return false;
    }
    for (const auto &q : hp.pieces) {
        Mat d = pairing(-q.k, -q.p);
        if (d.rows() != d.cols() || rank(d) != d.rows()) return false;
    }

    for (const auto &b : hd.blocks) {
        Mat lhs = b.block.transpose() * pairing(b.k, b.p - 1);
        const Mat *pb = hp.block(b.i, -b.k, -b.p + 1);
        std::size_t src_dim = pairing(b.k, b.p - 1).cols();
        Mat theta = pb ? *pb : Mat(pairing(b.k, b.p).cols(), src_dim);
        Mat rhs = -(pairing(b.k, b.p) * theta);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

PolarizationForm induced_graded_pairing(const PureLocalModel &m,
                                        const std::vector<std::size_t> &j, int k) {
    StratumRestriction r = restrict_pure(m, j);
    Mat nj(m.dim(), m.dim());
    if (!j.empty()) nj = m.fam.cone(j, std::vector<Rational>(j.size(), Rational(1)));

    auto gram_at = [&](int level) {
        GradedPiece piece = r.w.graded(level);
        Mat nk = pow(nj, static_cast<unsigned>(level));
        // Well-definedness: W_{k−1} pairs to zero against N^k·W_k on
        // either side.
        const Mat &below = r.w.level(level - 1).basis();
        const Mat &at = r.w.level(level).basis();
        if (!(below * m.s.gram * (nk * at.transpose())).is_zero() ||
            !(at * m.s.gram * (nk * below.transpose())).is_zero())
            throw std::logic_error("induced_graded_pairing: candidate pairing is not "
                                   "well defined at level " +
                                   std::to_string(level));
        const Mat &lift = piece.lift();
        return lift.transpose() * m.s.gram * (nk * lift);
    };

    PolarizationForm out;
    out.weight_parity = m.weight + k;
    if (k >= 0) {
        out.gram = gram_at(k);
    } else {
        GradedPiece top = r.w.graded(-k);
        GradedPiece bot = r.w.graded(k);
        Mat a = top.induced_map(pow(nj, static_cast<unsigned>(-k)), bot);
        auto ainv = inverse(a);
        if (!ainv)
            throw std::logic_error("induced_graded_pairing: graded N^k is not invertible");
        Mat g = gram_at(-k);
        out.gram = ainv->transpose() * g * (*ainv);
    }

    Mat expect = out.weight_parity % 2 == 0 ? out.gram : -out.gram;
    if (!(out.gram.transpose() == expect))
        throw std::logic_error("induced_graded_pairing: parity violated");

    // Flatness for the residual directions.
    for (const auto &sp : r.pieces) {
        if (sp.k != k) continue;
        for (const auto &ni : sp.residual)
            if (!(ni.transpose() * out.gram + out.gram * ni).is_zero())
                throw std::logic_error("induced_graded_pairing: flatness fails at level " +
                                       std::to_string(k));
    }
    return out;
}

}  // namespace hodgekit
