#include "hodgekit/refinement.hpp"

#include <stdexcept>

namespace hodgekit {

IndexMap::IndexMap(std::map<int, int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("IndexMap: empty value table");
    int prev_k = 0, prev_v = 0;
    bool first = true;
    for (const auto &[m, v] : values_) {
        if (!first) {
            if (m != prev_k + 1)
                throw std::invalid_argument("IndexMap: window must be a consecutive run");
            if (v <= prev_v)
                throw std::invalid_argument("IndexMap: values must be strictly increasing");
        }
        prev_k = m;
        prev_v = v;
        first = false;
    }
}

int IndexMap::operator()(int m) const {
    if (m <= lo()) return values_.begin()->second - (lo() - m);
    if (m >= hi()) return values_.rbegin()->second + (m - hi());
    return values_.at(m);
}

int m_of(const IndexMap &phi, int k) {
    if (k <= phi(phi.lo())) return phi.lo() - (phi(phi.lo()) - k);
    if (k > phi(phi.hi())) return phi.hi() + (k - phi(phi.hi()));
    for (int m = phi.lo() + 1; m <= phi.hi(); ++m)
        if (k <= phi(m)) return m;
    throw std::logic_error("m_of: unreachable");
}

Report validate_refinement(const Refinement &r) {
    Report rep;
    rep.add("base_increasing", r.base.direction() == Direction::increasing);
    rep.add("fine_increasing", r.fine.direction() == Direction::increasing);
    auto bv = r.base.validate();
    rep.add("base_monotone", bv.ok, bv.message);
    auto fv = r.fine.validate();
    rep.add("fine_monotone", fv.ok, fv.message);
    if (!rep.all_pass()) return rep;

    bool interp = true;
    std::string interp_witness;
    for (int m = r.base.lo() - 1; m <= r.base.hi() + 1; ++m) {
        if (r.base.level(m) != r.fine.level(r.phi(m))) {
            interp = false;
            interp_witness = "W_" + std::to_string(m) + " != M_" + std::to_string(r.phi(m));
            break;
        }
    }
    rep.add("interpolation", interp, interp_witness);

    bool chain = true;
    std::string chain_witness;
    for (int k = r.fine.lo() - 1; k <= r.fine.hi() + 1 && chain; ++k) {
        int m = m_of(r.phi, k);
        const Subspace &w_lo = r.base.level(m - 1);
        const Subspace &w_hi = r.base.level(m);
        if (!r.fine.level(k - 1).contains(w_lo) || !r.fine.level(k).contains(r.fine.level(k - 1)) ||
            !w_hi.contains(r.fine.level(k))) {
            chain = false;
            chain_witness = "chain fails at k=" + std::to_string(k);
        }
    }
    rep.add("level_chain", chain, chain_witness);
    return rep;
}

RefinementIso refinement_iso(const Refinement &r, const Filtration &f, int k, int p) {
    if (f.ambient_dim() != r.base.ambient_dim())
        throw std::invalid_argument("refinement_iso: ambient dimension mismatch");
    Report val = validate_refinement(r);
    if (!val.all_pass())
        throw std::invalid_argument("refinement_iso: invalid refinement");

    int m = m_of(r.phi, k);
    // All five graded pieces receive the surjection from F^p ∩ M_k.
    Subspace u = meet(f.level(p), r.fine.level(k));
    Mat u_cols = u.basis().transpose();

    auto presentation = [&](std::initializer_list<std::pair<std::size_t, int>> steps) {
        IteratedGraded g(f.ambient_dim(), {f, r.fine, r.base});
        std::vector<std::pair<std::size_t, int>> v(steps);
        for (std::size_t s = 0; s < v.size(); ++s) {
            // only the filtrations still to be taken need re-inducing
            std::vector<std::size_t> keep;
            for (std::size_t t = s + 1; t < v.size(); ++t) keep.push_back(v[t].first);
            g.take(v[s].first, v[s].second, keep);
        }
        return std::pair<Mat, std::size_t>{g.coord() * u_cols, g.dim()};
    };

    auto [p1, d1] = presentation({{1, k}, {0, p}});
    auto [p2, d2] = presentation({{2, m}, {1, k}, {0, p}});
    auto [p3, d3] = presentation({{2, m}, {0, p}, {1, k}});
    auto [p4, d4] = presentation({{0, p}, {2, m}, {1, k}});
    auto [p5, d5] = presentation({{0, p}, {1, k}});
    if (d1 != d2 || d1 != d3 || d1 != d4 || d1 != d5)
        throw std::logic_error("refinement_iso: graded dimensions disagree");

    RefinementIso iso;
    iso.dim = d1;
    iso.map1 = canonical_map(p1, p2);
    iso.map2 = canonical_map(p1, p5);
    iso.map3 = canonical_map(p2, p3);
    iso.map4 = canonical_map(p3, p4);
    iso.map5 = canonical_map(p5, p4);
    for (const Mat *mp : {&iso.map1, &iso.map2, &iso.map3, &iso.map4, &iso.map5})
        if (rank(*mp) != iso.dim)
            throw std::logic_error("refinement_iso: a canonical map is not invertible");
    iso.pentagon_ok = iso.map4 * iso.map3 * iso.map1 == iso.map5 * iso.map2;
    return iso;
}

}  // namespace hodgekit
