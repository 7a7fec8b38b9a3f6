#include "hodgekit/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgekit {

Scalar PolarizationForm::pair(const Vec &u, const Vec &v) const {
    if (u.size() != gram.rows() || v.size() != gram.cols())
        throw std::invalid_argument("PolarizationForm: vector size mismatch");
    Scalar out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) out += u[i] * gram(i, j) * v[j];
    }
    return out;
}

Report PolarizationForm::validate() const {
    Report r;
    r.add("pairing_square", gram.rows() == gram.cols());
    r.add("pairing_real", gram.is_real());
    Mat expect = weight_parity % 2 == 0 ? gram : -gram;
    r.add("pairing_parity", gram.transpose() == expect);
    return r;
}

namespace {

Subspace twisted_conj(const Subspace &s, const Mat *twist) {
    Subspace c = s.conj();
    return twist ? c.apply(*twist) : c;
}

std::pair<int, int> purity_index_range(const Filtration &f, int w) {
    int lo = std::min(f.lo(), w + 1 - f.hi()) - 1;
    int hi = std::max(f.hi(), w + 1 - f.lo()) + 1;
    return {lo, hi};
}

}  // namespace

std::string PurityWitness::describe() const {
    if (ok) return "";
    return "not opposed at p=" + std::to_string(p);
}

PurityWitness is_pure_hs(const Filtration &f, int w, const Mat *twist) {
    if (f.direction() != Direction::decreasing)
        throw std::invalid_argument("is_pure_hs: decreasing filtration required");
    auto [plo, phi] = purity_index_range(f, w);
    std::size_t n = f.ambient_dim();
    for (int p = plo; p <= phi; ++p) {
        const Subspace &fp = f.level(p);
        Subspace other = twisted_conj(f.level(w - p + 1), twist);
        if (fp.dim() + other.dim() != n || meet(fp, other).dim() != 0)
            return {false, p};
    }
    return {};
}

std::string MhsWitness::describe() const {
    if (ok) return "";
    return "gr_" + std::to_string(m) + " not pure of weight " + std::to_string(m) +
           " at p=" + std::to_string(p);
}

MhsWitness is_mhs(const Filtration &f, const Filtration &w, const Mat *twist) {
    if (w.direction() != Direction::increasing)
        throw std::invalid_argument("is_mhs: increasing weight filtration required");
    if (f.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("is_mhs: ambient dimension mismatch");
    Mat amb = twist ? *twist : Mat::identity(f.ambient_dim());
    for (int m = w.lo() - 1; m <= w.hi() + 1; ++m)
        if (twisted_conj(w.level(m), twist) != w.level(m))
            throw std::invalid_argument("is_mhs: weight level " + std::to_string(m) +
                                        " is not stable under the real structure");
    // Highest weight first: failures in the top graded pieces are the
    // informative ones (the lower levels inherit the same defect).
    std::vector<int> support = w.graded_support();
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        int m = *it;
        GradedPiece piece = w.graded(m);
        if (piece.dim() == 0) continue;
        Filtration fm = f.induce_on_piece(piece);
        Mat g = piece.induced_conj(amb);
        PurityWitness pure = is_pure_hs(fm, m, &g);
        if (!pure.ok) return {false, m, pure.p};
    }
    return {};
}

std::string PolarizationWitness::describe() const {
    if (ok) return "";
    return reason + " fails at p=" + std::to_string(p);
}

PolarizationWitness is_polarized_hs(const Filtration &f, int w, const PolarizationForm &s) {
    if (!s.validate().all_pass() || (s.weight_parity - w) % 2 != 0)
        throw std::invalid_argument("is_polarized_hs: pairing parity mismatch");
    if (s.gram.rows() != f.ambient_dim())
        throw std::invalid_argument("is_polarized_hs: pairing size mismatch");
    if (!is_pure_hs(f, w).ok)
        throw std::invalid_argument("is_polarized_hs: filtration is not pure of this weight");

    auto [plo, phi] = purity_index_range(f, w);
    for (int p = plo; p <= phi; ++p) {
        const Mat &a = f.level(p).basis();
        const Mat &b = f.level(w - p + 1).basis();
        if (a.rows() == 0 || b.rows() == 0) continue;
        if (!(a * s.gram * b.transpose()).is_zero()) return {false, p, "orthogonality"};
    }

    for (int p = plo; p <= phi; ++p) {
        int q = w - p;
        Subspace h = meet(f.level(p), f.level(q).conj());
        if (h.dim() == 0) continue;
        Scalar phase = imaginary_power(p - q);
        Mat gram_h(h.dim(), h.dim());
        for (std::size_t a = 0; a < h.dim(); ++a)
            for (std::size_t b = 0; b < h.dim(); ++b)
                gram_h(a, b) = phase * s.pair(h.basis_vector(a), conj(h.basis_vector(b)));
        if (!(gram_h == gram_h.transpose().conj())) return {false, p, "hermitian"};
        for (std::size_t k = 1; k <= h.dim(); ++k) {
            Mat minor(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) minor(a, b) = gram_h(a, b);
            Scalar d = det(minor);
            if (!d.is_real() || d.re <= 0) return {false, p, "positivity"};
        }
    }
    return {};
}

Mat mmh_twist(const NilpotentFamily &fam, const std::vector<std::size_t> &j,
              const std::vector<Rational> *twist_params) {
    if (twist_params && twist_params->size() != fam.size())
        throw std::invalid_argument("mmh_twist: one twist parameter per family member required");
    Mat sum(fam.ambient_dim, fam.ambient_dim);
    for (std::size_t i = 1; i <= fam.size(); ++i) {
        if (std::find(j.begin(), j.end(), i) != j.end()) continue;
        Rational y = twist_params ? (*twist_params)[i - 1] : Rational(1);
        sum += Scalar(Rational(0), 2 * y) * fam.at(i);
    }
    return exp_nilpotent(sum);
}

namespace {

std::string subset_name(const std::vector<std::size_t> &j) {
    std::string s = "mmh_J={";
    for (std::size_t t = 0; t < j.size(); ++t) s += (t ? "," : "") + std::to_string(j[t]);
    return s + "}";
}

}  // namespace

Report check_mmh(const NilpotentFamily &fam, const Filtration &f, int m,
                 const std::vector<std::size_t> &j,
                 const std::vector<Rational> *twist_params) {
    Filtration w = j.empty()
                       ? Filtration::concentrated(Direction::increasing,
                                                  Subspace::full(fam.ambient_dim), 0)
                       : cone_weight_filtration(fam, j, std::vector<Rational>(j.size(), 1));
    Mat amb = mmh_twist(fam, j, twist_params);
    MhsWitness res = is_mhs(f, w.shift(m), &amb);
    Report rep;
    rep.add(subset_name(j), res.ok, res.describe());
    return rep;
}

Report check_mmh_all(const NilpotentFamily &fam, const Filtration &f, int m,
                     const std::vector<Rational> *twist_params) {
    Report rep;
    std::size_t l = fam.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
        std::vector<std::size_t> j;
        for (std::size_t i = 0; i < l; ++i)
            if (mask & (std::size_t{1} << i)) j.push_back(i + 1);
        rep.merge(check_mmh(fam, f, m, j, twist_params));
    }
    return rep;
}

}  // namespace hodgekit
