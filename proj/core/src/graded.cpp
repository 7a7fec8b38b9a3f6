#include "hodgekit/graded.hpp"

#include <stdexcept>

namespace hodgekit {

namespace {

// Projection V -> V/sub in "pivot-free coordinate" form: kills sub and is
// the identity on the free coordinates of sub's echelon basis.
Mat ambient_projection(const Subspace &sub) {
    std::size_t n = sub.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : sub.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat proj(free_cols.size(), n);
    for (std::size_t r = 0; r < free_cols.size(); ++r) proj(r, free_cols[r]) = Scalar(1);
    // A pivot coordinate e_{p_i} reduces to e_{p_i} - (basis row i), which is
    // -(row i) on the free coordinates.
    for (std::size_t i = 0; i < sub.dim(); ++i)
        for (std::size_t r = 0; r < free_cols.size(); ++r)
            proj(r, sub.pivots()[i]) = -sub.basis()(i, free_cols[r]);
    return proj;
}

}  // namespace

GradedPiece GradedPiece::quotient(const Subspace &sup, const Subspace &sub) {
    if (sup.ambient_dim() != sub.ambient_dim())
        throw std::invalid_argument("GradedPiece: ambient dimension mismatch");
    if (!sup.contains(sub))
        throw std::invalid_argument("GradedPiece: sub is not contained in sup");

    GradedPiece g;
    g.sup_ = sup;
    g.sub_ = sub;
    std::size_t n = sup.ambient_dim();
    std::size_t d = sup.dim() - sub.dim();

    Mat proj = ambient_projection(sub);
    if (sup.is_full()) {
        // Quotient of the ambient: lifts are the standard vectors at the
        // pivot-free coordinates of sub.
        std::vector<bool> is_pivot(n, false);
        for (auto p : sub.pivots()) is_pivot[p] = true;
        std::vector<Vec> lifts;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_pivot[j]) continue;
            Vec e(n);
            e[j] = Scalar(1);
            lifts.push_back(std::move(e));
        }
        g.lift_ = Mat::from_cols(lifts, n);
        g.coord_ = proj;
        return g;
    }

    // General subquotient: echelonize the image of sup in V/sub, then pull
    // each image basis vector back into sup.
    Subspace img = sup.apply(proj);
    if (img.dim() != d) throw std::logic_error("GradedPiece: rank bookkeeping failed");
    Mat sup_cols = sup.basis().transpose();       // n × dim(sup)
    Mat a = proj * sup_cols;                      // (n-|sub|) × dim(sup)
    std::vector<Vec> lifts;
    for (std::size_t i = 0; i < d; ++i) {
        auto x = solve(a, img.basis_vector(i));
        if (!x) throw std::logic_error("GradedPiece: lift solve failed");
        lifts.push_back(sup_cols * (*x));
    }
    g.lift_ = d ? Mat::from_cols(lifts, n) : Mat(n, 0);

    // Coordinate functionals: invert the basis [lifts | sub | completion].
    std::vector<Vec> cols = lifts;
    for (std::size_t i = 0; i < sub.dim(); ++i) cols.push_back(sub.basis_vector(i));
    Subspace spanned = Subspace::span(cols, n);
    for (std::size_t j = 0; j < n && spanned.dim() < n; ++j) {
        Vec e(n);
        e[j] = Scalar(1);
        if (spanned.contains(e)) continue;
        cols.push_back(e);
        spanned = join(spanned, Subspace::span({e}, n));
    }
    Mat basis_mat = Mat::from_cols(cols, n);
    auto inv = inverse(basis_mat);
    if (!inv) throw std::logic_error("GradedPiece: basis completion failed");
    g.coord_ = Mat(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) g.coord_(i, j) = (*inv)(i, j);
    return g;
}

Vec GradedPiece::coords(const Vec &v) const {
    if (!sup_.contains(v))
        throw std::invalid_argument("GradedPiece::coords: vector is not in sup");
    return coord_ * v;
}

Subspace GradedPiece::image_coords(const Subspace &t) const {
    Subspace cut = meet(t, sup_);
    return cut.apply(coord_);
}

Subspace GradedPiece::preimage(const Subspace &tq) const {
    if (tq.ambient_dim() != dim())
        throw std::invalid_argument("GradedPiece::preimage: dimension mismatch");
    return join(sub_, tq.apply(lift_));
}

Mat GradedPiece::induced_map(const Mat &n, const GradedPiece &target) const {
    if (n.cols() != ambient_dim() || n.rows() != target.ambient_dim())
        throw std::invalid_argument("induced_map: shape mismatch");
    if (!target.sup_.contains(sup_.apply(n)))
        throw std::invalid_argument("induced_map: map does not send sup into target sup");
    if (!target.sub_.contains(sub_.apply(n)))
        throw std::invalid_argument("induced_map: map does not preserve sub");
    return target.coord_ * n * lift_;
}

Mat GradedPiece::induced_conj(const Mat &amb) const {
    auto conj_space = [&](const Subspace &s) { return s.conj().apply(amb); };
    if (conj_space(sup_) != sup_ || conj_space(sub_) != sub_)
        throw std::invalid_argument("induced_conj: sup/sub are not conjugation-stable");
    Mat g = coord_ * amb * lift_.conj();
    if (!(g * g.conj() == Mat::identity(dim())))
        throw std::logic_error("induced_conj: induced conjugation is not an involution");
    return g;
}

}  // namespace hodgekit
