#include "hodgekit/filtration.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgekit {

Filtration::Filtration(Direction dir, std::size_t ambient_dim, std::map<int, Subspace> levels)
    : dir_(dir), ambient_(ambient_dim), levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("Filtration: at least one level required");
    for (const auto &[k, s] : levels_)
        if (s.ambient_dim() != ambient_)
            throw std::invalid_argument("Filtration: level ambient mismatch at index " +
                                        std::to_string(k));
}

Filtration Filtration::constant(Direction dir, const Subspace &s) {
    return Filtration(dir, s.ambient_dim(), {{0, s}});
}

Filtration Filtration::concentrated(Direction dir, const Subspace &s, int at) {
    Subspace z = Subspace::zero(s.ambient_dim());
    if (dir == Direction::increasing)
        return Filtration(dir, s.ambient_dim(), {{at - 1, z}, {at, s}});
    return Filtration(dir, s.ambient_dim(), {{at, s}, {at + 1, z}});
}

const Subspace &Filtration::level(int k) const {
    auto it = levels_.lower_bound(k);
    if (it != levels_.end() && it->first == k) return it->second;
    if (it == levels_.end()) return levels_.rbegin()->second;
    if (it == levels_.begin()) return it->second;
    return std::prev(it)->second;
}

FiltrationReport Filtration::validate() const {
    FiltrationReport r;
    const Subspace *prev = nullptr;
    int prev_k = 0;
    for (const auto &[k, s] : levels_) {
        if (prev) {
            bool ok = dir_ == Direction::decreasing ? prev->contains(s) : s.contains(*prev);
            if (!ok) {
                r.ok = false;
                r.bad_low = prev_k;
                r.bad_high = k;
                r.message = "monotonicity violated between levels " + std::to_string(prev_k) +
                            " and " + std::to_string(k);
                return r;
            }
        }
        prev = &s;
        prev_k = k;
    }
    return r;
}

GradedPiece Filtration::graded(int k) const {
    if (dir_ == Direction::decreasing) return GradedPiece::quotient(level(k), level(k + 1));
    return GradedPiece::quotient(level(k), level(k - 1));
}

std::vector<int> Filtration::graded_support() const {
    std::vector<int> out;
    for (int k = lo() - 1; k <= hi() + 1; ++k) {
        int other = dir_ == Direction::decreasing ? k + 1 : k - 1;
        if (level(k).dim() != level(other).dim()) out.push_back(k);
    }
    return out;
}

Filtration Filtration::induce_on_sub(const Subspace &s) const {
    if (s.ambient_dim() != ambient_)
        throw std::invalid_argument("induce_on_sub: ambient dimension mismatch");
    std::map<int, Subspace> lv;
    for (const auto &[k, sub] : levels_) lv.emplace(k, meet(sub, s));
    return Filtration(dir_, ambient_, std::move(lv));
}

Filtration Filtration::induce_on_piece(const GradedPiece &piece) const {
    if (piece.ambient_dim() != ambient_)
        throw std::invalid_argument("induce_on_piece: ambient dimension mismatch");
    std::map<int, Subspace> lv;
    for (const auto &[k, sub] : levels_) lv.emplace(k, piece.image_coords(sub));
    return Filtration(dir_, piece.dim(), std::move(lv));
}

Filtration Filtration::induce_on_quotient(const Subspace &s) const {
    return induce_on_piece(GradedPiece::quotient(Subspace::full(ambient_), s));
}

Filtration Filtration::dual() const {
    std::map<int, Subspace> lv;
    if (dir_ == Direction::decreasing) {
        for (int p = 1 - hi(); p <= 1 - lo(); ++p) lv.emplace(p, level(-p + 1).annihilator());
    } else {
        for (int m = -hi() - 1; m <= -lo() - 1; ++m) lv.emplace(m, level(-m - 1).annihilator());
    }
    return Filtration(dir_, ambient_, std::move(lv));
}

Filtration Filtration::shift(int m) const {
    std::map<int, Subspace> lv;
    for (const auto &[k, s] : levels_) lv.emplace(k + m, s);
    return Filtration(dir_, ambient_, std::move(lv));
}

Filtration Filtration::apply(const Mat &g) const {
    std::map<int, Subspace> lv;
    for (const auto &[k, s] : levels_) lv.emplace(k, s.apply(g));
    return Filtration(dir_, g.rows(), std::move(lv));
}

bool operator==(const Filtration &a, const Filtration &b) {
    if (a.dir_ != b.dir_ || a.ambient_ != b.ambient_) return false;
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    for (int k = lo; k <= hi; ++k)
        if (a.level(k) != b.level(k)) return false;
    return true;
}

IteratedGraded::IteratedGraded(std::size_t ambient_dim, std::vector<Filtration> filtrations)
    : ambient_(ambient_dim),
      coord_(Mat::identity(ambient_dim)),
      lift_(Mat::identity(ambient_dim)),
      filts_(std::move(filtrations)) {
    for (const auto &f : filts_)
        if (f.ambient_dim() != ambient_)
            throw std::invalid_argument("IteratedGraded: filtration ambient mismatch");
}

void IteratedGraded::take(std::size_t which, int index) {
    std::vector<std::size_t> keep(filts_.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    take(which, index, keep);
}

void IteratedGraded::take(std::size_t which, int index, const std::vector<std::size_t> &keep) {
    GradedPiece piece = filts_.at(which).graded(index);
    std::vector<Filtration> next;
    next.reserve(filts_.size());
    for (std::size_t i = 0; i < filts_.size(); ++i) {
        if (std::find(keep.begin(), keep.end(), i) != keep.end())
            next.push_back(filts_[i].induce_on_piece(piece));
        else
            next.push_back(
                Filtration::constant(filts_[i].direction(), Subspace::full(piece.dim())));
    }
    filts_ = std::move(next);
    coord_ = piece.coord() * coord_;
    lift_ = lift_ * piece.lift();
}

Mat canonical_map(const Mat &p_src, const Mat &p_tgt) {
    if (p_src.cols() != p_tgt.cols())
        throw std::invalid_argument("canonical_map: presentations over different sources");
    if (rank(p_src) != p_src.rows())
        throw std::invalid_argument("canonical_map: source presentation is not surjective");
    if (!kernel(p_tgt).contains(kernel(p_src)))
        throw std::invalid_argument("canonical_map: map is not well defined (kernel escapes)");
    auto rinv = right_inverse(p_src);
    if (!rinv) throw std::logic_error("canonical_map: right inverse failed");
    return p_tgt * (*rinv);
}

ExchangeIso bifiltration_exchange(const Filtration &f, const Filtration &g, int p, int q) {
    if (f.ambient_dim() != g.ambient_dim())
        throw std::invalid_argument("bifiltration_exchange: ambient dimension mismatch");

    IteratedGraded x(f.ambient_dim(), {f, g});
    x.take(1, q, {0});
    x.take(0, p, {});
    IteratedGraded y(f.ambient_dim(), {f, g});
    y.take(0, p, {1});
    y.take(1, q, {});
    if (x.dim() != y.dim())
        throw std::logic_error("bifiltration_exchange: graded dimensions disagree");

    Subspace common = meet(f.level(p), g.level(q));
    Mat u = common.basis().transpose();  // ambient × c
    Mat px = x.coord() * u;
    Mat py = y.coord() * u;
    ExchangeIso iso;
    iso.forward = canonical_map(px, py);
    iso.backward = canonical_map(py, px);
    iso.dim = x.dim();
    if (!(iso.forward * iso.backward == Mat::identity(iso.dim)))
        throw std::logic_error("bifiltration_exchange: exchange is not invertible");
    return iso;
}

}  // namespace hodgekit
