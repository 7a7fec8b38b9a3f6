#include "hodgekit/subspace.hpp"

#include <stdexcept>

namespace hodgekit {

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Mat(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Mat::identity(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(const std::vector<Vec> &vectors, std::size_t ambient_dim) {
    for (const auto &v : vectors)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("span: vector length does not match ambient dimension");
    Mat m = Mat::from_rows(vectors, ambient_dim);
    auto pivots = rref(m);
    Subspace s;
    s.ambient_ = ambient_dim;
    s.pivots_ = pivots;
    s.basis_ = Mat(pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) s.basis_(i, j) = m(i, j);
    return s;
}

bool Subspace::contains(const Vec &v) const {
    return coordinates(v).has_value();
}

std::optional<Vec> Subspace::coordinates(const Vec &v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("coordinates: vector length does not match ambient dimension");
    // RREF basis: the coefficient of row i is the entry at its pivot column.
    Vec coeff(dim());
    Vec rem = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        coeff[i] = rem[pivots_[i]];
        if (coeff[i].is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) rem[j] -= coeff[i] * basis_(i, j);
    }
    if (!hodgekit::is_zero(rem)) return std::nullopt;
    return coeff;
}

Subspace Subspace::conj() const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(hodgekit::conj(basis_vector(i)));
    return span(rows, ambient_);
}

Subspace Subspace::apply(const Mat &m) const {
    if (m.cols() != ambient_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(m * basis_vector(i));
    return span(rows, m.rows());
}

Subspace Subspace::annihilator() const {
    // f(v) = sum f_j v_j; the annihilator is the kernel of the basis matrix.
    std::vector<Vec> ker = kernel_basis(basis_);
    return span(ker, ambient_);
}

bool Subspace::contains(const Subspace &other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("contains: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace join(const Subspace &a, const Subspace &b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("join: ambient dimension mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::span(rows, a.ambient_);
}

Subspace meet(const Subspace &a, const Subspace &b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("meet: ambient dimension mismatch");
    // Zassenhaus: rref of [A A; B 0]; rows with zero left block carry the
    // intersection in the right block.
    std::size_t n = a.ambient_;
    Mat big(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            big(i, j) = a.basis_(i, j);
            big(i, n + j) = a.basis_(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) big(a.dim() + i, j) = b.basis_(i, j);
    rref(big);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < big.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!big(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec v(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = big(i, n + j);
            if (!v[j].is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(v));
    }
    return Subspace::span(rows, n);
}

Subspace kernel(const Mat &m) {
    return Subspace::span(kernel_basis(m), m.cols());
}

Subspace image(const Mat &m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::span(cols, m.rows());
}

}  // namespace hodgekit
