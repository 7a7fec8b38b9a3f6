#include "hodgekit/matrix.hpp"

#include <stdexcept>

namespace hodgekit {

Vec operator+(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec operator-(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec operator*(const Scalar &c, const Vec &v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool is_zero(const Vec &v) {
    for (const auto &x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec conj(const Vec &v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
    return out;
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("Mat: entry count mismatch");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("Mat::from_rows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec> &cols, std::size_t rows) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("Mat::from_cols: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

Vec Mat::col(std::size_t j) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Mat Mat::conj() const {
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).conj();
    return out;
}

bool Mat::is_zero() const {
    for (const auto &x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_real() const {
    for (const auto &x : a_)
        if (!x.is_real()) return false;
    return true;
}

Mat Mat::operator-() const {
    Mat out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
    return out;
}

Mat &Mat::operator+=(const Mat &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat &Mat::operator-=(const Mat &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat &Mat::operator*=(const Scalar &c) {
    for (auto &x : a_) x *= c;
    return *this;
}

Mat operator*(const Mat &a, const Mat &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: product shape mismatch");
    Mat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Vec operator*(const Mat &a, const Vec &v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Mat: vector shape mismatch");
    Vec out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

Mat pow(const Mat &m, unsigned k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pow: square matrix required");
    Mat out = Mat::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) out = out * m;
    return out;
}

bool is_nilpotent(const Mat &m) {
    if (m.rows() != m.cols()) return false;
    return pow(m, static_cast<unsigned>(m.rows())).is_zero();
}

bool commute(const Mat &a, const Mat &b) {
    return a * b == b * a;
}

Mat exp_nilpotent(const Mat &m) {
    if (!is_nilpotent(m)) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
    Mat out = Mat::identity(m.rows());
    Mat term = Mat::identity(m.rows());
    boost::multiprecision::cpp_int fact = 1;
    for (unsigned k = 1; k <= m.rows(); ++k) {
        term = term * m;
        if (term.is_zero()) break;
        fact *= k;
        Mat t = term;
        t *= Scalar(Rational(boost::multiprecision::cpp_int(1), fact));
        out += t;
    }
    return out;
}

std::vector<std::size_t> rref(Mat &m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        Scalar inv = Scalar(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Mat &m) {
    Mat tmp = m;
    return rref(tmp).size();
}

Scalar det(const Mat &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    Mat a = m;
    std::size_t n = a.rows();
    Scalar d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a(sel, c).is_zero()) ++sel;
        if (sel == n) return Scalar(0);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        Scalar inv = Scalar(1) / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

std::optional<Vec> solve(const Mat &a, const Vec &b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

std::optional<Mat> right_inverse(const Mat &a) {
    Mat r(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) {
        Vec e(a.rows());
        e[j] = Scalar(1);
        auto x = solve(a, e);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) r(i, j) = (*x)[i];
    }
    return r;
}

std::optional<Mat> inverse(const Mat &a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
    auto r = right_inverse(a);
    if (!r) return std::nullopt;
    return r;
}

std::vector<Vec> kernel_basis(const Mat &a) {
    Mat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(a.cols());
        v[c] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace hodgekit
