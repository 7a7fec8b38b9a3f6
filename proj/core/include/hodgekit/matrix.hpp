#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodgekit/scalar.hpp"

namespace hodgekit {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Scalar &c, const Vec &v);
bool is_zero(const Vec &v);
Vec conj(const Vec &v);

/// Dense matrix over the Gaussian rationals. Vectors are columns; a
/// matrix acts on the left.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols);
    static Mat from_cols(const std::vector<Vec> &cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Mat transpose() const;
    Mat conj() const;
    bool is_zero() const;
    bool is_real() const;

    Mat operator-() const;
    Mat &operator+=(const Mat &o);
    Mat &operator-=(const Mat &o);
    Mat &operator*=(const Scalar &c);
    friend Mat operator+(Mat a, const Mat &b) { return a += b; }
    friend Mat operator-(Mat a, const Mat &b) { return a -= b; }
    friend Mat operator*(const Scalar &c, Mat a) { return a *= c; }
    friend Mat operator*(const Mat &a, const Mat &b);
    friend Vec operator*(const Mat &a, const Vec &v);
    friend bool operator==(const Mat &a, const Mat &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

Mat pow(const Mat &m, unsigned k);
bool is_nilpotent(const Mat &m);
bool commute(const Mat &a, const Mat &b);

/// exp of a nilpotent matrix as the finite polynomial sum.
/// Throws if the argument is not nilpotent.
Mat exp_nilpotent(const Mat &m);

/// In-place reduced row echelon form. Returns the pivot columns in order.
std::vector<std::size_t> rref(Mat &m);

std::size_t rank(const Mat &m);

Scalar det(const Mat &m);

/// One solution of A x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const Mat &a, const Vec &b);

/// Right inverse R with A R = I (requires full row rank), deterministic.
std::optional<Mat> right_inverse(const Mat &a);

std::optional<Mat> inverse(const Mat &a);

/// Basis of the kernel of A (free-variable basis, deterministic order).
std::vector<Vec> kernel_basis(const Mat &a);

/// Kronecker product a ⊗ b.
Mat kron(const Mat &a, const Mat &b);

}  // namespace hodgekit
