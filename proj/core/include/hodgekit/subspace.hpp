#pragma once

#include <vector>

#include "hodgekit/matrix.hpp"

namespace hodgekit {

/// A linear subspace of Q(i)^n in canonical form: the basis is kept in
/// reduced row echelon form with no zero rows, so two subspaces are equal
/// iff their bases are identical entrywise.
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(const std::vector<Vec> &vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat &basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t> &pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec &v) const;
    bool contains(const Subspace &other) const;
    bool is_real() const { return basis_.is_real(); }

    /// Coefficients of v in the echelon basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec &v) const;

    /// Entrywise conjugation of the basis, re-echelonized. Involutive.
    Subspace conj() const;

    /// Image under a linear map (cols of m == ambient_dim).
    Subspace apply(const Mat &m) const;

    /// Functionals vanishing on this subspace, as a subspace of the dual
    /// (coordinates in the dual standard basis, pairing without conjugation).
    Subspace annihilator() const;

    friend bool operator==(const Subspace &a, const Subspace &b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace &a, const Subspace &b) { return !(a == b); }

    friend Subspace meet(const Subspace &a, const Subspace &b);
    friend Subspace join(const Subspace &a, const Subspace &b);

  private:
    std::size_t ambient_ = 0;
    Mat basis_;  // rows = basis vectors, RREF
    std::vector<std::size_t> pivots_;
};

Subspace meet(const Subspace &a, const Subspace &b);
Subspace join(const Subspace &a, const Subspace &b);

/// Kernel of a linear map as a subspace of the domain.
Subspace kernel(const Mat &m);
/// Column space of a linear map as a subspace of the codomain.
Subspace image(const Mat &m);

}  // namespace hodgekit
