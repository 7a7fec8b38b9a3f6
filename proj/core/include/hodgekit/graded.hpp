#pragma once

#include "hodgekit/subspace.hpp"

namespace hodgekit {

/// A subquotient sup/sub presented with an explicit lift: columns of
/// lift() are representatives in sup, and coord() maps sup onto the
/// quotient coordinates, killing sub. coord()*lift() = identity.
///
/// The lift makes canonical morphisms between graded pieces concrete
/// matrices instead of dimension counts.
class GradedPiece {
  public:
    GradedPiece() = default;

    /// sup/sub; throws unless sub ⊆ sup.
    static GradedPiece quotient(const Subspace &sup, const Subspace &sub);

    std::size_t ambient_dim() const { return sup_.ambient_dim(); }
    std::size_t dim() const { return lift_.cols(); }
    const Subspace &sup() const { return sup_; }
    const Subspace &sub() const { return sub_; }
    const Mat &lift() const { return lift_; }    // ambient × dim
    const Mat &coord() const { return coord_; }  // dim × ambient

    /// Quotient coordinates of v; throws if v ∉ sup.
    Vec coords(const Vec &v) const;

    /// Representative of a coordinate vector.
    Vec lift_vec(const Vec &q) const { return lift_ * q; }

    /// Image of T in the quotient: coordinates of (T ∩ sup).
    Subspace image_coords(const Subspace &t) const;

    /// Preimage in the ambient of a subspace of the quotient (contains sub).
    Subspace preimage(const Subspace &tq) const;

    /// Matrix of the induced endomorphism-of-quotients for a map n with
    /// n·sup ⊆ target.sup and n·sub ⊆ target.sub (both checked).
    Mat induced_map(const Mat &n, const GradedPiece &target) const;
    Mat induced_endo(const Mat &n) const { return induced_map(n, *this); }

    /// Matrix g of the induced antilinear conjugation q ↦ g·conj(q), for an
    /// ambient real structure v ↦ amb·conj(v). Requires conj-stability of
    /// sup and sub; the result is checked to be an involution.
    Mat induced_conj(const Mat &amb) const;

  private:
    Subspace sup_, sub_;
    Mat lift_, coord_;
};

}  // namespace hodgekit
