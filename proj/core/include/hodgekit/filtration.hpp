#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgekit/graded.hpp"

namespace hodgekit {

enum class Direction { decreasing, increasing };

struct FiltrationReport {
    bool ok = true;
    std::string message;
    int bad_low = 0, bad_high = 0;  // the violated adjacent pair, when !ok
};

/// A finite filtration: a monotone family of subspaces indexed by a finite
/// integer window, saturating (clamping) outside the stored window.
/// Decreasing filtrations shrink as the index grows; increasing ones grow.
class Filtration {
  public:
    Filtration() = default;
    Filtration(Direction dir, std::size_t ambient_dim, std::map<int, Subspace> levels);

    /// The filtration constant at a single subspace.
    static Filtration constant(Direction dir, const Subspace &s);
    /// Increasing filtration that is `s` at every index >= at and zero below;
    /// decreasing filtration that is `s` at every index <= at and zero above.
    static Filtration concentrated(Direction dir, const Subspace &s, int at);

    Direction direction() const { return dir_; }
    std::size_t ambient_dim() const { return ambient_; }
    int lo() const { return levels_.begin()->first; }
    int hi() const { return levels_.rbegin()->first; }
    const std::map<int, Subspace> &stored_levels() const { return levels_; }

    /// Saturated access: clamps to the stored window.
    const Subspace &level(int k) const;

    FiltrationReport validate() const;

    /// gr at index k: level(k)/level(k+1) (decreasing) or
    /// level(k)/level(k-1) (increasing).
    GradedPiece graded(int k) const;

    /// Indices k in [lo-1, hi+1] with graded(k) nonzero.
    std::vector<int> graded_support() const;

    /// Intersection with S levelwise (the induced filtration on S).
    Filtration induce_on_sub(const Subspace &s) const;
    /// Image filtration in the coordinates of a quotient presentation.
    Filtration induce_on_piece(const GradedPiece &piece) const;
    /// Image filtration on V/S, reported in the canonical quotient coordinates.
    Filtration induce_on_quotient(const Subspace &s) const;

    /// Dual filtration by annihilators: F^p V* = Ann(F^{-p+1} V) for
    /// decreasing F, W_m V* = Ann(W_{-m-1} V) for increasing W.
    Filtration dual() const;

    /// Index translation for increasing filtrations: (W[m])_k = W_{k-m}.
    Filtration shift(int m) const;

    /// Image under an invertible map, levelwise.
    Filtration apply(const Mat &g) const;

    friend bool operator==(const Filtration &a, const Filtration &b);
    friend bool operator!=(const Filtration &a, const Filtration &b) { return !(a == b); }

  private:
    Direction dir_ = Direction::decreasing;
    std::size_t ambient_ = 0;
    std::map<int, Subspace> levels_;
};

/// One canonical presentation of an iterated graded piece
/// gr ... gr V, together with all given filtrations re-induced onto the
/// current coordinate space at every stage.
class IteratedGraded {
  public:
    IteratedGraded(std::size_t ambient_dim, std::vector<Filtration> filtrations);

    /// Passes to the graded piece of filtration `which` at `index`.
    void take(std::size_t which, int index);

    /// Same, but only re-induces the filtrations listed in `keep`; the
    /// others become trivial. Use when the remaining steps are known.
    void take(std::size_t which, int index, const std::vector<std::size_t> &keep);

    std::size_t dim() const { return coord_.rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    const Mat &coord() const { return coord_; }  // dim × ambient composite
    const Mat &lift() const { return lift_; }    // ambient × dim composite
    const Filtration &filtration(std::size_t which) const { return filts_.at(which); }

  private:
    std::size_t ambient_;
    Mat coord_, lift_;
    std::vector<Filtration> filts_;
};

/// The canonical morphism between two quotient presentations of a common
/// source: given P_x = σ_x·U and P_y = σ_y·U (columns indexed by a basis of
/// the common source), returns the matrix M with M·P_x = P_y. Requires P_x
/// surjective and ker P_x ⊆ ker P_y (both checked).
Mat canonical_map(const Mat &p_src, const Mat &p_tgt);

struct ExchangeIso {
    Mat forward;   // gr_F^p gr_G^q -> gr_G^q gr_F^p
    Mat backward;  // its inverse
    std::size_t dim = 0;
};

/// The canonical isomorphism gr_F^p gr_G^q V ≅ gr_G^q gr_F^p V, realized on
/// representatives drawn from F(p) ∩ G(q).
ExchangeIso bifiltration_exchange(const Filtration &f, const Filtration &g, int p, int q);

}  // namespace hodgekit
