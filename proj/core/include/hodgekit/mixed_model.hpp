#pragma once

#include "hodgekit/local_model.hpp"
#include "hodgekit/refinement.hpp"

namespace hodgekit {

/// One nonzero graded piece of the weight filtration of a mixed model,
/// carrying a full pure model in the piece coordinates.
struct GradedModelEntry {
    int m = 0;
    GradedPiece piece;     // gr_m^W inside the ambient
    PureLocalModel model;  // induced nilpotents and F, pairing S_m, own weight
};

/// A filtered object with a chosen weight filtration: every N_i
/// preserves W levelwise, and each gr_m^W carries a pure local model
/// (the induced data plus a declared pairing and weight).
struct MixedLocalModel {
    NilpotentFamily fam;
    Filtration f;
    Filtration w;
    std::vector<GradedModelEntry> graded;  // ascending m, nonzero pieces only

    std::size_t dim() const { return fam.ambient_dim; }
    const GradedModelEntry *entry(int m) const;
};

/// Assembles the graded entries from declared per-level pairings and
/// weights. Levels of W with a nonzero graded piece must appear in both
/// maps; the pairing matrices are given in the canonical graded-piece
/// coordinates.
MixedLocalModel make_mixed(NilpotentFamily fam, Filtration f, Filtration w,
                           const std::map<int, Mat> &pairings,
                           const std::map<int, int> &weights);

/// A pure model viewed as a mixed model with W concentrated at `at`.
MixedLocalModel mixed_from_pure(const PureLocalModel &m, int at);

Report validate_mixed(const MixedLocalModel &mx, bool with_mmh = false);

/// A surjection π: ⊕_p gr_F^p V → A, stored blockwise per Hodge index.
/// Missing blocks are zero.
struct QuotientTarget {
    std::size_t dim = 0;
    std::map<int, Mat> blocks;  // p → (dim × dim gr_F^p)
};

/// The image filtration on the target: W_t A = Σ_p π_p(W_t gr_F^p V).
Filtration target_weight_filtration(const MixedLocalModel &mx, const QuotientTarget &a);

/// The refinement of W produced by interleaving, inside each gr_m^W, the
/// cone weight filtration W(J) of the induced nilpotents: the pullbacks
/// π_m^{-1}(W(J)_l gr_m^W) listed with consecutive indices.
struct RefinedRestriction {
    std::vector<std::size_t> j;
    Filtration m_filt;  // M on the ambient
    IndexMap phi;
    std::map<int, int> l_of;        // M index k → matched W(J) level l(k)
    std::map<int, Filtration> wj;   // W level m → W(J) on gr_m^W coordinates
};

/// Builds (M, φ, l) and verifies that it is a valid refinement of W and
/// that gr_k^M gr_{m(k)}^W = gr_{l(k)}^{W(J)} gr_{m(k)}^W holds as a
/// subspace identity, with matching F-graded dimensions on gr_k^M V and
/// gr_k^M gr_{m(k)}^W V. Violations throw.
RefinedRestriction build_refinement(const MixedLocalModel &mx,
                                    const std::vector<std::size_t> &j);

/// The restriction to the stratum cut out by J: the remaining nilpotents
/// (relabeled 1..|I∖J|), the same F, the refinement M as the new weight
/// filtration, and graded data transported from gr_{l(k)}^{W(J)} of the
/// old graded models.
MixedLocalModel phi_restrict(const MixedLocalModel &mx, const std::vector<std::size_t> &j);

struct HypothesisResult {
    bool ok = true;
    std::size_t i = 0;  // boundary direction
    int m = 0, p = 0;   // graded block with nonzero composite
    std::string describe() const;
};

/// The zero-composite hypothesis: for every boundary direction and every
/// (m, p), the composite of the Higgs block gr_F^p gr_m^W → gr_F^{p−1}
/// gr_m^W with the F/W exchange and the W-graded surjection onto A
/// vanishes.
HypothesisResult check_theorem2_hypothesis(const MixedLocalModel &mx, const QuotientTarget &a);

/// The hypothesis survives restriction: phi_restrict(mx, J) with the
/// same quotient (and the M-induced filtration on A) still satisfies the
/// zero-composite condition. Always true for correct inputs; false
/// indicates an implementation fault.
bool check_restriction_preserves(const MixedLocalModel &mx, const QuotientTarget &a,
                                 const std::vector<std::size_t> &j);

}  // namespace hodgekit
