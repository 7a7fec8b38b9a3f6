#pragma once

#include "hodgekit/hodge.hpp"

namespace hodgekit {

/// The constant-coefficient chart model of a polarized degeneration:
/// commuting real nilpotents N_1..N_l, a Hodge filtration F satisfying
/// Griffiths transversality (N_i·F^p ⊆ F^{p−1}), and an infinitesimally
/// flat pairing S of parity (−1)^weight.
struct PureLocalModel {
    NilpotentFamily fam;
    Filtration f;
    PolarizationForm s;
    int weight = 0;

    std::size_t dim() const { return fam.ambient_dim; }
    std::vector<std::size_t> all_indices() const;
};

/// All structural invariants; with check_polarization also the
/// positivity of S on the Hodge decomposition of (F, weight).
Report validate_model(const PureLocalModel &m, bool check_polarization = false);

/// One graded piece of the cone weight filtration W(J), carrying the
/// induced Hodge filtration and the induced residual nilpotents.
struct StratumPiece {
    int k = 0;
    GradedPiece piece;  // gr_k^{W(J)} inside the ambient
    Filtration f;       // induced F in the piece coordinates
    std::vector<Mat> residual;  // induced N_i, parallel to residual_index
};

struct StratumRestriction {
    std::vector<std::size_t> j;
    std::vector<std::size_t> residual_index;  // I \ J, 1-based, ascending
    Filtration w;                             // W(J), centered at 0
    std::vector<StratumPiece> pieces;         // nonzero graded pieces, ascending k
};

/// Restriction of a pure model to the stratum cut out by J: the cone
/// weight filtration W(J) with its graded pieces, the induced F, and the
/// induced actions of the remaining N_i. Refuses (throws) when the
/// sampled coefficient-independence check fails for J.
StratumRestriction restrict_pure(const PureLocalModel &m, const std::vector<std::size_t> &j);

struct BaseChangeResult {
    bool ok = true;
    int level = 0;  // first graded level where the two induced maps differ
};

/// exp(Σ_{i∈I} λ_i N_i) and exp(Σ_{i∉J} λ_i N_i) induce the same map on
/// every gr_k^{W(J)} — the coordinate-independence of the restricted
/// real structure, sampled at rational λ.
BaseChangeResult base_change_check(const PureLocalModel &m, const std::vector<std::size_t> &j,
                                   const std::vector<Rational> &lambdas);

/// Presentation of gr_F^p gr_k^{W(J)} by an ambient lift and coordinate
/// matrix (coord·lift = identity).
struct GrFGrW {
    int k = 0, p = 0;
    std::size_t dim = 0;
    Mat lift;   // ambient × dim
    Mat coord;  // dim × ambient
};

struct HiggsBlock {
    std::size_t i = 0;  // residual family index (1-based)
    int k = 0, p = 0;   // source piece; target is (k, p−1)
    Mat block;
};

struct HiggsField {
    std::vector<std::size_t> residual_index;
    std::vector<GrFGrW> pieces;
    std::vector<HiggsBlock> blocks;

    const GrFGrW *piece(int k, int p) const;
    const Mat *block(std::size_t i, int k, int p) const;
};

/// The graded residue maps θ_{i,k,p}: gr_F^p gr_k^{W(J)} → gr_F^{p−1}
/// gr_k^{W(J)} induced by each residual N_i. Verifies internally that
/// the maps induced on the gr_F side preserve W(J) and that their
/// W(J)-graded blocks reproduce the returned θ blocks (through the
/// exchange isomorphisms); a mismatch throws.
HiggsField higgs(const PureLocalModel &m, const std::vector<std::size_t> &j);

/// Dual model: N_i^∨ = −N_i^T, dual Hodge filtration, weight −w,
/// pairing (−1)^w·S^{-1} (the pairing transported to the dual space).
PureLocalModel dual_model(const PureLocalModel &m);

/// θ blocks of the dual model equal −(transpose) of the original blocks
/// under the graded duality pairings D_{k,p}([φ],[v]) = φ(ṽ):
///   D_{k,p−1}·θ*_{i,k,p} = −(θ_{i,−k,−p+1})^T·D_{k,p}.
bool higgs_duality_check(const PureLocalModel &m, const std::vector<std::size_t> &j);

/// Candidate graded pairing on gr_k^{W(J)}: S_k(u,v) = S(ũ, N_J^k ṽ)
/// for k ≥ 0, transported through the graded isomorphism N_J^{−k} for
/// k < 0. Well-definedness and flatness for the residual N_i are
/// verified; failures throw.
PolarizationForm induced_graded_pairing(const PureLocalModel &m, const std::vector<std::size_t> &j,
                                        int k);

}  // namespace hodgekit
