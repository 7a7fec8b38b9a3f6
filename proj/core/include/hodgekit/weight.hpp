#pragma once

#include "hodgekit/filtration.hpp"
#include "hodgekit/report.hpp"

namespace hodgekit {

/// Commuting real nilpotent endomorphisms N_1..N_l of a common space.
/// Index sets into the family are 1-based throughout.
struct NilpotentFamily {
    std::size_t ambient_dim = 0;
    std::vector<Mat> mats;

    std::size_t size() const { return mats.size(); }
    const Mat &at(std::size_t i) const;  // 1-based

    /// Σ_{i∈K} c_i N_i. Coefficients parallel to K; all must be positive.
    Mat cone(const std::vector<std::size_t> &k, const std::vector<Rational> &coeffs) const;

    Report validate() const;
};

/// The unique increasing filtration centered at `center` with
/// N·W_k ⊆ W_{k−2} and N^k inducing gr_{center+k} ≅ gr_{center−k}.
/// Built by the closed form
///   W_{center+ℓ} = Σ_{j ≥ max(ℓ,0)} ker N^{j+1} ∩ im N^{j−ℓ}
/// and then verified against both axioms (a construction failing the
/// verification throws — it is never returned silently).
Filtration weight_filtration(const Mat &n, int center);

/// weight_filtration(Σ_{i∈K} c_i N_i, 0). Throws on nonpositive
/// coefficients or out-of-range indices.
Filtration cone_weight_filtration(const NilpotentFamily &fam, const std::vector<std::size_t> &k,
                                  const std::vector<Rational> &coeffs);

/// The default coefficient samples for an index set of size n:
/// all-ones, then the first n primes under 5 deterministic rotations.
std::vector<std::vector<Rational>> default_cone_samples(std::size_t n);

struct ConeIndependence {
    bool ok = true;
    // On failure: the two coefficient vectors and the first level at
    // which their cone filtrations differ.
    std::vector<Rational> coeffs_a, coeffs_b;
    int level = 0;
    std::string describe() const;
};

/// Sampled check that the cone weight filtration over K does not depend
/// on the (positive) coefficients. A pass certifies only the sampled
/// coefficient vectors, not all of them.
ConeIndependence check_ck_independence(const NilpotentFamily &fam,
                                       const std::vector<std::size_t> &k);
ConeIndependence check_ck_independence(const NilpotentFamily &fam,
                                       const std::vector<std::size_t> &k,
                                       const std::vector<std::vector<Rational>> &samples);

struct ShiftCheck {
    bool ok = true;
    std::size_t j = 0;  // offending family index (1-based)
    int level = 0;      // offending filtration level
    std::string describe() const;
};

/// N_j·W(J)_k ⊆ W(J)_{k−2} for every j ∈ J and every level k, where
/// W(J) is the all-ones cone weight filtration.
ShiftCheck check_lemma1_shift(const NilpotentFamily &fam, const std::vector<std::size_t> &j);

}  // namespace hodgekit
