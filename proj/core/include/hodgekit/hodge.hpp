#pragma once

#include <optional>

#include "hodgekit/filtration.hpp"
#include "hodgekit/report.hpp"
#include "hodgekit/weight.hpp"

namespace hodgekit {

/// A real (−1)^w-symmetric bilinear pairing in matrix form:
/// S(u, v) = u^T · gram · v.
struct PolarizationForm {
    Mat gram;
    int weight_parity = 0;  // symmetric for even w, antisymmetric for odd

    Scalar pair(const Vec &u, const Vec &v) const;
    Report validate() const;
};

struct PurityWitness {
    bool ok = true;
    int p = 0;  // first p with V != F^p ⊕ conj(F^{w−p+1})
    std::string describe() const;
};

/// Pure Hodge structure of weight w: V = F^p ⊕ conj(F^{w−p+1}) for all p.
/// The real structure is v ↦ conj(v) by default; passing `twist` G uses
/// v ↦ G·conj(v) instead (G·conj(G) must be the identity).
PurityWitness is_pure_hs(const Filtration &f, int w, const Mat *twist = nullptr);

struct MhsWitness {
    bool ok = true;
    int m = 0, p = 0;  // first failing weight level and Hodge index
    std::string describe() const;
};

/// Mixed Hodge structure: F induces a pure structure of weight m on each
/// gr_m^W. W levels must be stable under the (possibly twisted) real
/// structure, which then descends to each graded piece.
MhsWitness is_mhs(const Filtration &f, const Filtration &w, const Mat *twist = nullptr);

struct PolarizationWitness {
    bool ok = true;
    int p = 0;
    std::string reason;  // "orthogonality" or "positivity"
    std::string describe() const;
};

/// Polarized pure Hodge structure: S(F^p, F^{w−p+1}) = 0 and the
/// Hermitian form h(u,v) = i^{p−q}·S(u, conj(v)) is positive definite on
/// each H^{p,q} = F^p ∩ conj(F^q), decided by leading principal minors.
PolarizationWitness is_polarized_hs(const Filtration &f, int w, const PolarizationForm &s);

/// The mixed-Hodge condition at the normalized fiber over the stratum
/// cut out by J: W(J)[m] together with F and the twisted real structure
/// v ↦ exp(2·Σ_{i∉J} y_i·i·N_i)·conj(v) is a mixed Hodge structure.
/// Default twist parameters y_i = 1. One report line per requested J.
Report check_mmh(const NilpotentFamily &fam, const Filtration &f, int m,
                 const std::vector<std::size_t> &j,
                 const std::vector<Rational> *twist_params = nullptr);

/// check_mmh aggregated over every subset J of {1..l}.
Report check_mmh_all(const NilpotentFamily &fam, const Filtration &f, int m,
                     const std::vector<Rational> *twist_params = nullptr);

/// The twist matrix exp(2·Σ_{i∉J} y_i·i·N_i).
Mat mmh_twist(const NilpotentFamily &fam, const std::vector<std::size_t> &j,
              const std::vector<Rational> *twist_params = nullptr);

}  // namespace hodgekit
