#pragma once

#include "hodgekit/filtration.hpp"
#include "hodgekit/report.hpp"

namespace hodgekit {

/// A strictly increasing integer map stored on a finite window and
/// extended affinely with slope 1 outside it, so evaluation is total.
class IndexMap {
  public:
    IndexMap() = default;
    explicit IndexMap(std::map<int, int> values);

    static IndexMap identity_map() { return IndexMap(std::map<int, int>{{0, 0}}); }

    int operator()(int m) const;
    int lo() const { return values_.begin()->first; }
    int hi() const { return values_.rbegin()->first; }
    const std::map<int, int> &stored() const { return values_; }

  private:
    std::map<int, int> values_{{0, 0}};
};

/// The unique m with phi(m−1) < k ≤ phi(m).
int m_of(const IndexMap &phi, int k);

/// A finer increasing filtration M interpolating W: W_m = M_{φ(m)}.
struct Refinement {
    Filtration base;  // W
    Filtration fine;  // M
    IndexMap phi;
};

/// Checks monotonicity of both filtrations, the interpolation identity
/// W_m = M_{φ(m)}, and the chain
/// W_{m(k)−1} ⊆ M_{k−1} ⊆ M_k ⊆ W_{m(k)} for every k in range.
Report validate_refinement(const Refinement &r);

/// The five canonical isomorphisms relating the (F, M, W)-graded pieces
/// at (k, p), realized as matrices in fixed lifts:
///   map1: gr_F^p gr_k^M V          -> gr_F^p gr_k^M gr_{m(k)}^W V
///   map2: gr_F^p gr_k^M V          -> gr_k^M gr_F^p V
///   map3: gr_F^p gr_k^M gr_{m}^W V -> gr_k^M gr_F^p gr_{m}^W V
///   map4: gr_k^M gr_F^p gr_{m}^W V -> gr_k^M gr_{m}^W gr_F^p V
///   map5: gr_k^M gr_F^p V          -> gr_k^M gr_{m}^W gr_F^p V
/// with m = m(k). All five are induced by the surjection from
/// F^p V ∩ M_k V, which is also how commutativity is certified.
struct RefinementIso {
    Mat map1, map2, map3, map4, map5;
    std::size_t dim = 0;
    bool pentagon_ok = false;  // map4·map3·map1 == map5·map2
};

RefinementIso refinement_iso(const Refinement &r, const Filtration &f, int k, int p);

}  // namespace hodgekit
