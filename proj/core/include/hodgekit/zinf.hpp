#pragma once

#include <vector>

#include "hodgekit/report.hpp"

namespace hodgekit {

/// A finitely supported integer sequence (m_1, m_2, ...), compared
/// lexicographically: the first differing coordinate decides.
struct ZSeq {
    std::vector<long> entries;  // trailing zeros dropped

    long at(std::size_t i) const { return i < entries.size() ? entries[i] : 0; }
    std::string to_string() const;
};

bool lex_less(const ZSeq &a, const ZSeq &b);

/// The two-valued filtration indexed by ZSeq: W_m = V when m_1 ≥ 1 and
/// W_m = 0 otherwise. Every graded piece vanishes: when W_m = 0 this is
/// immediate, and when W_m = V the sequence m' = m with one later
/// coordinate lowered satisfies m' < m and W_{m'} = V already.
bool zinf_level_is_full(const ZSeq &m);

/// The witness m' < m with W_{m'} = W_m for a sequence with m_1 ≥ 1.
ZSeq zinf_witness(const ZSeq &m);

/// Samples `count` sequences deterministically and exhibits gr_m = 0
/// for each, with the explicit witness where W_m = V.
Report zinf_gr_demo(std::size_t count = 100);

}  // namespace hodgekit
