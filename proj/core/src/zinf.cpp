#include "hodgekit/zinf.hpp"

#include <random>
#include <sstream>

namespace hodgekit {

static void drop_trailing_zeros(std::vector<long> &v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::string ZSeq::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ',';
        os << entries[i];
    }
    os << ')';
    return os.str();
}

bool lex_less(const ZSeq &a, const ZSeq &b) {
    std::size_t n = std::max(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i) != b.at(i)) return a.at(i) < b.at(i);
    }
    return false;
}

bool zinf_level_is_full(const ZSeq &m) { return m.at(0) >= 1; }

ZSeq zinf_witness(const ZSeq &m) {
    ZSeq w = m;
    w.entries.push_back(-1);
    return w;
}

Report zinf_gr_demo(std::size_t count) {
    Report rep;
    std::mt19937 rng(20240901u);
    std::uniform_int_distribution<int> len_dist(0, 5);
    std::uniform_int_distribution<long> val_dist(-3, 3);
    for (std::size_t s = 0; s < count; ++s) {
        ZSeq m;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) m.entries.push_back(val_dist(rng));
        drop_trailing_zeros(m.entries);

        std::ostringstream name;
        name << "zinf_gr_" << s;
        std::ostringstream wit;
        bool ok;
        if (!zinf_level_is_full(m)) {
            // W_m = 0, so gr_m ⊆ W_m = 0 regardless of the levels below.
            ok = true;
            wit << "m=" << m.to_string() << " W_m=0";
        } else {
            ZSeq mp = zinf_witness(m);
            ok = lex_less(mp, m) && zinf_level_is_full(mp);
            wit << "m=" << m.to_string() << " W_m=V m'=" << mp.to_string()
                << " m'<m W_m'=V";
        }
        rep.add(name.str(), ok, wit.str());
    }
    return rep;
}

}  // namespace hodgekit
