#include "hodgekit/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace hodgekit {

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    os << a << "*C0+" << b << "*f";
    return os.str();
}

static void require_same_surface(const DivisorClass &x, const DivisorClass &y) {
    if (x.n != y.n)
        throw std::invalid_argument("divisor classes live on different surfaces (n=" +
                                    std::to_string(x.n) + " vs n=" + std::to_string(y.n) + ")");
}

DivisorClass operator+(const DivisorClass &x, const DivisorClass &y) {
    require_same_surface(x, y);
    return {x.a + y.a, x.b + y.b, x.n};
}

DivisorClass operator-(const DivisorClass &x, const DivisorClass &y) {
    require_same_surface(x, y);
    return {x.a - y.a, x.b - y.b, x.n};
}

bool operator==(const DivisorClass &x, const DivisorClass &y) {
    return x.n == y.n && x.a == y.a && x.b == y.b;
}

long intersect(const DivisorClass &d1, const DivisorClass &d2) {
    require_same_surface(d1, d2);
    // (a1 C0 + b1 f)·(a2 C0 + b2 f) with C0² = −n, C0·f = 1, f² = 0
    return -d1.n * d1.a * d2.a + d1.a * d2.b + d1.b * d2.a;
}

bool is_nef(const DivisorClass &d) {
    return intersect(d, fiber_class(d.n)) >= 0 && intersect(d, c0_class(d.n)) >= 0;
}

bool is_effective(const DivisorClass &d) { return d.a >= 0 && d.b >= 0; }

Report verify_example2(long n, long b, const DivisorClass *middle_override) {
    if (n < 1) throw std::invalid_argument("surface parameter n must be >= 1");
    Report rep;

    const DivisorClass c0 = c0_class(n);
    const DivisorClass cinf = cinf_class(n);
    const DivisorClass zero{0, 0, n};

    // Step 1: F^b of the rank-2 bundle splits into a line bundle of class
    // C_inf − C0 at weight level 0 and a trivial summand at weight level 1.
    const DivisorClass piece_w0 = cinf - c0;  // = n·f
    const DivisorClass piece_w1 = zero;
    {
        bool ok = piece_w0 == DivisorClass{0, n, n} && piece_w1 == zero;
        std::ostringstream wit;
        wit << "F^" << b << " pieces: [" << piece_w0.to_string() << "] at W-level 0, ["
            << piece_w1.to_string() << "] at W-level 1";
        rep.add("step1_decomposition", ok, wit.str());
    }

    // Step 2: the injection O(−C0) → O(C_inf−C0) ⊕ O exists class-wise:
    // both difference classes are effective.
    const DivisorClass diff0 = piece_w0 - DivisorClass{-1, 0, n};  // = C_inf
    const DivisorClass diff1 = piece_w1 - DivisorClass{-1, 0, n};  // = C0
    {
        bool ok = is_effective(diff0) && is_effective(diff1);
        std::ostringstream wit;
        wit << diff0.to_string() << " and " << diff1.to_string() << " effective";
        rep.add("step2_injection", ok, wit.str());
    }

    // Step 3: Chern-class additivity in
    //   0 → O(−C0) → O(C_inf−C0) ⊕ O → O(C_inf) → 0.
    {
        DivisorClass middle = piece_w0 + piece_w1;
        if (middle_override) middle = *middle_override;
        DivisorClass ends = DivisorClass{-1, 0, n} + cinf;
        bool ok = middle == ends;
        std::ostringstream wit;
        wit << "middle c1 = " << middle.to_string() << ", sub+quot c1 = " << ends.to_string();
        rep.add("step3_chern_additivity", ok, wit.str());
    }

    // Step 4: A = O(−C0) lands in weight level 1: the map to the W-level-0
    // piece twists by C0 (effective ⇒ could be nonzero) but gr_1^W gr_F^{b−1}
    // has rank 0, so the Higgs composite out of gr_1^W A vanishes for rank
    // reasons — the semipositivity hypothesis is satisfied.
    {
        const std::size_t rank_gr1_grFbm1 = 0;
        bool ok = is_effective(diff1) && rank_gr1_grFbm1 == 0;
        std::ostringstream wit;
        wit << "gr_1^W A -> [" << piece_w1.to_string() << "] class-wise (twist "
            << diff1.to_string() << " effective); rank gr_1^W gr_F^" << (b - 1) << " = 0";
        rep.add("step4_hypothesis", ok, wit.str());
    }

    // Step 5: yet A* = O(C0) is not nef.
    {
        long a_star_c0 = intersect(c0, c0);
        bool ok = !is_nef(c0) && a_star_c0 == -n;
        std::ostringstream wit;
        wit << "A*.C0 = " << a_star_c0 << " < 0; hypothesis satisfied, conclusion violated: "
            << "A* not nef";
        rep.add("step5_conclusion_fails", ok, wit.str());
    }

    return rep;
}

}  // namespace hodgekit
