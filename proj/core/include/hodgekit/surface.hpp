#pragma once

#include "hodgekit/report.hpp"

namespace hodgekit {

/// An element a·C0 + b·f of the Picard lattice of the Hirzebruch
/// surface P(O ⊕ O(n)) over P^1, where C0 is the section with
/// C0² = −n and f the fiber class.
struct DivisorClass {
    long a = 0;  // coefficient of C0
    long b = 0;  // coefficient of f
    long n = 1;  // surface parameter, ≥ 1

    std::string to_string() const;
};

inline DivisorClass c0_class(long n) { return {1, 0, n}; }
inline DivisorClass fiber_class(long n) { return {0, 1, n}; }
inline DivisorClass cinf_class(long n) { return {1, n, n}; }  // C0 + n·f

DivisorClass operator+(const DivisorClass &x, const DivisorClass &y);
DivisorClass operator-(const DivisorClass &x, const DivisorClass &y);
bool operator==(const DivisorClass &x, const DivisorClass &y);

/// Intersection number; bilinear with C0² = −n, C0·f = 1, f² = 0.
/// Throws on a surface-parameter mismatch.
long intersect(const DivisorClass &d1, const DivisorClass &d2);

/// Nefness against the two extremal curve classes C0 and f.
bool is_nef(const DivisorClass &d);
bool is_effective(const DivisorClass &d);

/// The five-step semipositivity counterexample on P(O ⊕ O(n)):
/// the line bundle A = O(−C0) sits in F^b of a rank-2 filtered bundle,
/// the graded Higgs composite out of A vanishes for rank reasons, yet
/// A* = O(C0) is not nef. `middle_override`, when supplied, replaces
/// the middle term of the Chern-class additivity check (negative
/// control: a wrong class makes step 3 fail).
Report verify_example2(long n, long b = 0, const DivisorClass *middle_override = nullptr);

}  // namespace hodgekit
