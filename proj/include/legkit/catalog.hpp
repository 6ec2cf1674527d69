#pragma once

// Built-in front words: the standard unknot, the calibration trefoil, the
// maximal-tb negative torus knot T(2,-3), and the maximal-tb twist-knot
// realizations L_i(n).  Each was verified against an independent Kauffman
// bracket oracle (see the test suite) before being frozen here.

#include "legkit/front.hpp"

namespace legkit::catalog {

/// Standard Legendrian unknot: tb = -1, rot = 0.
inline FrontWord unknot() { return {{Lc(1), Rc(1)}}; }

/// Unknot with s extra zig-zags, signs chosen one at a time.
inline FrontWord stabilized_unknot(const std::vector<int>& signs) {
    FrontWord w = unknot();
    for (int s : signs) w = stabilize(w, 0, s);
    return w;
}

/// Maximal-tb right-handed trefoil: tb = 1, rot = 0, writhe +3.  This is the
/// calibration anchor for the crossing-sign convention.
inline FrontWord trefoil() {
    return {{Lc(1), Lc(3), Xc(2), Xc(2), Xc(2), Rc(1), Rc(1)}};
}

/// Maximal-tb left-handed trefoil = the (2,-3) torus knot: tb = -6, rot = +-1.
/// Fold-and-clasp form: eye (T,B), neck (M1,M2), clasp of M2 around B, then
/// two half-twists of the neck.
inline FrontWord negative_trefoil() {
    return {{Lc(1), Lc(2), Xc(3), Xc(3), Xc(2), Xc(2), Rc(3), Rc(1)}};
}

/// Mirror n-twist knot in the same fold-and-clasp form (n >= 2 even gives the
/// reverse family of twist_knot(n)): tb = -n-4.
inline FrontWord mirror_twist_knot(int n) {
    if (n < 1) throw validation_error("mirror_twist_knot needs n >= 1");
    FrontWord w{{Lc(1), Lc(2), Xc(3), Xc(3)}};
    for (int i = 0; i < n; ++i) w.events.push_back(Xc(2));
    w.events.push_back(Rc(3));
    w.events.push_back(Rc(1));
    return w;
}

/// Maximal-tb Legendrian realization L_i(n) of the n-twist knot, n even >= 2,
/// 1 <= i <= n-1: tb = 1, rot = 0 for every i.  The n-2 compensated
/// half-twist units sit on the lower cusp pair; i-1 of them bend the upper
/// strand, the rest bend the lower one.  All L_i(n) share the knot type and
/// the classical invariants but are combinatorially distinct fronts.
inline FrontWord twist_knot_realization(int n, int i) {
    if (n < 2 || n % 2 != 0)
        throw validation_error("twist_knot_realization needs an even n >= 2");
    if (i < 1 || i > n - 1)
        throw validation_error("twist_knot_realization needs 1 <= i <= n-1");
    FrontWord w{{Lc(1), Lc(3), Xc(2)}};
    const int units = n - 2;
    const int p = 3;  // lower cusp pair
    for (int u = 0; u < units; ++u) {
        if (u < i - 1)
            w.events.insert(w.events.end(), {Lc(p + 2), Xc(p + 1), Rc(p)});  // upper bend
        else
            w.events.insert(w.events.end(), {Lc(p), Xc(p + 1), Rc(p + 2)});  // lower bend
    }
    w.events.insert(w.events.end(), {Xc(2), Xc(2), Rc(1), Rc(1)});
    return w;
}

}  // namespace legkit::catalog
