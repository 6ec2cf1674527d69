#pragma once

// Test-only oracles, independent of the library implementation paths they
// check:
//  - kauffman_f: (-A^3)^(-w) <D> for the diagram of a front, by brute-force
//    state sum; separates knot types (and chiralities) of the built-in fronts.
//  - component-count by explicit cycle walking (vs union-find in validate).
//  - determinant by cofactor expansion (vs Bareiss).
//  - invariant factors via gcds of k x k minors (vs Smith normal form).

#include "legkit/front.hpp"
#include "legkit/intmat.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracles {

using legkit::EventKind;
using legkit::FrontWord;
using legkit::Int;
using legkit::IntMatrix;

// ---------------------------------------------------------------- kauffman

using LaurentZ = std::map<int, long long>;  // exponent of A -> coefficient

inline LaurentZ mirror(const LaurentZ& f) {
    LaurentZ out;
    for (auto& [e, c] : f) out[-e] = c;
    return out;
}

namespace detail {

struct Dsu {
    std::vector<int> p;
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    // returns true when the edge closes a loop
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        p[a] = b;
        return false;
    }
};

}  // namespace detail

inline LaurentZ kauffman_f(const FrontWord& w) {
    // planar arcs and crossings (nw, sw, ne, se), over-strand = nw-se
    int arcs = 0;
    std::vector<std::pair<int, int>> joins;
    std::vector<std::array<int, 4>> xings;
    std::vector<int> stack;
    for (const auto& [kind, p] : w.events) {
        switch (kind) {
        case EventKind::Lcusp: {
            int a = arcs++, b = arcs++;
            stack.insert(stack.begin() + (p - 1), {a, b});
            joins.push_back({a, b});
            break;
        }
        case EventKind::Rcusp: {
            joins.push_back({stack[p - 1], stack[p]});
            stack.erase(stack.begin() + (p - 1), stack.begin() + (p + 1));
            break;
        }
        case EventKind::Cross: {
            int nw = stack[p - 1], sw = stack[p];
            int ne = arcs++, se = arcs++;
            xings.push_back({nw, sw, ne, se});
            stack[p - 1] = ne;
            stack[p] = se;
            break;
        }
        }
    }
    const int n = static_cast<int>(xings.size());
    LaurentZ bracket;
    for (long mask = 0; mask < (1L << n); ++mask) {
        detail::Dsu dsu;
        dsu.p.resize(arcs);
        std::iota(dsu.p.begin(), dsu.p.end(), 0);
        int loops = 0, acount = 0;
        for (auto& [a, b] : joins) loops += dsu.unite(a, b);
        for (int i = 0; i < n; ++i) {
            auto [nw, sw, ne, se] = xings[i];
            if ((mask >> i) & 1) {
                loops += dsu.unite(nw, sw);
                loops += dsu.unite(ne, se);
            } else {
                // A-smoothing (calibrated on the negative-kink bracket -A^-3)
                ++acount;
                loops += dsu.unite(nw, ne);
                loops += dsu.unite(sw, se);
            }
        }
        int exp = 2 * acount - n;
        // expand (-A^2 - A^-2)^(loops-1)
        LaurentZ term{{0, 1}};
        for (int l = 0; l < loops - 1; ++l) {
            LaurentZ next;
            for (auto& [e, c] : term) {
                next[e + 2] -= c;
                next[e - 2] -= c;
            }
            term = next;
        }
        for (auto& [e, c] : term) bracket[e + exp] += c;
    }
    int wr = legkit::writhe(legkit::orient(w));
    LaurentZ out;
    int sgn = (wr % 2 == 0) ? 1 : -1;
    for (auto& [e, c] : bracket)
        if (c != 0) out[e - 3 * wr] += sgn * c;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// ------------------------------------------------------- component walking

inline int component_count_by_walking(const FrontWord& w) {
    auto cm = legkit::validate(w);
    std::vector<std::vector<int>> nbr(cm.n_strands);
    std::map<int, std::vector<int>> at_event;
    for (int s = 0; s < cm.n_strands; ++s) {
        at_event[cm.birth[s].first].push_back(s);
        at_event[cm.death[s].first].push_back(s);
    }
    for (auto& [e, ss] : at_event)
        if (ss.size() == 2) {
            nbr[ss[0]].push_back(ss[1]);
            nbr[ss[1]].push_back(ss[0]);
        }
    std::vector<char> seen(cm.n_strands, 0);
    int comps = 0;
    for (int s = 0; s < cm.n_strands; ++s) {
        if (seen[s]) continue;
        ++comps;
        int prev = -1, cur = s;
        while (!seen[cur]) {
            seen[cur] = 1;
            int next = -1;
            for (int v : nbr[cur])
                if (v != prev) next = v;
            if (next == -1) next = prev;
            prev = cur;
            cur = next;
        }
    }
    return comps;
}

// ------------------------------------------------------------ random fronts

inline FrontWord random_front(std::mt19937& rng, int target_events) {
    FrontWord w;
    int s = 0;
    auto rint = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    while (true) {
        if (static_cast<int>(w.events.size()) >= target_events && s == 0) break;
        char k;
        if (s == 0) {
            k = 'L';
        } else if (static_cast<int>(w.events.size()) >= target_events) {
            k = 'R';
        } else {
            static const char menu[] = {'L', 'L', 'X', 'X', 'X', 'R'};
            k = menu[rint(0, 5)];
            if (s < 2 && k != 'L') k = 'L';
        }
        if (k == 'L') {
            w.events.push_back(legkit::Lc(rint(1, s + 1)));
            s += 2;
        } else if (k == 'R') {
            w.events.push_back(legkit::Rc(rint(1, s - 1)));
            s -= 2;
        } else {
            w.events.push_back(legkit::Xc(rint(1, s - 1)));
        }
    }
    return w;
}

// ------------------------------------------------------------- determinant

inline Int cofactor_determinant(const IntMatrix& m) {
    const int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int k = 0; k < n; ++k)
                if (k != j) minor(i - 1, cc++) = m(i, k);
        }
        Int term = m(0, j) * cofactor_determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// --------------------------------------------- invariant factors via minors

// d_1 d_2 ... d_k = gcd of all k x k minors; returns the full diagonal
// including zeros (rank deficiency) and unit factors.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
    const int n = std::min(m.rows, m.cols);
    std::vector<Int> gk(n + 1);
    gk[0] = 1;
    std::vector<int> rows_idx(m.rows), cols_idx(m.cols);
    std::iota(rows_idx.begin(), rows_idx.end(), 0);
    std::iota(cols_idx.begin(), cols_idx.end(), 0);
    for (int k = 1; k <= n; ++k) {
        Int g = 0;
        std::vector<int> rsel(k), csel(k);
        // enumerate k-subsets of rows and columns
        std::function<void(int, int)> rows_rec = [&](int start, int depth) {
            if (depth == k) {
                std::function<void(int, int)> cols_rec = [&](int cstart, int cdepth) {
                    if (cdepth == k) {
                        IntMatrix sub(k, k);
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
                        g = gcd(g, cofactor_determinant(sub));
                        return;
                    }
                    for (int c = cstart; c < m.cols; ++c) {
                        csel[cdepth] = c;
                        cols_rec(c + 1, cdepth + 1);
                    }
                };
                cols_rec(0, 0);
                return;
            }
            for (int r = start; r < m.rows; ++r) {
                rsel[depth] = r;
                rows_rec(r + 1, depth + 1);
            }
        };
        rows_rec(0, 0);
        gk[k] = g;
    }
    std::vector<Int> out;
    for (int k = 1; k <= n; ++k) {
        if (gk[k] == 0) out.push_back(0);
        else out.push_back(gk[k] / gk[k - 1]);
    }
    return out;
}

}  // namespace oracles
