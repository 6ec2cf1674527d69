#pragma once

// Legendrian front projections as left-to-right event words.
//
// A front is scanned column by column; at each column the strands are numbered
// 1..s from top to bottom.  Lcusp(p) opens a left cusp, inserting two strands
// at positions p, p+1.  Rcusp(p) closes the adjacent pair p, p+1.  Cross(p)
// lets the strand at p descend through the strand at p+1 (in a front the
// descending strand is always in front, so crossings carry no over/under
// data).  Crossing sign convention: +1 iff the two strands run the same
// horizontal direction, validated by the max-tb trefoil calibration anchor.

#include "legkit/types.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace legkit {

enum class EventKind { Lcusp, Rcusp, Cross };

struct Event {
    EventKind kind;
    int pos;  // 1-based strand position
    friend bool operator==(const Event&, const Event&) = default;
};

inline Event Lc(int p) { return {EventKind::Lcusp, p}; }
inline Event Rc(int p) { return {EventKind::Rcusp, p}; }
inline Event Xc(int p) { return {EventKind::Cross, p}; }

/// Ordered event word of a front; value type, immutable by convention.
struct FrontWord {
    std::vector<Event> events;
    friend bool operator==(const FrontWord&, const FrontWord&) = default;
};

enum class StrandRole { Upper, Lower };

/// Result of the strand trace.  Strands are numbered in birth order; each is
/// born at exactly one Lcusp and dies at exactly one Rcusp.
struct ComponentMap {
    int n_strands = 0;
    int n_components = 0;
    std::vector<int> component;                    // strand -> component id
    std::vector<std::pair<int, StrandRole>> birth; // strand -> (event, role)
    std::vector<std::pair<int, StrandRole>> death;
    std::vector<std::vector<int>> strand_crossings; // strand -> crossing event list
    // per event: the strands involved (upper first; for Cross, the descending
    // strand first)
    std::vector<std::pair<int, int>> event_strands;
    std::vector<std::vector<int>> component_events; // component -> events touching it
};

/// Strand trace / validation.  Throws validation_error on any invariant
/// violation (position out of range, open strands at the end).
inline ComponentMap validate(const FrontWord& w) {
    ComponentMap cm;
    std::vector<int> stack;
    std::vector<int> parent;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (size_t e = 0; e < w.events.size(); ++e) {
        const auto [kind, p] = w.events[e];
        const int s = static_cast<int>(stack.size());
        switch (kind) {
        case EventKind::Lcusp: {
            if (p < 1 || p > s + 1)
                throw validation_error("event " + std::to_string(e) + ": L" +
                                       std::to_string(p) + " out of range for " +
                                       std::to_string(s) + " strands");
            int a = cm.n_strands++, b = cm.n_strands++;
            parent.push_back(a);
            parent.push_back(b);
            unite(a, b);
            stack.insert(stack.begin() + (p - 1), {a, b});
            cm.birth.resize(cm.n_strands, {-1, StrandRole::Upper});
            cm.death.resize(cm.n_strands, {-1, StrandRole::Upper});
            cm.strand_crossings.resize(cm.n_strands);
            cm.birth[a] = {static_cast<int>(e), StrandRole::Upper};
            cm.birth[b] = {static_cast<int>(e), StrandRole::Lower};
            cm.event_strands.push_back({a, b});
            break;
        }
        case EventKind::Rcusp: {
            if (p < 1 || p > s - 1)
                throw validation_error("event " + std::to_string(e) + ": R" +
                                       std::to_string(p) + " out of range for " +
                                       std::to_string(s) + " strands");
            int a = stack[p - 1], b = stack[p];
            unite(a, b);
            stack.erase(stack.begin() + (p - 1), stack.begin() + (p + 1));
            cm.death[a] = {static_cast<int>(e), StrandRole::Upper};
            cm.death[b] = {static_cast<int>(e), StrandRole::Lower};
            cm.event_strands.push_back({a, b});
            break;
        }
        case EventKind::Cross: {
            if (p < 1 || p > s - 1)
                throw validation_error("event " + std::to_string(e) + ": X" +
                                       std::to_string(p) + " out of range for " +
                                       std::to_string(s) + " strands");
            int a = stack[p - 1], b = stack[p];
            std::swap(stack[p - 1], stack[p]);
            cm.strand_crossings[a].push_back(static_cast<int>(e));
            cm.strand_crossings[b].push_back(static_cast<int>(e));
            cm.event_strands.push_back({a, b});
            break;
        }
        }
    }
    if (!stack.empty())
        throw validation_error(std::to_string(stack.size()) + " open strands at end of word");

    cm.component.assign(cm.n_strands, -1);
    std::map<int, int> root_to_comp;
    for (int s = 0; s < cm.n_strands; ++s) {
        int r = find(s);
        auto it = root_to_comp.find(r);
        if (it == root_to_comp.end())
            it = root_to_comp.emplace(r, cm.n_components++).first;
        cm.component[s] = it->second;
    }
    cm.component_events.resize(cm.n_components);
    for (size_t e = 0; e < w.events.size(); ++e) {
        auto [a, b] = cm.event_strands[e];
        int ca = cm.component[a], cb = cm.component[b];
        cm.component_events[ca].push_back(static_cast<int>(e));
        if (cb != ca) cm.component_events[cb].push_back(static_cast<int>(e));
    }
    return cm;
}

inline int n_components(const FrontWord& w) { return validate(w).n_components; }

enum class Dir { Right, Left };
inline Dir flip(Dir d) { return d == Dir::Right ? Dir::Left : Dir::Right; }

/// An oriented front: per-strand horizontal directions, consistent along each
/// component (the two strands at any cusp run opposite ways).
struct OrientedFront {
    FrontWord word;
    ComponentMap cm;
    std::vector<Dir> dir;  // strand -> direction
};

/// First-born strand of a component (the upper strand of its earliest Lcusp).
inline int first_born_strand(const ComponentMap& cm, int comp) {
    for (int s = 0; s < cm.n_strands; ++s)
        if (cm.component[s] == comp) return s;
    throw validation_error("unknown component " + std::to_string(comp));
}

/// Propagate directions from per-component seeds (seed = direction of the
/// component's first-born strand).  Missing seeds default to rightward.
inline OrientedFront orient(const FrontWord& w, const std::map<int, Dir>& seeds = {}) {
    OrientedFront f{w, validate(w), {}};
    const auto& cm = f.cm;
    f.dir.assign(cm.n_strands, Dir::Right);
    std::vector<char> seen(cm.n_strands, 0);
    std::vector<std::vector<int>> adj(cm.n_strands);
    for (size_t e = 0; e < w.events.size(); ++e) {
        if (w.events[e].kind == EventKind::Cross) continue;
        auto [a, b] = cm.event_strands[e];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [c, d] : seeds)
        if (c < 0 || c >= cm.n_components)
            throw validation_error("orientation seed for unknown component " + std::to_string(c));
    for (int c = 0; c < cm.n_components; ++c) {
        int s0 = first_born_strand(cm, c);
        auto it = seeds.find(c);
        f.dir[s0] = it == seeds.end() ? Dir::Right : it->second;
        seen[s0] = 1;
        std::vector<int> work{s0};
        while (!work.empty()) {
            int u = work.back();
            work.pop_back();
            for (int v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    f.dir[v] = flip(f.dir[u]);
                    work.push_back(v);
                } else if (f.dir[v] == f.dir[u]) {
                    throw validation_error("inconsistent orientation around a cusp");
                }
            }
        }
    }
    return f;
}

/// Reverse the orientation of one component.
inline OrientedFront reversed(const OrientedFront& f, int comp) {
    OrientedFront g = f;
    for (int s = 0; s < g.cm.n_strands; ++s)
        if (g.cm.component[s] == comp) g.dir[s] = flip(g.dir[s]);
    return g;
}

inline int crossing_sign(const OrientedFront& f, int event) {
    auto [a, b] = f.cm.event_strands[event];
    return f.dir[a] == f.dir[b] ? 1 : -1;
}

/// Sum of crossing signs.  With `restrict_pair` {i,j}, i != j: only crossings
/// between components i and j (then writhe = 2 lk(i,j)); with i == j: the
/// self-writhe of component i.
inline int writhe(const OrientedFront& f,
                  std::optional<std::pair<int, int>> restrict_pair = std::nullopt) {
    int w = 0;
    for (size_t e = 0; e < f.word.events.size(); ++e) {
        if (f.word.events[e].kind != EventKind::Cross) continue;
        auto [a, b] = f.cm.event_strands[e];
        int ca = f.cm.component[a], cb = f.cm.component[b];
        if (restrict_pair) {
            auto [i, j] = *restrict_pair;
            if (i == j ? !(ca == i && cb == i)
                       : !((ca == i && cb == j) || (ca == j && cb == i)))
                continue;
        }
        w += crossing_sign(f, static_cast<int>(e));
    }
    return w;
}

/// Inter-component linking number (half the signed crossing count).
inline int lk(const OrientedFront& f, int i, int j) {
    int w = writhe(f, std::make_pair(i, j));
    if (w % 2 != 0) throw validation_error("odd inter-component crossing sum");
    return w / 2;
}

/// Cusps of component c traversed upward / downward.
inline std::pair<int, int> cusp_counts(const OrientedFront& f, int c) {
    if (c < 0 || c >= f.cm.n_components)
        throw validation_error("unknown component " + std::to_string(c));
    int up = 0, down = 0;
    for (size_t e = 0; e < f.word.events.size(); ++e) {
        const auto kind = f.word.events[e].kind;
        if (kind == EventKind::Cross) continue;
        auto [a, b] = f.cm.event_strands[e];  // a upper, b lower
        if (f.cm.component[a] != c) continue;
        // entering strand: leftward at an Lcusp, rightward at an Rcusp;
        // entering on the upper strand means the cusp is traversed downward.
        bool entering_upper = (kind == EventKind::Lcusp) ? (f.dir[a] == Dir::Left)
                                                         : (f.dir[a] == Dir::Right);
        (entering_upper ? down : up) += 1;
    }
    return {up, down};
}

/// Thurston-Bennequin invariant: self-writhe minus half the cusp count.
inline int tb(const OrientedFront& f, int c) {
    auto [up, down] = cusp_counts(f, c);
    int cusps = up + down;
    if (cusps % 2 != 0) throw validation_error("odd cusp count on a component");
    return writhe(f, std::make_pair(c, c)) - cusps / 2;
}

/// Rotation number: half the signed cusp imbalance.
inline int rot(const OrientedFront& f, int c) {
    auto [up, down] = cusp_counts(f, c);
    return (down - up) / 2;
}

inline int tb(const FrontWord& w, int c) { return tb(orient(w), c); }
inline int rot(const FrontWord& w, int c) { return rot(orient(w), c); }

/// Insert a zig-zag on component c right after the birth cusp of one of its
/// strands.  tb drops by 1; rot (under default seeds) changes by exactly
/// `sign`.  The host strand is chosen so that no existing zig-zag pattern is
/// rewired away: a down-bend re-roles its host's death to upper, an up-bend
/// to lower, so a host whose roles already mix the other way keeps its own
/// witness.
inline FrontWord stabilize(const FrontWord& w, int comp, int sign) {
    if (sign != 1 && sign != -1) throw validation_error("stabilization sign must be +1 or -1");
    auto f = orient(w);
    const auto& cm = f.cm;
    if (comp < 0 || comp >= cm.n_components)
        throw validation_error("unknown component " + std::to_string(comp));
    int host = -1;
    bool down_bend = true;  // [L(q+1), R(q)] vs [L(q), R(q+1)]
    for (int s = 0; s < cm.n_strands && host < 0; ++s) {
        if (cm.component[s] != comp) continue;
        bool down = (sign > 0) == (f.dir[s] == Dir::Right);
        bool witness = cm.strand_crossings[s].empty() &&
                       cm.birth[s].second != cm.death[s].second;
        // a down-bend destroys an upper-to-lower witness, an up-bend a
        // lower-to-upper one; skip hosts whose pattern would be rewired
        if (witness && down && cm.birth[s].second == StrandRole::Upper) continue;
        if (witness && !down && cm.birth[s].second == StrandRole::Lower) continue;
        host = s;
        down_bend = down;
    }
    if (host < 0) {  // no safe host: take the first-born strand
        host = first_born_strand(cm, comp);
        down_bend = (sign > 0) == (f.dir[host] == Dir::Right);
    }
    auto [e, role] = cm.birth[host];
    int q = w.events[e].pos + (role == StrandRole::Lower ? 1 : 0);
    FrontWord out = w;
    auto it = out.events.begin() + e + 1;
    if (down_bend)
        out.events.insert(it, {Lc(q + 1), Rc(q)});  // zig-zag hanging below
    else
        out.events.insert(it, {Lc(q), Rc(q + 1)});  // zig-zag poking above
    return out;
}

/// Legendrian push-off: insert a parallel copy of component c.  Each strand
/// doubles, each crossing involving c becomes 4 (or 2) crossings, each cusp of
/// c becomes 2 cusps plus 1 crossing.  tb(copy) = tb(c), lk(copy, c) = tb(c).
inline FrontWord pushoff(const FrontWord& w, int comp) {
    auto cm = validate(w);
    if (comp < 0 || comp >= cm.n_components)
        throw validation_error("unknown component " + std::to_string(comp));
    FrontWord out;
    std::vector<char> dbl;  // current strands: belongs-to-comp flag
    auto hat = [&](int p) {
        int h = 1;
        for (int q = 0; q < p - 1; ++q) h += dbl[q] ? 2 : 1;
        return h;
    };
    for (size_t e = 0; e < w.events.size(); ++e) {
        const auto [kind, p] = w.events[e];
        auto [a, b] = cm.event_strands[e];
        const int ph = hat(p);
        switch (kind) {
        case EventKind::Lcusp: {
            bool d = cm.component[a] == comp;
            if (d)
                out.events.insert(out.events.end(), {Lc(ph), Lc(ph + 2), Xc(ph + 1)});
            else
                out.events.push_back(Lc(ph));
            dbl.insert(dbl.begin() + (p - 1), 2, d ? 1 : 0);
            break;
        }
        case EventKind::Rcusp: {
            bool d = cm.component[a] == comp;
            if (d)
                out.events.insert(out.events.end(), {Xc(ph + 1), Rc(ph), Rc(ph)});
            else
                out.events.push_back(Rc(ph));
            dbl.erase(dbl.begin() + (p - 1), dbl.begin() + (p + 1));
            break;
        }
        case EventKind::Cross: {
            bool da = cm.component[a] == comp, db = cm.component[b] == comp;
            if (da && db)
                out.events.insert(out.events.end(),
                                  {Xc(ph + 1), Xc(ph), Xc(ph + 2), Xc(ph + 1)});
            else if (da)
                out.events.insert(out.events.end(), {Xc(ph + 1), Xc(ph)});
            else if (db)
                out.events.insert(out.events.end(), {Xc(ph), Xc(ph + 1)});
            else
                out.events.push_back(Xc(ph));
            std::swap(dbl[p - 1], dbl[p]);
            break;
        }
        }
    }
    return out;
}

/// Disjoint union: `other` is placed to the right of `w`.
inline FrontWord disjoint_union(const FrontWord& w, const FrontWord& other) {
    FrontWord out = w;
    out.events.insert(out.events.end(), other.events.begin(), other.events.end());
    return out;
}

}  // namespace legkit
