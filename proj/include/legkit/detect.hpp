#pragma once

// Syntactic overtwistedness detectors on front words.
//
// find_zigzags looks for the two stabilization wiggles: a strand born at an
// Lcusp and dying at an Rcusp with no crossings on it, switching upper/lower
// role between the two cusps.  An empty answer means no syntactic zig-zag in
// this word, not that the knot is no stabilization.
//
// has_fig1_config matches the overtwisted-disk configuration: two strands of
// one knot component crossing each other twice in a row (a clasp with a clean
// corridor), running in opposite horizontal directions; equivalently the knot
// arc connecting the two strands carries an odd number of cusps.  The parity
// is recomputed independently by walking that arc and must agree.

#include "legkit/front.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace legkit {

enum class PatternKind { ZigZag, Fig1Config, StabilizedComponent };

struct PatternWitness {
    PatternKind kind;
    std::vector<int> event_indices;
    int component = -1;
    int parity_data = 0;  // Fig1 only: cusps between the marked strands
    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

inline std::vector<PatternWitness> find_zigzags(const FrontWord& w) {
    auto cm = validate(w);
    std::vector<PatternWitness> out;
    for (int s = 0; s < cm.n_strands; ++s) {
        if (!cm.strand_crossings[s].empty()) continue;
        auto [be, brole] = cm.birth[s];
        auto [de, drole] = cm.death[s];
        if (brole != drole)
            out.push_back({PatternKind::ZigZag, {be, de}, cm.component[s], 0});
    }
    return out;
}

inline std::set<int> stabilized_components(const FrontWord& w) {
    std::set<int> out;
    for (const auto& z : find_zigzags(w)) out.insert(z.component);
    return out;
}

/// The configuration template, kept as data so the transcription can be
/// adjusted without touching the matcher.
struct Fig1Template {
    int clasp_crossings = 2;       // consecutive crossings of one strand pair
    bool require_odd_parity = true;
};

namespace detail {

// strand ids by position just before event `upto`
inline std::vector<int> positions_before(const FrontWord& w, const ComponentMap& cm, int upto) {
    std::vector<int> stack;
    for (int e = 0; e < upto; ++e) {
        const auto [kind, p] = w.events[e];
        auto [a, b] = cm.event_strands[e];
        switch (kind) {
        case EventKind::Lcusp:
            stack.insert(stack.begin() + (p - 1), {a, b});
            break;
        case EventKind::Rcusp:
            stack.erase(stack.begin() + (p - 1), stack.begin() + (p + 1));
            break;
        case EventKind::Cross:
            std::swap(stack[p - 1], stack[p]);
            break;
        }
    }
    return stack;
}

// cusps traversed walking the component from strand s to strand t
inline int arc_cusp_count(const ComponentMap& cm, int s, int t) {
    std::vector<std::vector<int>> nbr(cm.n_strands);
    // partners at the shared birth/death cusps
    std::map<int, std::vector<int>> at_event;
    for (int u = 0; u < cm.n_strands; ++u) {
        at_event[cm.birth[u].first].push_back(u);
        at_event[cm.death[u].first].push_back(u);
    }
    for (auto& [e, us] : at_event) {
        if (us.size() == 2) {
            nbr[us[0]].push_back(us[1]);
            nbr[us[1]].push_back(us[0]);
        }
    }
    int prev = -1, cur = s, count = 0;
    while (true) {
        int next = -1;
        for (int v : nbr[cur])
            if (v != prev) next = v;
        if (next == -1) next = prev;  // two-strand component
        ++count;
        if (next == t) return count;
        prev = cur;
        cur = next;
        if (count > 2 * cm.n_strands + 2)
            throw validation_error("arc walk failed to reach target strand");
    }
}

}  // namespace detail

namespace detail {

// no event between e1 and e2 may touch strands s, t or insert between them
inline bool corridor_clean(const OrientedFront& f, int s, int t, int e1, int e2) {
    const auto& cm = f.cm;
    for (int e = e1 + 1; e < e2; ++e) {
        auto stack = positions_before(f.word, cm, e);
        int ps = -1, pt = -1;
        for (size_t q = 0; q < stack.size(); ++q) {
            if (stack[q] == s) ps = static_cast<int>(q) + 1;
            if (stack[q] == t) pt = static_cast<int>(q) + 1;
        }
        if (ps < 0 || pt < 0) return false;
        int lo = std::min(ps, pt), hi = std::max(ps, pt);
        const auto [kind, p] = f.word.events[e];
        if (kind == EventKind::Lcusp) {
            if (p == hi) return false;  // inserts between the pair
        } else {
            if (!(p + 1 < lo || p > hi)) return false;  // touches the pair
        }
    }
    return true;
}

}  // namespace detail

/// First witness of the configuration on component c, if any: a run of
/// `clasp_crossings` consecutive crossings of one anti-parallel strand pair
/// with clean corridors, odd cusp count along the connecting arc.
inline std::optional<PatternWitness> has_fig1_config(const OrientedFront& f, int c,
                                                     const Fig1Template& tpl = {}) {
    const auto& cm = f.cm;
    if (c < 0 || c >= cm.n_components)
        throw validation_error("unknown component " + std::to_string(c));
    if (tpl.clasp_crossings < 2)
        throw validation_error("the configuration template needs at least 2 crossings");
    // crossing events grouped by (unordered) strand pair, in word order
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (size_t e = 0; e < f.word.events.size(); ++e) {
        if (f.word.events[e].kind != EventKind::Cross) continue;
        auto [a, b] = cm.event_strands[e];
        if (cm.component[a] != c || cm.component[b] != c) continue;
        by_pair[std::minmax(a, b)].push_back(static_cast<int>(e));
    }
    for (const auto& [pair, events] : by_pair) {
        auto [s, t] = pair;
        if (f.dir[s] == f.dir[t]) continue;  // need anti-parallel strands
        const int k = tpl.clasp_crossings;
        for (size_t i = 0; i + k <= events.size(); ++i) {
            bool clean = true;
            for (int j = 0; j + 1 < k && clean; ++j)
                clean = detail::corridor_clean(f, s, t, events[i + j], events[i + j + 1]);
            if (!clean) continue;
            int parity = detail::arc_cusp_count(cm, s, t);
            if (tpl.require_odd_parity && parity % 2 == 0)
                throw validation_error(
                    "cusp parity disagrees with the strand directions at the witness");
            std::vector<int> idx(events.begin() + i, events.begin() + i + k);
            return PatternWitness{PatternKind::Fig1Config, idx, c, parity};
        }
    }
    return std::nullopt;
}

}  // namespace legkit
