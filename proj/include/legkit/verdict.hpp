#pragma once

// Rule engine: applies the surgery-criteria theorems to a contact surgery
// diagram plus user-declared smooth facts and emits a cited verdict.  Smooth
// knowledge (knot types, slice genus, lens-space slopes, alternative
// representatives) is declared input, never computed from the diagram.

#include "legkit/detect.hpp"
#include "legkit/hfmod.hpp"
#include "legkit/surgery.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace legkit {

/// Declared smooth facts about one component.
struct ComponentFacts {
    std::optional<std::string> smooth_type;
    std::optional<int> slice_genus;            // g_s >= 0
    std::optional<long long> l_space_slope;    // n > 0 with n-surgery an L-space
    std::optional<std::pair<int, int>> alt_representative;  // (tb, rot) of another
                                                            // Legendrian of the same type
};

struct FactStore {
    std::map<int, ComponentFacts> by_component;

    const ComponentFacts* find(int comp) const {
        auto it = by_component.find(comp);
        return it == by_component.end() ? nullptr : &it->second;
    }
    void check(int n_components) const {
        for (const auto& [c, f] : by_component) {
            if (c < 0 || c >= n_components)
                throw validation_error("facts reference unknown component " + std::to_string(c));
            if (f.slice_genus && *f.slice_genus < 0)
                throw validation_error("slice genus must be >= 0");
            if (f.l_space_slope && *f.l_space_slope <= 0)
                throw validation_error("L-space slope must be positive");
        }
    }
};

enum class Verdict {
    Overtwisted,
    TbBoundViolated,
    ChatVanishes,
    CplusVanishes,
    Tight,
    Unknown,
};

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Overtwisted: return "Overtwisted";
    case Verdict::TbBoundViolated: return "TbBoundViolated";
    case Verdict::ChatVanishes: return "ChatVanishes";
    case Verdict::CplusVanishes: return "CplusVanishes";
    case Verdict::Tight: return "Tight";
    default: return "Unknown";
    }
}

/// Rule table: id, literature anchor (printed verbatim), one-line content.
struct RuleInfo {
    const char* id;
    const char* anchor;
    const char* summary;
};

inline const std::vector<RuleInfo>& rule_table() {
    static const std::vector<RuleInfo> table = {
        {"ot-fig1", "Thm 1.1",
         "+1-surgery on a knot whose front shows the marked-strand configuration with odd cusp "
         "parity is overtwisted"},
        {"ot-stabilized", "Lemma 3.2",
         "+1-surgery on a stabilized Legendrian knot is overtwisted"},
        {"ot-stabilized-link", "Prop 3.3",
         "surgery with +1 on a stabilized component of a link is overtwisted"},
        {"ot-negative-torus", "Cor 1.2",
         "+1-surgery on a Legendrian negative torus knot is overtwisted"},
        {"tb-bound", "Thm 1.3",
         "a knot with an L-space surgery at slope n admits no Legendrian representative with tb "
         "exceeding n"},
        {"chat-vanishes", "Prop 1.4(1)",
         "+1-surgery on the smaller-tb one of two smoothly isotopic Legendrians has vanishing "
         "hat contact class"},
        {"cplus-vanishes", "Prop 1.4(2)",
         "+1-surgery on a knot with tb <= -2 has vanishing plus contact class"},
        {"tight-stein", "Thm 2.5(2)",
         "Legendrian (-1)-surgery is Stein fillable, hence tight with nonzero contact class"},
        {"tight-slice-genus", "LS4 criterion",
         "+1-surgery on a knot with tb = 2 g_s - 1 is tight"},
    };
    return table;
}

inline const RuleInfo& rule(const std::string& id) {
    for (const auto& r : rule_table())
        if (id == r.id) return r;
    throw validation_error("unknown rule id " + id);
}

struct Reason {
    std::string rule_id;
    std::string anchor;
    std::string witness;  // human-readable witness data
    friend bool operator==(const Reason&, const Reason&) = default;
};

struct VerdictReport {
    Verdict verdict = Verdict::Unknown;
    std::vector<Reason> reasons;
    bool contradiction = false;
    std::string diagram_summary;
};

/// tb bound from a declared L-space slope; on violation the report carries the
/// rank trace of the injectivity argument.
struct TbBoundCheck {
    bool ok = true;
    long long bound = 0;
    long long observed = 0;
    std::string trace;
};

inline TbBoundCheck check_tb_bound(long long n, long long tb_observed) {
    TbBoundCheck out;
    out.bound = n;
    out.observed = tb_observed;
    out.ok = tb_observed <= n;
    if (!out.ok) {
        auto im = image_ranks({1, n + 1, n});
        std::ostringstream os;
        os << "ranks (1, " << n + 1 << ", " << n << ") force images (" << im.x << ", " << im.y
           << ", " << im.z << "): third map zero, first injective, so the contact class of the "
           << "overtwisted surgery could not vanish";
        out.trace = os.str();
    }
    return out;
}

namespace detail {

inline void add_reason(VerdictReport& rep, const char* id, const std::string& witness) {
    const auto& r = rule(id);
    rep.reasons.push_back({r.id, r.anchor, witness});
}

}  // namespace detail

/// Apply every rule, report all that fire; the verdict is the highest-
/// precedence conclusion.  An overtwisted-type and tight-type rule firing
/// together is reported with the contradiction flag rather than resolved.
inline VerdictReport evaluate(const ContactSurgeryDiagram& d, const FactStore& facts = {}) {
    const int m = d.n_components();
    facts.check(m);
    VerdictReport rep;
    {
        std::ostringstream os;
        os << m << " component(s), contact coefficients (";
        for (int i = 0; i < m; ++i) os << (i ? ", " : "") << (d.coefficients[i] > 0 ? "+1" : "-1");
        os << ")";
        rep.diagram_summary = os.str();
    }

    bool fired_overtwisted = false, fired_tight = false;
    bool single_plus_one = (m == 1 && d.coefficients[0] == 1);

    // (1) overtwistedness
    if (single_plus_one) {
        if (auto wtn = has_fig1_config(d.front, 0)) {
            std::ostringstream os;
            os << "configuration at events (" << wtn->event_indices[0] << ", "
               << wtn->event_indices[1] << "), " << wtn->parity_data << " cusps between the strands";
            detail::add_reason(rep, "ot-fig1", os.str());
            fired_overtwisted = true;
        }
        if (auto f = facts.find(0); f && f->smooth_type &&
                                    f->smooth_type->find("negative torus") != std::string::npos) {
            detail::add_reason(rep, "ot-negative-torus", "declared smooth type: " + *f->smooth_type);
            fired_overtwisted = true;
        }
    }
    {
        auto zz = find_zigzags(d.front.word);
        for (int c = 0; c < m; ++c) {
            if (d.coefficients[c] != 1) continue;
            auto it = std::find_if(zz.begin(), zz.end(),
                                   [&](const PatternWitness& z) { return z.component == c; });
            if (it != zz.end()) {
                std::ostringstream os;
                os << "zig-zag on component " << c << " at events (" << it->event_indices[0]
                   << ", " << it->event_indices[1] << ")";
                detail::add_reason(rep, m == 1 ? "ot-stabilized" : "ot-stabilized-link", os.str());
                fired_overtwisted = true;
            }
        }
    }

    // (2) tb bound against a declared L-space slope
    bool fired_tb_bound = false;
    for (int c = 0; c < m; ++c) {
        auto f = facts.find(c);
        if (!f || !f->l_space_slope) continue;
        auto chk = check_tb_bound(*f->l_space_slope, tb(d.front, c));
        if (!chk.ok) {
            std::ostringstream os;
            os << "component " << c << ": tb = " << chk.observed << " > " << chk.bound << "; "
               << chk.trace;
            detail::add_reason(rep, "tb-bound", os.str());
            fired_tb_bound = true;
        }
    }

    // (3) vanishing hat class from a larger-tb representative
    bool fired_chat = false;
    if (single_plus_one) {
        if (auto f = facts.find(0); f && f->alt_representative) {
            int tb0 = tb(d.front, 0);
            if (f->alt_representative->first > tb0) {
                std::ostringstream os;
                os << "declared representative with tb = " << f->alt_representative->first
                   << " exceeds tb = " << tb0;
                detail::add_reason(rep, "chat-vanishes", os.str());
                fired_chat = true;
            }
        }
    }

    // (4) vanishing plus class from tb <= -2
    bool fired_cplus = false;
    if (single_plus_one && tb(d.front, 0) <= -2) {
        detail::add_reason(rep, "cplus-vanishes", "tb = " + std::to_string(tb(d.front, 0)));
        fired_cplus = true;
    }

    // (5) tightness
    if (std::all_of(d.coefficients.begin(), d.coefficients.end(),
                    [](int c) { return c == -1; })) {
        detail::add_reason(rep, "tight-stein", "all contact coefficients are -1");
        fired_tight = true;
    }
    if (single_plus_one) {
        if (auto f = facts.find(0); f && f->slice_genus) {
            int tb0 = tb(d.front, 0);
            if (tb0 == 2 * *f->slice_genus - 1) {
                std::ostringstream os;
                os << "tb = " << tb0 << " = 2*" << *f->slice_genus << " - 1";
                detail::add_reason(rep, "tight-slice-genus", os.str());
                fired_tight = true;
            }
        }
    }

    if (fired_overtwisted) rep.verdict = Verdict::Overtwisted;
    else if (fired_tb_bound) rep.verdict = Verdict::TbBoundViolated;
    else if (fired_chat) rep.verdict = Verdict::ChatVanishes;
    else if (fired_cplus) rep.verdict = Verdict::CplusVanishes;
    else if (fired_tight) rep.verdict = Verdict::Tight;
    else rep.verdict = Verdict::Unknown;

    rep.contradiction = fired_overtwisted && fired_tight;
    return rep;
}

}  // namespace legkit
