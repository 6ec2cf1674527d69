#pragma once

// Line-oriented file formats.
//
// Front file:          front <name>
//                      L1 L3 X2 X2 ...      (any number of token lines)
//                      orient <component> <left|right>
//                      # comments anywhere
//                      end
// Diagram file adds:   surgery <component> <+1|-1>
// Facts file:          fact <component> <key> <value...>
//
// parse/print round-trip bit-exactly on normalized files (print emits the
// normal form: one event line, sorted orient/surgery lines, final `end`).

#include "legkit/front.hpp"
#include "legkit/surgery.hpp"
#include "legkit/verdict.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace legkit {

struct FrontFile {
    std::string name;
    FrontWord word;
    std::map<int, Dir> seeds;                 // explicit orient lines
    std::map<int, int> surgery_coefficients;  // diagram files only

    bool has_surgery() const { return !surgery_coefficients.empty(); }
    OrientedFront oriented() const { return orient(word, seeds); }
    ContactSurgeryDiagram diagram() const {
        auto f = oriented();
        std::vector<int> coeffs(f.cm.n_components, 0);
        for (auto& [c, v] : surgery_coefficients) {
            if (c < 0 || c >= f.cm.n_components)
                throw validation_error("surgery line references unknown component " +
                                       std::to_string(c));
            coeffs[c] = v;
        }
        for (int c = 0; c < f.cm.n_components; ++c)
            if (coeffs[c] == 0)
                throw validation_error("component " + std::to_string(c) +
                                       " has no surgery coefficient");
        return ContactSurgeryDiagram::make(f, std::move(coeffs));
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline Event parse_event_token(const std::string& tok, int lineno) {
    if (tok.size() < 2) throw parse_error("bad event token '" + tok + "'", lineno);
    EventKind k;
    switch (tok[0]) {
    case 'L': k = EventKind::Lcusp; break;
    case 'R': k = EventKind::Rcusp; break;
    case 'X': k = EventKind::Cross; break;
    default: throw parse_error("bad event token '" + tok + "'", lineno);
    }
    int p;
    try {
        size_t used = 0;
        p = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw parse_error("bad event position in '" + tok + "'", lineno);
    }
    if (p < 1) throw parse_error("event position must be >= 1 in '" + tok + "'", lineno);
    return {k, p};
}

}  // namespace detail

inline FrontFile parse_front_file(std::istream& in) {
    FrontFile ff;
    std::string line;
    int lineno = 0;
    bool started = false, ended = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (ended) throw parse_error("content after 'end'", lineno);
        if (!started) {
            if (toks[0] != "front" || toks.size() != 2)
                throw parse_error("expected 'front <name>' header", lineno);
            ff.name = toks[1];
            started = true;
            continue;
        }
        if (toks[0] == "end") {
            if (toks.size() != 1) throw parse_error("trailing tokens after 'end'", lineno);
            ended = true;
            continue;
        }
        if (toks[0] == "orient") {
            if (toks.size() != 3 || (toks[2] != "left" && toks[2] != "right"))
                throw parse_error("expected 'orient <component> <left|right>'", lineno);
            int c;
            try {
                c = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw parse_error("bad component index '" + toks[1] + "'", lineno);
            }
            Dir d = toks[2] == "right" ? Dir::Right : Dir::Left;
            if (auto it = ff.seeds.find(c); it != ff.seeds.end() && it->second != d)
                throw parse_error("conflicting orientation seeds for component " +
                                      std::to_string(c),
                                  lineno);
            ff.seeds[c] = d;
            continue;
        }
        if (toks[0] == "surgery") {
            if (toks.size() != 3 || (toks[2] != "+1" && toks[2] != "-1"))
                throw parse_error("expected 'surgery <component> <+1|-1>'", lineno);
            int c;
            try {
                c = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw parse_error("bad component index '" + toks[1] + "'", lineno);
            }
            ff.surgery_coefficients[c] = toks[2] == "+1" ? 1 : -1;
            continue;
        }
        for (const auto& t : toks) ff.word.events.push_back(detail::parse_event_token(t, lineno));
    }
    if (!started) throw parse_error("missing 'front <name>' header");
    if (!ended) throw parse_error("missing 'end' terminator", lineno);
    return ff;
}

inline FrontFile parse_front_file(const std::string& text) {
    std::istringstream is(text);
    return parse_front_file(is);
}

inline std::string event_token(const Event& e) {
    char k = e.kind == EventKind::Lcusp ? 'L' : e.kind == EventKind::Rcusp ? 'R' : 'X';
    return std::string(1, k) + std::to_string(e.pos);
}

inline void print_front_file(std::ostream& os, const FrontFile& ff) {
    os << "front " << ff.name << "\n";
    for (size_t i = 0; i < ff.word.events.size(); ++i)
        os << (i ? " " : "") << event_token(ff.word.events[i]);
    if (!ff.word.events.empty()) os << "\n";
    for (const auto& [c, d] : ff.seeds)
        os << "orient " << c << " " << (d == Dir::Right ? "right" : "left") << "\n";
    for (const auto& [c, v] : ff.surgery_coefficients)
        os << "surgery " << c << " " << (v > 0 ? "+1" : "-1") << "\n";
    os << "end\n";
}

inline std::string print_front_file(const FrontFile& ff) {
    std::ostringstream os;
    print_front_file(os, ff);
    return os.str();
}

/// Facts file: `fact <component> <key> <value...>` lines.  Keys: smooth_type
/// (free text), slice_genus, l_space_slope, alt_rep (tb rot).
inline FactStore parse_facts_file(std::istream& in) {
    FactStore fs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] != "fact" || toks.size() < 4)
            throw parse_error("expected 'fact <component> <key> <value>'", lineno);
        int c;
        try {
            c = std::stoi(toks[1]);
        } catch (const std::exception&) {
            throw parse_error("bad component index '" + toks[1] + "'", lineno);
        }
        auto& f = fs.by_component[c];
        const std::string& key = toks[2];
        try {
            if (key == "smooth_type") {
                std::string v;
                for (size_t i = 3; i < toks.size(); ++i) v += (i > 3 ? " " : "") + toks[i];
                f.smooth_type = v;
            } else if (key == "slice_genus") {
                f.slice_genus = std::stoi(toks[3]);
            } else if (key == "l_space_slope") {
                f.l_space_slope = std::stoll(toks[3]);
            } else if (key == "alt_rep") {
                if (toks.size() != 5) throw parse_error("alt_rep needs '<tb> <rot>'", lineno);
                f.alt_representative = {std::stoi(toks[3]), std::stoi(toks[4])};
            } else {
                throw parse_error("unknown fact key '" + key + "'", lineno);
            }
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("bad value for fact key '" + key + "'", lineno);
        }
    }
    return fs;
}

inline FactStore parse_facts_file(const std::string& text) {
    std::istringstream is(text);
    return parse_facts_file(is);
}

}  // namespace legkit
