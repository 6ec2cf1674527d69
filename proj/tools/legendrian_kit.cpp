// Command-line front end.  Subcommands: invariants, detect, surgery, seifert,
// hf, verdict.  --json switches every command to a machine-readable report.
// Exit codes: 0 success, 2 validation/parse error, 3 contradiction flag.

#include "legkit/catalog.hpp"
#include "legkit/detect.hpp"
#include "legkit/io.hpp"
#include "legkit/seifert.hpp"
#include "legkit/surgery.hpp"
#include "legkit/verdict.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace legkit;
using nlohmann::json;

namespace {

FrontFile load_front(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_front_file(in);
}

long long small(const Int& v) { return v.convert_to<long long>(); }

json json_rat(const Rat& q) { return to_string(q); }

json json_group(const AbelianGroup& g) {
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(small(d));
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"pretty", to_string(g)}};
}

json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(small(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

const char* kind_name(PatternKind k) {
    switch (k) {
    case PatternKind::ZigZag: return "zig-zag";
    case PatternKind::Fig1Config: return "overtwisting configuration";
    default: return "stabilized component";
    }
}

int cmd_invariants(const FrontFile& ff, bool as_json) {
    auto f = ff.oriented();
    json out;
    out["name"] = ff.name;
    out["components"] = f.cm.n_components;
    out["events"] = ff.word.events.size();
    out["total_writhe"] = writhe(f);
    json comps = json::array();
    for (int c = 0; c < f.cm.n_components; ++c) {
        auto [up, down] = cusp_counts(f, c);
        comps.push_back({{"component", c},
                         {"tb", tb(f, c)},
                         {"rot", rot(f, c)},
                         {"self_writhe", writhe(f, std::pair{c, c})},
                         {"cusps_up", up},
                         {"cusps_down", down}});
    }
    out["invariants"] = comps;
    if (f.cm.n_components > 1) {
        json links = json::array();
        for (int i = 0; i < f.cm.n_components; ++i)
            for (int j = i + 1; j < f.cm.n_components; ++j)
                links.push_back({{"pair", {i, j}}, {"lk", lk(f, i, j)}});
        out["linking"] = links;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "front " << ff.name << ": " << f.cm.n_components << " component(s), "
              << ff.word.events.size() << " events, writhe " << writhe(f) << "\n";
    for (const auto& c : out["invariants"])
        std::cout << "  component " << c["component"] << ": tb = " << c["tb"]
                  << ", rot = " << c["rot"] << ", self-writhe = " << c["self_writhe"]
                  << ", cusps up/down = " << c["cusps_up"] << "/" << c["cusps_down"] << "\n";
    if (out.contains("linking"))
        for (const auto& l : out["linking"])
            std::cout << "  lk(" << l["pair"][0] << ", " << l["pair"][1] << ") = " << l["lk"]
                      << "\n";
    return 0;
}

int cmd_detect(const FrontFile& ff, bool as_json) {
    auto f = ff.oriented();
    json out;
    out["name"] = ff.name;
    json witnesses = json::array();
    for (const auto& z : find_zigzags(ff.word)) {
        witnesses.push_back({{"kind", kind_name(z.kind)},
                             {"component", z.component},
                             {"events", z.event_indices},
                             {"citation", rule("ot-stabilized").anchor}});
    }
    for (int c = 0; c < f.cm.n_components; ++c)
        if (auto w = has_fig1_config(f, c))
            witnesses.push_back({{"kind", kind_name(w->kind)},
                                 {"component", w->component},
                                 {"events", w->event_indices},
                                 {"cusps_between", w->parity_data},
                                 {"citation", rule("ot-fig1").anchor}});
    {
        json sc = json::array();
        for (int c : stabilized_components(ff.word)) sc.push_back(c);
        out["stabilized_components"] = sc;
    }
    out["witnesses"] = witnesses;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (witnesses.empty()) {
        std::cout << "no syntactic witnesses found\n";
        return 0;
    }
    for (const auto& w : witnesses) {
        std::cout << w["kind"].get<std::string>() << " on component " << w["component"]
                  << " at events " << w["events"].dump();
        if (w.contains("cusps_between"))
            std::cout << " with " << w["cusps_between"] << " cusps between the strands";
        std::cout << "  [" << w["citation"].get<std::string>() << "]\n";
    }
    return 0;
}

int cmd_surgery(const FrontFile& ff, bool as_json) {
    auto d = ff.diagram();
    auto p = surgery_profile(d);
    auto c = c1_class(d);
    json out;
    out["name"] = ff.name;
    json sm = json::array(), cf = json::array();
    for (int i = 0; i < d.n_components(); ++i) {
        sm.push_back(smooth_coefficient(d, i));
        cf.push_back(d.coefficients[i]);
    }
    out["contact_coefficients"] = cf;
    out["smooth_coefficients"] = sm;
    out["linking_matrix"] = json_matrix(p.linking);
    out["h1"] = json_group(p.h1);
    out["sigma"] = p.sigma;
    out["chi"] = p.chi;
    out["q"] = p.q;
    if (p.hopf) {
        out["c_squared"] = json_rat(*p.c_squared);
        out["hopf"] = json_rat(*p.hopf);
        out["chat_degree"] = json_rat(*p.chat_degree);
    } else {
        out["hopf"] = "nontorsion";
        out["chat_degree"] = "nontorsion";
    }
    {
        json cls = json::array();
        for (size_t i = 0; i < c.residue.size(); ++i)
            cls.push_back({{"residue", small(c.residue[i])}, {"modulus", small(c.modulus[i])}});
        out["spin_c_class"] = cls;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "diagram " << ff.name << "\n";
    std::cout << "  contact coefficients: " << cf.dump() << "\n";
    std::cout << "  smooth coefficients:  " << sm.dump() << "\n";
    std::cout << "  linking matrix: " << out["linking_matrix"].dump() << "\n";
    std::cout << "  H1 = " << to_string(p.h1) << "\n";
    std::cout << "  sigma(X) = " << p.sigma << ", chi(X) = " << p.chi << ", q = " << p.q << "\n";
    if (p.hopf) {
        std::cout << "  c^2 = " << to_string(*p.c_squared) << "\n";
        std::cout << "  h = " << to_string(*p.hopf)
                  << ", expected chat degree = " << to_string(*p.chat_degree) << "\n";
    } else {
        std::cout << "  h undefined: the induced spin-c structure is not torsion\n";
    }
    std::cout << "  spin-c class: " << to_string(c) << "\n";
    return 0;
}

int cmd_seifert(long long k, bool as_json) {
    auto v = twist_knot_seifert(k);
    auto delta = alexander(v);
    IntMatrix s(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s(i, j) = v.v(i, j) + v.v(j, i);
    auto ev = symmetric_2x2_eigenvalues(s);
    auto [pos, neg] = twist_zero_surgery_hf(static_cast<int>(2 * k));
    json out;
    out["k"] = k;
    out["n"] = 2 * k;
    out["seifert_matrix"] = json_matrix(v.v);
    out["alexander"] = to_string(delta);
    out["signature"] = signature(v);
    if (ev) out["symmetrized_eigenvalues"] = {small(ev->first), small(ev->second)};
    out["hf_zero_surgery"] = to_string(pos);
    out["hf_zero_surgery_reversed"] = to_string(neg);
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "twist knot, k = " << k << " (n = " << 2 * k << " half-twists)\n";
    std::cout << "  V = " << out["seifert_matrix"].dump() << "\n";
    std::cout << "  Alexander = " << to_string(delta) << "\n";
    std::cout << "  signature = " << signature(v) << "\n";
    if (ev)
        std::cout << "  eigenvalues of V + V^T: " << ev->first << ", " << ev->second << "\n";
    std::cout << "  HF+ of the 0-surgery:          " << to_string(pos) << "\n";
    std::cout << "  HF+ of the reversed 0-surgery: " << to_string(neg) << "\n";
    return 0;
}

int cmd_verdict(const FrontFile& ff, const std::string& facts_path, bool as_json) {
    FactStore facts;
    if (!facts_path.empty()) {
        std::ifstream in(facts_path);
        if (!in) throw parse_error("cannot open '" + facts_path + "'");
        facts = parse_facts_file(in);
    }
    auto rep = evaluate(ff.diagram(), facts);
    json out;
    out["name"] = ff.name;
    out["diagram"] = rep.diagram_summary;
    out["verdict"] = to_string(rep.verdict);
    out["contradiction"] = rep.contradiction;
    json reasons = json::array();
    for (const auto& r : rep.reasons)
        reasons.push_back(
            {{"rule", r.rule_id}, {"citation", r.anchor}, {"witness", r.witness}});
    out["reasons"] = reasons;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "diagram " << ff.name << ": " << rep.diagram_summary << "\n";
        std::cout << "verdict: " << to_string(rep.verdict)
                  << (rep.contradiction ? " (CONTRADICTION among fired rules)" : "") << "\n";
        for (const auto& r : rep.reasons)
            std::cout << "  [" << r.anchor << "] " << r.rule_id << ": " << r.witness << "\n";
    }
    return rep.contradiction ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants, detectors and verdicts for Legendrian fronts and contact "
                 "surgery diagrams"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string front_path, diagram_path, facts_path, module_text;
    long long twist_k = 1, vrank_k = 0;
    long long ta = 0, tb_ = 0, tc = 0;

    auto* inv = app.add_subcommand("invariants", "classical invariants of a front");
    inv->add_option("front", front_path, "front file")->required();

    auto* det = app.add_subcommand("detect", "overtwistedness pattern detectors");
    det->add_option("front", front_path, "front file")->required();

    auto* sur = app.add_subcommand("surgery", "characteristic numbers of a surgery diagram");
    sur->add_option("diagram", diagram_path, "diagram file")->required();

    auto* sei = app.add_subcommand("seifert", "twist-knot Seifert algebra");
    sei->add_option("--twist", twist_k, "twist parameter k (n = 2k)")->required();

    auto* hf = app.add_subcommand("hf", "graded-module bookkeeping");
    hf->require_subcommand(1);
    auto* hfd = hf->add_subcommand("dual", "orientation-reversal dual of a module");
    hfd->add_option("module", module_text, "module notation, e.g. 'T(1/2) + Z^2(-2)'")
        ->required();
    auto* hft = hf->add_subcommand("triangle", "image ranks of an exact triangle");
    hft->add_option("a", ta, "rank of the first corner")->required();
    hft->add_option("b", tb_, "rank of the second corner")->required();
    hft->add_option("c", tc, "rank of the third corner")->required();
    auto* hfv = hf->add_subcommand("vrank", "total hat-rank of V(k) by the triangle induction");
    hfv->add_option("k", vrank_k, "parameter k >= 0")->required();

    auto* ver = app.add_subcommand("verdict", "apply the surgery criteria rule engine");
    ver->add_option("diagram", diagram_path, "diagram file")->required();
    ver->add_option("--facts", facts_path, "declared smooth facts file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(load_front(front_path), as_json);
        if (det->parsed()) return cmd_detect(load_front(front_path), as_json);
        if (sur->parsed()) return cmd_surgery(load_front(diagram_path), as_json);
        if (sei->parsed()) return cmd_seifert(twist_k, as_json);
        if (ver->parsed()) return cmd_verdict(load_front(diagram_path), facts_path, as_json);
        if (hf->parsed()) {
            if (hfd->parsed()) {
                auto m = parse_module(module_text);
                auto d = dual(m);
                if (as_json)
                    std::cout << json{{"input", to_string(m)}, {"dual", to_string(d)}}.dump(2)
                              << "\n";
                else
                    std::cout << to_string(d) << "\n";
                return 0;
            }
            if (hft->parsed()) {
                TriangleRanks t{ta, tb_, tc};
                auto im = image_ranks(t);
                json out{{"a", ta},
                         {"b", tb_},
                         {"c", tc},
                         {"image_ranks", {im.x, im.y, im.z}},
                         {"forced_zero",
                          {im.zero_ab(), im.zero_bc(), im.zero_ca()}},
                         {"forced_injective",
                          {im.injective_ab(t), im.injective_bc(t), im.injective_ca(t)}}};
                if (as_json) {
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "image ranks: (" << im.x << ", " << im.y << ", " << im.z
                              << ")\n";
                    auto flag = [&](const char* name, bool zero, bool inj) {
                        std::cout << "  " << name << ":" << (zero ? " zero" : "")
                                  << (inj ? " injective" : "") << ((zero || inj) ? "" : " -")
                                  << "\n";
                    };
                    flag("A -> B", im.zero_ab(), im.injective_ab(t));
                    flag("B -> C", im.zero_bc(), im.injective_bc(t));
                    flag("C -> A", im.zero_ca(), im.injective_ca(t));
                }
                return 0;
            }
            if (hfv->parsed()) {
                long long r = v_rank(static_cast<int>(vrank_k));
                if (as_json)
                    std::cout << json{{"k", vrank_k}, {"rank", r}}.dump(2) << "\n";
                else
                    std::cout << "rank " << r << " (= 2k + 2)\n";
                return 0;
            }
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
