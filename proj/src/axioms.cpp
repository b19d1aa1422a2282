#include "axioms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace b2c {

void AxiomReport::merge(AxiomReport other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::K0: return "K0";
        case Axiom::K1: return "K1";
        case Axiom::K2: return "K2";
        case Axiom::K3: return "K3";
        case Axiom::K4: return "K4";
        case Axiom::K5: return "K5";
    }
    return "?";
}

const char* derived_name(DerivedCheck c) {
    switch (c) {
        case DerivedCheck::HalfEdgeCorollary: return "half-edge-corollary";
        case DerivedCheck::HalfEdgeContext: return "half-edge-context";
        case DerivedCheck::StarSquares: return "star-squares";
        case DerivedCheck::DoubleHalf: return "double-half";
        case DerivedCheck::LabelConsistency: return "label-consistency";
    }
    return "?";
}

bool parse_check_id(const std::string& id, Axiom& axiom, DerivedCheck& derived, bool& is_axiom) {
    for (Axiom a : {Axiom::K0, Axiom::K1, Axiom::K2, Axiom::K3, Axiom::K4, Axiom::K5})
        if (id == axiom_name(a)) {
            axiom = a;
            is_axiom = true;
            return true;
        }
    for (DerivedCheck c :
         {DerivedCheck::HalfEdgeCorollary, DerivedCheck::HalfEdgeContext,
          DerivedCheck::StarSquares, DerivedCheck::DoubleHalf, DerivedCheck::LabelConsistency})
        if (id == derived_name(c)) {
            derived = c;
            is_axiom = false;
            return true;
        }
    return false;
}

namespace {

void require_labels(const ColoredGraph& g, const char* who) {
    for (const GEdge& e : g.edges)
        if (e.label_halves < 0)
            throw precondition_error(std::string(who) + " requires edge labels");
}

std::string halves_text(int halves) {
    switch (halves) {
        case 0: return "0";
        case 1: return "1/2";
        case 2: return "1";
        default: return std::to_string(halves) + "/2";
    }
}

AxiomReport k0(const ColoredGraph& g, const GraphView& view) {
    AxiomReport rep;
    for (int color : {kRed, kGreen}) {
        const char* cname = color == kRed ? "red" : "green";
        for (int v = 0; v < g.n; ++v) {
            if (view.out_edges(v, color).size() > 1)
                rep.violations.push_back({"K0", g.name(v),
                                          std::string("several outgoing ") + cname + " edges"});
            if (view.in_edges(v, color).size() > 1)
                rep.violations.push_back({"K0", g.name(v),
                                          std::string("several ingoing ") + cname + " edges"});
        }
        if (!view.strings_ok(color)) {
            // Distinguish a cycle from the degree faults reported above.
            bool degree_fault = false;
            for (int v = 0; v < g.n && !degree_fault; ++v)
                if (view.out_edges(v, color).size() > 1 || view.in_edges(v, color).size() > 1)
                    degree_fault = true;
            if (!degree_fault)
                rep.violations.push_back(
                    {"K0", "-", std::string(cname) + " edges contain a directed cycle"});
        }
    }
    return rep;
}

// K1 and K2 compare string statistics of the opposite color across each edge.
AxiomReport k1k2(const ColoredGraph& g, const GraphView& view, bool is_k1) {
    const char* id = is_k1 ? "K1" : "K2";
    AxiomReport rep;
    if (!view.strings_ok(kRed) || !view.strings_ok(kGreen)) {
        rep.violations.push_back({id, "-", "string statistics undefined (K0 fails)"});
        return rep;
    }
    for (const GEdge& e : g.edges) {
        int other = e.color == kRed ? kGreen : kRed;
        int dt = view.t(e.src, other) - view.t(e.dst, other);
        int dh = view.h(e.dst, other) - view.h(e.src, other);
        if (is_k1) {
            int want = e.color == kRed ? 1 : 2;
            if (dt + dh != want)
                rep.violations.push_back({id, g.edge_name(e),
                                          "string identity: got " + std::to_string(dt + dh) +
                                              ", expected " + std::to_string(want)});
        } else {
            if (dt < 0 || dh < 0)
                rep.violations.push_back(
                    {id, g.edge_name(e), "opposite-color string statistics increase across edge"});
        }
    }
    return rep;
}

AxiomReport k3(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "K3");
    AxiomReport rep;
    for (int color : {kRed, kGreen}) {
        if (!view.strings_ok(color)) {
            rep.violations.push_back({"K3", "-", "string statistics undefined (K0 fails)"});
            continue;
        }
        for (const auto& path : view.strings(color)) {
            int prev = -1;
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                const GEdge& e = g.edges[view.succ_edge(path[i], color)];
                if (prev >= 0 && e.label_halves < prev)
                    rep.violations.push_back({"K3", g.edge_name(e),
                                              "label " + halves_text(e.label_halves) +
                                                  " after " + halves_text(prev)});
                prev = e.label_halves;
            }
        }
    }
    return rep;
}

AxiomReport k4(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "K4");
    AxiomReport rep;
    auto edge_to = [&](int from, int to, int color, int label) {
        for (int ei : view.out_edges(from, color)) {
            const GEdge& e = g.edges[ei];
            if (e.dst == to && e.label_halves == label) return true;
        }
        return false;
    };
    for (int v = 0; v < g.n; ++v) {
        // Red in against green out.
        for (int ri : view.in_edges(v, kRed))
            for (int gi : view.out_edges(v, kGreen)) {
                int a = g.edges[ri].label_halves, b = g.edges[gi].label_halves;
                if (a == b) {
                    rep.violations.push_back({"K4", g.name(v), "red in and green out share label " +
                                                                   halves_text(a)});
                    continue;
                }
                if (a < b) {
                    int u = g.edges[ri].src, t = g.edges[gi].dst;
                    if (a != 0 || b != 2) {
                        rep.violations.push_back(
                            {"K4", g.name(v), "red in " + halves_text(a) + " below green out " +
                                                  halves_text(b)});
                        continue;
                    }
                    bool closed = false;
                    for (int si : view.out_edges(u, kGreen)) {
                        const GEdge& s = g.edges[si];
                        if (s.label_halves == 2 && edge_to(s.dst, t, kRed, 0)) closed = true;
                    }
                    if (!closed)
                        rep.violations.push_back({"K4", g.name(v), "raising square does not close"});
                }
            }
        // Green in against red out (the dual clause).
        for (int gi : view.in_edges(v, kGreen))
            for (int ri : view.out_edges(v, kRed)) {
                int b = g.edges[gi].label_halves, a = g.edges[ri].label_halves;
                if (a == b) {
                    rep.violations.push_back({"K4", g.name(v), "green in and red out share label " +
                                                                   halves_text(a)});
                    continue;
                }
                if (a > b) {
                    int p = g.edges[gi].src, t = g.edges[ri].dst;
                    if (a != 2 || b != 0) {
                        rep.violations.push_back(
                            {"K4", g.name(v), "red out " + halves_text(a) + " above green in " +
                                                  halves_text(b)});
                        continue;
                    }
                    bool closed = false;
                    for (int si : view.out_edges(p, kRed)) {
                        const GEdge& s = g.edges[si];
                        if (s.label_halves == 2 && edge_to(s.dst, t, kGreen, 0)) closed = true;
                    }
                    if (!closed)
                        rep.violations.push_back({"K4", g.name(v), "lowering square does not close"});
                }
            }
    }
    return rep;
}

AxiomReport k5(const ColoredGraph& g) {
    require_labels(g, "K5");
    AxiomReport rep;
    for (const RelPattern& p : pattern_catalog()) {
        if (p.advisory) continue;
        for (const Match& m : match_pattern(g, p)) {
            if (m.conclusion_ok) continue;
            rep.violations.push_back({"K5", g.name(m.map[0]),
                                      "premise of " + p.id + " matches but its conclusion does not"});
        }
    }
    return rep;
}

// Position of the critical vertex on the red string through each vertex:
// the number of 0-labeled edges along the string. Returns false on
// non-monotone labels.
bool red_critical_positions(const ColoredGraph& g, const GraphView& view,
                            std::vector<int>& crit, AxiomReport& rep, const char* who) {
    crit.assign(g.n, 0);
    bool ok = true;
    for (const auto& path : view.strings(kRed)) {
        int zeros = 0;
        bool seen_one = false, monotone = true;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int label = g.edges[view.succ_edge(path[i], kRed)].label_halves;
            if (label == 0) {
                if (seen_one) monotone = false;
                ++zeros;
            } else {
                seen_one = true;
            }
        }
        if (!monotone) {
            rep.violations.push_back(
                {who, g.name(path[0]), "red labels on string are not monotone"});
            ok = false;
            continue;
        }
        for (int v : path) crit[v] = zeros;
    }
    return ok;
}

AxiomReport derived_half_corollary(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "half-edge-corollary");
    AxiomReport rep;
    if (!view.strings_ok(kGreen)) {
        rep.violations.push_back({"half-edge-corollary", "-", "green strings malformed"});
        return rep;
    }
    for (const auto& path : view.strings(kGreen)) {
        int halves = 0;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (g.edges[view.succ_edge(path[i], kGreen)].label_halves == 1) ++halves;
        if (halves > 1)
            rep.violations.push_back({"half-edge-corollary", g.name(path[0]),
                                      "green string carries " + std::to_string(halves) +
                                          " half-labeled edges"});
    }
    return rep;
}

AxiomReport derived_half_context(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "half-edge-context");
    AxiomReport rep;
    for (const GEdge& e : g.edges) {
        if (e.color != kGreen || e.label_halves != 1) continue;
        int in_edge = view.pred_edge(e.src, kRed);
        if (in_edge < 0 || g.edges[in_edge].label_halves != 2)
            rep.violations.push_back({"half-edge-context", g.edge_name(e),
                                      "tail lacks an ingoing red edge labeled 1"});
        int out_edge = view.succ_edge(e.dst, kRed);
        if (out_edge < 0 || g.edges[out_edge].label_halves != 0)
            rep.violations.push_back({"half-edge-context", g.edge_name(e),
                                      "head lacks an outgoing red edge labeled 0"});
    }
    return rep;
}

AxiomReport derived_star_squares(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "star-squares");
    AxiomReport rep;
    if (!view.strings_ok(kRed) || !view.strings_ok(kGreen)) {
        rep.violations.push_back({"star-squares", "-", "strings malformed"});
        return rep;
    }
    std::vector<int> crit;
    if (!red_critical_positions(g, view, crit, rep, "star-squares")) return rep;

    for (int v = 0; v < g.n; ++v) {
        int d = view.t(v, kRed) - crit[v];
        bool need_in = d >= 1 || d <= -2;
        bool need_out = d <= -1 || d >= 2;
        if (need_in) {
            int re = view.pred_edge(v, kRed), ge = view.pred_edge(v, kGreen);
            if (re >= 0 && ge >= 0) {
                int u = g.edges[re].src, p = g.edges[ge].src;
                bool closed = false;
                for (int si : view.in_edges(u, kGreen))
                    if (view.pred(p, kRed) == g.edges[si].src) closed = true;
                if (!closed)
                    rep.violations.push_back(
                        {"star-squares", g.name(v), "ingoing red-green pair has no square"});
            }
        }
        if (need_out) {
            int re = view.succ_edge(v, kRed), ge = view.succ_edge(v, kGreen);
            if (re >= 0 && ge >= 0) {
                int u = g.edges[re].dst, p = g.edges[ge].dst;
                bool closed = false;
                for (int si : view.out_edges(u, kGreen))
                    if (view.succ(p, kRed) == g.edges[si].dst) closed = true;
                if (!closed)
                    rep.violations.push_back(
                        {"star-squares", g.name(v), "outgoing red-green pair has no square"});
            }
        }
    }
    return rep;
}

AxiomReport derived_double_half(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "double-half");
    AxiomReport rep;
    if (!view.strings_ok(kRed) || !view.strings_ok(kGreen)) {
        rep.violations.push_back({"double-half", "-", "strings malformed"});
        return rep;
    }
    std::vector<int> crit;
    if (!red_critical_positions(g, view, crit, rep, "double-half")) return rep;

    std::vector<int> string_of(g.n, -1);
    auto strings = view.strings(kRed);
    for (int s = 0; s < static_cast<int>(strings.size()); ++s)
        for (int v : strings[s]) string_of[v] = s;

    std::vector<int> in_count(strings.size(), 0), out_count(strings.size(), 0);
    for (const GEdge& e : g.edges) {
        if (e.color != kGreen || e.label_halves != 1) continue;
        int st = string_of[e.src];
        if (++out_count[st] > 1)
            rep.violations.push_back(
                {"double-half", g.edge_name(e), "second half edge leaving the red string"});
        if (view.t(e.src, kRed) != crit[e.src] + 1)
            rep.violations.push_back(
                {"double-half", g.edge_name(e), "half edge leaves away from critical offset +1"});
        int sh = string_of[e.dst];
        if (++in_count[sh] > 1)
            rep.violations.push_back(
                {"double-half", g.edge_name(e), "second half edge entering the red string"});
        if (view.t(e.dst, kRed) != crit[e.dst] - 1)
            rep.violations.push_back(
                {"double-half", g.edge_name(e), "half edge enters away from critical offset -1"});
    }
    return rep;
}

AxiomReport derived_label_consistency(const ColoredGraph& g, const GraphView& view) {
    require_labels(g, "label-consistency");
    AxiomReport rep;
    if (!view.strings_ok(kRed) || !view.strings_ok(kGreen)) {
        rep.violations.push_back({"label-consistency", "-", "strings malformed"});
        return rep;
    }
    for (const GEdge& e : g.edges) {
        int other = e.color == kRed ? kGreen : kRed;
        int dh = view.h(e.dst, other) - view.h(e.src, other);
        int want = e.color == kRed ? 2 * dh : dh;
        if (e.label_halves != want)
            rep.violations.push_back({"label-consistency", g.edge_name(e),
                                      "stored label " + halves_text(e.label_halves) +
                                          " differs from recomputed " + halves_text(want)});
    }
    return rep;
}

// Advisory diagnostic: a green edge labeled 1 should sit on top of a raising
// square or anchor one of the catalog premises.
AxiomReport green_one_coverage(const ColoredGraph& g, const GraphView& view) {
    AxiomReport rep;
    std::set<std::pair<int, int>> covered;
    for (const RelPattern& p : pattern_catalog()) {
        if (p.advisory || !p.dual_of.empty()) continue;
        for (const Match& m : match_pattern(g, p))
            for (const PatternEdge& pe : p.premise)
                if (pe.color == kGreen && pe.label_halves == 2)
                    covered.insert({m.map[pe.src], m.map[pe.dst]});
    }
    for (const GEdge& e : g.edges) {
        if (e.color != kGreen || e.label_halves != 2) continue;
        if (covered.count({e.src, e.dst})) continue;
        // Bottom of a square: e followed by red 0 commutes with red 0 then
        // green 1 out of the same tail.
        bool bottom = false;
        int ue = view.succ_edge(e.src, kRed);
        int se = view.succ_edge(e.dst, kRed);
        if (ue >= 0 && se >= 0 && g.edges[ue].label_halves == 0 &&
            g.edges[se].label_halves == 0) {
            int ve = view.succ_edge(g.edges[ue].dst, kGreen);
            if (ve >= 0 && g.edges[ve].label_halves == 2 && g.edges[ve].dst == g.edges[se].dst)
                bottom = true;
        }
        if (!bottom)
            rep.warnings.push_back({"green-one-coverage", g.edge_name(e),
                                    "green 1 edge not at the bottom of a square and "
                                    "outside every catalog premise"});
    }
    return rep;
}

}  // namespace

AxiomReport check_axiom(const ColoredGraph& g, Axiom id) {
    GraphView view(g);
    switch (id) {
        case Axiom::K0: return k0(g, view);
        case Axiom::K1: return k1k2(g, view, true);
        case Axiom::K2: return k1k2(g, view, false);
        case Axiom::K3: return k3(g, view);
        case Axiom::K4: return k4(g, view);
        case Axiom::K5: return k5(g);
    }
    throw std::invalid_argument("unknown axiom");
}

AxiomReport check_derived(const ColoredGraph& g, DerivedCheck id) {
    GraphView view(g);
    switch (id) {
        case DerivedCheck::HalfEdgeCorollary: return derived_half_corollary(g, view);
        case DerivedCheck::HalfEdgeContext: return derived_half_context(g, view);
        case DerivedCheck::StarSquares: return derived_star_squares(g, view);
        case DerivedCheck::DoubleHalf: return derived_double_half(g, view);
        case DerivedCheck::LabelConsistency: return derived_label_consistency(g, view);
    }
    throw std::invalid_argument("unknown derived check");
}

AxiomReport check_all(const ColoredGraph& g, bool include_derived) {
    AxiomReport rep;
    for (Axiom a : {Axiom::K0, Axiom::K1, Axiom::K2, Axiom::K3, Axiom::K4, Axiom::K5})
        rep.merge(check_axiom(g, a));
    if (include_derived) {
        for (DerivedCheck c :
             {DerivedCheck::HalfEdgeCorollary, DerivedCheck::HalfEdgeContext,
              DerivedCheck::StarSquares, DerivedCheck::DoubleHalf,
              DerivedCheck::LabelConsistency})
            rep.merge(check_derived(g, c));
        GraphView view(g);
        // Advisory relations hold on well-formed graphs; report as warnings.
        for (const RelPattern& p : pattern_catalog()) {
            if (!p.advisory) continue;
            for (const Match& m : match_pattern(g, p))
                if (!m.conclusion_ok)
                    rep.warnings.push_back({"advisory:" + p.id, g.name(m.map[0]),
                                            "premise matches but conclusion does not"});
        }
        rep.merge(green_one_coverage(g, view));
    }
    return rep;
}

RelPattern dualize_pattern(const RelPattern& p) {
    RelPattern d = p;
    if (p.dual_of.empty()) {
        d.id = p.id + "*";
        d.dual_of = p.id;
    } else {
        d.id = p.dual_of;
        d.dual_of.clear();
    }
    for (auto* edges : {&d.premise, &d.conclusion})
        for (PatternEdge& e : *edges) {
            std::swap(e.src, e.dst);
            e.label_halves = 2 - e.label_halves;
        }
    return d;
}

namespace {

std::vector<RelPattern> build_catalog() {
    std::vector<RelPattern> cat;
    const int R = kRed, G = kGreen;

    // Degree-4 relation, forward form: a green 1 edge with a red 1 edge and
    // a green 0 continuation forces a raising square and its continuation.
    RelPattern rel4a;
    rel4a.id = "rel4-a";
    rel4a.premise_vertices = 4;
    rel4a.total_vertices = 8;
    rel4a.premise = {{0, 1, G, 2}, {0, 2, R, 2}, {2, 3, G, 0}};
    rel4a.conclusion = {{3, 4, G, 2}, {1, 5, R, 0}, {5, 6, R, 2}, {6, 7, G, 0}, {4, 7, R, 0}};
    cat.push_back(rel4a);

    // Degree-4 relation, half-edge form: extends backwards past the half edge.
    RelPattern rel4b;
    rel4b.id = "rel4-b";
    rel4b.premise_vertices = 4;
    rel4b.total_vertices = 8;
    rel4b.premise = {{0, 1, G, 2}, {1, 2, R, 0}, {3, 2, G, 1}};
    rel4b.conclusion = {{4, 5, G, 1}, {5, 6, R, 0}, {6, 3, R, 2}, {4, 7, R, 2}, {7, 0, G, 0}};
    cat.push_back(rel4b);

    // Degree-4 relation, long-string form.
    RelPattern rel4c;
    rel4c.id = "rel4-c";
    rel4c.premise_vertices = 6;
    rel4c.total_vertices = 10;
    rel4c.premise = {{0, 1, G, 2}, {1, 2, R, 0}, {2, 3, R, 0}, {0, 4, R, 2}, {4, 5, G, 1}};
    rel4c.conclusion = {{6, 7, R, 2}, {7, 2, G, 1}, {7, 8, R, 2}, {8, 9, G, 0}, {5, 9, R, 0}};
    cat.push_back(rel4c);

    // Verma relation of degree 7: two disjoint routes between common endpoints.
    RelPattern verma;
    verma.id = "verma7";
    verma.premise_vertices = 6;
    verma.total_vertices = 14;
    verma.premise = {{0, 1, G, 2}, {1, 2, R, 0}, {2, 3, R, 2}, {0, 4, R, 2}, {4, 5, G, 1}};
    verma.conclusion = {{3, 6, G, 0},  {6, 7, R, 2},   {7, 8, G, 1},   {8, 13, R, 0},
                        {5, 9, R, 0},  {9, 10, G, 2},  {10, 11, R, 0}, {11, 12, R, 2},
                        {12, 13, G, 0}};
    cat.push_back(verma);

    const size_t base = cat.size();
    for (size_t i = 0; i < base; ++i) cat.push_back(dualize_pattern(cat[i]));

    // Degree-5 relation (advisory: it follows from the degree-4 forms).
    RelPattern rel5;
    rel5.id = "rel5";
    rel5.advisory = true;
    rel5.premise_vertices = 6;
    rel5.total_vertices = 10;
    rel5.premise = rel4c.premise;
    rel5.conclusion = {{3, 6, R, 2}, {6, 9, G, 1}, {5, 7, R, 0}, {7, 8, G, 2}, {8, 9, R, 0}};
    cat.push_back(rel5);
    cat.push_back(dualize_pattern(rel5));

    // Chain premises that force the full Verma diagram (advisory cross-checks).
    RelPattern low;
    low.id = "verma7-chain-low";
    low.advisory = true;
    low.premise_vertices = 7;
    low.total_vertices = 14;
    low.premise = {{0, 1, R, 2}, {1, 2, G, 1}, {2, 3, R, 0},
                   {3, 4, G, 2}, {4, 5, R, 0}, {5, 6, R, 2}};
    low.conclusion = {{6, 7, G, 0},  {0, 8, G, 2},  {8, 9, R, 0},  {9, 10, R, 2},
                      {10, 11, G, 0}, {11, 12, R, 2}, {12, 13, G, 1}, {13, 7, R, 0}};
    cat.push_back(low);

    RelPattern high;
    high.id = "verma7-chain-high";
    high.advisory = true;
    high.premise_vertices = 7;
    high.total_vertices = 14;
    high.premise = {{0, 1, R, 0}, {1, 2, R, 2}, {2, 3, G, 0},
                    {3, 4, R, 2}, {4, 5, G, 1}, {5, 6, R, 0}};
    high.conclusion = {{7, 0, G, 2},  {7, 8, R, 2},  {8, 9, G, 1},  {9, 10, R, 0},
                       {10, 11, G, 2}, {11, 12, R, 0}, {12, 13, R, 2}, {13, 6, G, 0}};
    cat.push_back(high);

    return cat;
}

// Reorder edges so that after the first one, every edge touches a vertex
// bound by an earlier edge; the matcher then never scans the whole graph.
std::vector<PatternEdge> connected_order(const std::vector<PatternEdge>& edges) {
    std::vector<PatternEdge> out;
    std::vector<char> used(edges.size(), 0);
    std::set<int> bound;
    for (size_t step = 0; step < edges.size(); ++step) {
        size_t pick = edges.size();
        for (size_t i = 0; i < edges.size(); ++i) {
            if (used[i]) continue;
            if (out.empty() || bound.count(edges[i].src) || bound.count(edges[i].dst)) {
                pick = i;
                break;
            }
        }
        if (pick == edges.size()) pick = std::find(used.begin(), used.end(), 0) - used.begin();
        used[pick] = 1;
        bound.insert(edges[pick].src);
        bound.insert(edges[pick].dst);
        out.push_back(edges[pick]);
    }
    return out;
}

struct Matcher {
    const ColoredGraph& g;
    const GraphView& view;
    std::vector<int> map;
    std::vector<char> used;

    Matcher(const ColoredGraph& gg, const GraphView& vv, int nverts)
        : g(gg), view(vv), map(nverts, -1), used(gg.n, 0) {}

    bool bind(int pv, int gv) {
        if (map[pv] >= 0) return map[pv] == gv;
        if (used[gv]) return false;
        map[pv] = gv;
        used[gv] = 1;
        return true;
    }
    void unbind(int pv, bool was_new) {
        if (was_new) {
            used[map[pv]] = 0;
            map[pv] = -1;
        }
    }

    template <typename Sink>
    void search(const std::vector<PatternEdge>& edges, size_t i, Sink&& sink) {
        if (i == edges.size()) {
            sink();
            return;
        }
        const PatternEdge& pe = edges[i];
        auto try_edge = [&](const GEdge& e) {
            if (e.color != pe.color || e.label_halves != pe.label_halves) return;
            bool new_src = map[pe.src] < 0, new_dst = map[pe.dst] < 0;
            if (!bind(pe.src, e.src)) return;
            if (!bind(pe.dst, e.dst)) {
                unbind(pe.src, new_src);
                return;
            }
            search(edges, i + 1, sink);
            unbind(pe.dst, new_dst);
            unbind(pe.src, new_src);
        };
        if (map[pe.src] >= 0) {
            for (int ei : view.out_edges(map[pe.src], pe.color)) try_edge(g.edges[ei]);
        } else if (map[pe.dst] >= 0) {
            for (int ei : view.in_edges(map[pe.dst], pe.color)) try_edge(g.edges[ei]);
        } else {
            for (const GEdge& e : g.edges) try_edge(e);
        }
    }
};

}  // namespace

const std::vector<RelPattern>& pattern_catalog() {
    static const std::vector<RelPattern> cat = build_catalog();
    return cat;
}

std::vector<Match> match_pattern(const ColoredGraph& g, const RelPattern& p) {
    GraphView view(g);
    std::vector<Match> out;
    auto premise = connected_order(p.premise);
    Matcher m(g, view, p.total_vertices);
    m.search(premise, 0, [&]() {
        Match match;
        match.map.assign(m.map.begin(), m.map.begin() + p.premise_vertices);
        bool ok = false;
        // Extension vertices stay bound between premise matches only within
        // this inner search; restore afterwards.
        Matcher ext = m;
        ext.search(p.conclusion, 0, [&]() { ok = true; });
        match.conclusion_ok = ok;
        out.push_back(std::move(match));
    });
    return out;
}

}  // namespace b2c
