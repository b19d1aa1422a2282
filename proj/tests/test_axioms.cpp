#include <doctest.h>

#include <set>

#include "axioms.hpp"
#include "colored_graph.hpp"
#include "crystal.hpp"

using namespace b2c;

namespace {

ColoredGraph labeled_interval(int h, int a) {
    CrystalGraph g = CrystalGraph::generate(Bounds::interval(h, a));
    g.decorate();
    return to_colored(g);
}

std::vector<ColoredGraph> single_edit_mutants(const ColoredGraph& g) {
    std::vector<ColoredGraph> out;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const GEdge& e = g.edges[i];
        // Label flips within the legal alphabet of the color.
        for (int label : {0, 1, 2}) {
            if (label == e.label_halves) continue;
            if (e.color == kRed && label == 1) continue;
            ColoredGraph m = g;
            m.edges[i].label_halves = label;
            out.push_back(std::move(m));
        }
        // Deletion.
        ColoredGraph d = g;
        d.edges.erase(d.edges.begin() + static_cast<long>(i));
        out.push_back(std::move(d));
        // Redirection (reversal).
        ColoredGraph r = g;
        std::swap(r.edges[i].src, r.edges[i].dst);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

TEST_CASE("generated intervals satisfy every axiom and derived check") {
    for (int h = 0; h <= 4; ++h)
        for (int a = 0; a <= 8; a += 2) {
            ColoredGraph g = labeled_interval(h, a);
            AxiomReport rep = check_all(g, true);
            for (const Violation& v : rep.violations)
                MESSAGE(v.axiom, " at ", v.location, ": ", v.message, " [H=", h, " A=", a, "]");
            CHECK(rep.passed());
            // Valid crystals may still carry the coverage diagnostic (edges
            // near the boundary sit in no square and match no premise), but
            // nothing else.
            for (const Violation& w : rep.warnings) CHECK(w.axiom == "green-one-coverage");
        }
}

TEST_CASE("empty graph passes vacuously") {
    ColoredGraph g;
    CHECK(check_all(g, true).passed());
}

TEST_CASE("single mutations are always detected") {
    for (auto [h, a] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
        ColoredGraph g = labeled_interval(h, a);
        for (const ColoredGraph& m : single_edit_mutants(g))
            CHECK_FALSE(check_all(m, true).passed());
    }
}

TEST_CASE("specific mutations hit the expected axioms") {
    // Forged half label on the fundamental crystal.
    ColoredGraph g10 = labeled_interval(1, 0);
    bool forged = false;
    ColoredGraph m = g10;
    for (GEdge& e : m.edges)
        if (e.color == kGreen && e.label_halves == 1 && !forged) {
            e.label_halves = 2;
            forged = true;
        }
    REQUIRE(forged);
    AxiomReport rep = check_all(m, true);
    bool hit = false;
    for (const Violation& v : rep.violations)
        if (v.axiom == "K3" || v.axiom == "label-consistency") hit = true;
    CHECK(hit);

    // Deleting a mid-string red edge breaks the K1 identity.
    CrystalGraph c02 = CrystalGraph::generate(Bounds::interval(0, 2));
    c02.decorate();
    ColoredGraph g02 = to_colored(c02);
    int v_mid = c02.find_vertex(Config{2, 1, 0, 0, 0, 0, 0});
    int v_top = c02.find_vertex(Config{2, 2, 0, 0, 0, 0, 0});
    ColoredGraph d = g02;
    std::erase_if(d.edges, [&](const GEdge& e) { return e.src == v_mid && e.dst == v_top; });
    REQUIRE(d.edges.size() + 1 == g02.edges.size());
    AxiomReport drep = check_axiom(d, Axiom::K1);
    CHECK_FALSE(drep.passed());
}

TEST_CASE("precondition errors are not violations") {
    CrystalGraph c = CrystalGraph::generate(Bounds::interval(1, 2));
    ColoredGraph unlabeled = to_colored(c, false);
    CHECK(check_axiom(unlabeled, Axiom::K0).passed());
    CHECK(check_axiom(unlabeled, Axiom::K1).passed());
    CHECK(check_axiom(unlabeled, Axiom::K2).passed());
    CHECK_THROWS_AS(check_axiom(unlabeled, Axiom::K3), precondition_error);
    CHECK_THROWS_AS(check_derived(unlabeled, DerivedCheck::DoubleHalf), precondition_error);
}

TEST_CASE("dualization is involutive and matches hand duals") {
    for (const RelPattern& p : pattern_catalog()) CHECK(dualize_pattern(dualize_pattern(p)) == p);

    // The two closing squares of the mixed-label axiom are dual to each other.
    RelPattern raise;
    raise.id = "sq-raise";
    raise.premise_vertices = 3;
    raise.total_vertices = 4;
    raise.premise = {{0, 1, kRed, 0}, {1, 2, kGreen, 2}};
    raise.conclusion = {{0, 3, kGreen, 2}, {3, 2, kRed, 0}};
    RelPattern lower = dualize_pattern(raise);
    CHECK(lower.premise == std::vector<PatternEdge>{{1, 0, kRed, 2}, {2, 1, kGreen, 0}});
    CHECK(lower.conclusion == std::vector<PatternEdge>{{3, 0, kGreen, 0}, {2, 3, kRed, 2}});
}

TEST_CASE("pattern matching basics") {
    ColoredGraph g10 = labeled_interval(1, 0);
    RelPattern single;
    single.id = "one-red-one";
    single.premise_vertices = 2;
    single.total_vertices = 2;
    single.premise = {{0, 1, kRed, 2}};
    CHECK(match_pattern(g10, single).size() == 1);

    RelPattern bogus = single;
    bogus.premise[0].label_halves = 7;
    CHECK(match_pattern(g10, bogus).empty());
}

TEST_CASE("degree-7 premise matches extend in generated graphs") {
    ColoredGraph g22 = labeled_interval(2, 2);
    const RelPattern* verma = nullptr;
    for (const RelPattern& p : pattern_catalog())
        if (p.id == "verma7") verma = &p;
    REQUIRE(verma != nullptr);
    auto matches = match_pattern(g22, *verma);
    CHECK(!matches.empty());
    for (const Match& m : matches) CHECK(m.conclusion_ok);
}

TEST_CASE("every base premise matches somewhere in the sweep") {
    std::set<std::string> matched;
    for (int h = 0; h <= 4; ++h)
        for (int a = 0; a <= 8; a += 2) {
            ColoredGraph g = labeled_interval(h, a);
            for (const RelPattern& p : pattern_catalog())
                if (!match_pattern(g, p).empty()) matched.insert(p.id);
        }
    for (const RelPattern& p : pattern_catalog())
        CHECK_MESSAGE(matched.count(p.id) == 1, "pattern never matched: ", p.id);
}

TEST_CASE("hand-built derived-check counterexamples") {
    // A green string with two half edges.
    ColoredGraph two_halves;
    two_halves.n = 3;
    two_halves.edges = {{0, 1, kGreen, 1}, {1, 2, kGreen, 1}};
    CHECK_FALSE(check_derived(two_halves, DerivedCheck::HalfEdgeCorollary).passed());

    // A half edge with the wrong red context.
    ColoredGraph bad_context;
    bad_context.n = 4;
    bad_context.edges = {{0, 1, kGreen, 1}, {2, 0, kRed, 0}, {1, 3, kRed, 2}};
    AxiomReport rep = check_derived(bad_context, DerivedCheck::HalfEdgeContext);
    CHECK(rep.violations.size() == 2);

    // The fundamental crystal passes double-half with one in and one out.
    CHECK(check_derived(labeled_interval(1, 0), DerivedCheck::DoubleHalf).passed());
}
