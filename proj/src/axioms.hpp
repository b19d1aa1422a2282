#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "colored_graph.hpp"

namespace b2c {

// Raised when a check needs data the input lacks (typically edge labels);
// distinct from a reported violation.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string axiom;
    std::string location;
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;
    bool passed() const { return violations.empty(); }
    void merge(AxiomReport other);
};

enum class Axiom { K0, K1, K2, K3, K4, K5 };
enum class DerivedCheck {
    HalfEdgeCorollary,  // at most one half-labeled edge per green string
    HalfEdgeContext,    // red neighbours of a half edge carry labels 1 / 0
    StarSquares,        // in/out red-green pairs close into squares away from critical
    DoubleHalf,         // at most two half incidences per red string, at fixed offsets
    LabelConsistency    // stored labels equal the string-stat formulas
};

const char* axiom_name(Axiom a);
const char* derived_name(DerivedCheck c);
bool parse_check_id(const std::string& id, Axiom& axiom, DerivedCheck& derived, bool& is_axiom);

AxiomReport check_axiom(const ColoredGraph& g, Axiom id);
AxiomReport check_derived(const ColoredGraph& g, DerivedCheck id);
// All axioms, optionally all derived checks, plus advisory warnings.
AxiomReport check_all(const ColoredGraph& g, bool include_derived);

// A local implication: whenever the premise embeds, the conclusion must
// extend the embedding. Vertices 0..premise_vertices-1 belong to the
// premise; conclusion edges may reference the extension vertices as well.
struct PatternEdge {
    int src = 0;
    int dst = 0;
    int color = kRed;
    int label_halves = 0;
    friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

struct RelPattern {
    std::string id;
    int premise_vertices = 0;
    int total_vertices = 0;
    std::vector<PatternEdge> premise;
    std::vector<PatternEdge> conclusion;
    std::string dual_of;    // id of the pattern this dualizes, empty for base
    bool advisory = false;  // reported as warning, not violation
    friend bool operator==(const RelPattern&, const RelPattern&) = default;
};

// Reverses every edge and maps each label a to 1-a (in display units);
// involutive.
RelPattern dualize_pattern(const RelPattern& p);

// Full catalog: the four local relations and their duals (checked by K5),
// then the advisory degree-5 relations and the two chain premises that
// also force the degree-7 relation.
const std::vector<RelPattern>& pattern_catalog();

struct Match {
    std::vector<int> map;  // pattern vertex -> graph vertex (premise part)
    bool conclusion_ok = false;
};

// All color- and label-preserving injective embeddings of the premise;
// for each, whether the conclusion extends it.
std::vector<Match> match_pattern(const ColoredGraph& g, const RelPattern& p);

}  // namespace b2c
