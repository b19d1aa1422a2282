#pragma once

#include <string>
#include <vector>

#include "crystal.hpp"

namespace b2c {

// Edge colors; crystal graphs use red/green, sky graphs green/blue.
inline constexpr int kRed = 1;
inline constexpr int kGreen = 2;
inline constexpr int kBlue = 3;

struct GEdge {
    int src = 0;
    int dst = 0;
    int color = kRed;
    int label_halves = -1;  // -1 when the edge carries no label
    friend bool operator==(const GEdge&, const GEdge&) = default;
};

// A plain edge-colored labeled digraph, the verifier's input. No invariants
// are imposed at construction; finding violations is the verifier's job.
struct ColoredGraph {
    int n = 0;
    std::vector<GEdge> edges;
    std::vector<std::string> names;  // optional display names, size n or empty

    std::string name(int v) const {
        if (v >= 0 && v < static_cast<int>(names.size()) && !names[v].empty()) return names[v];
        return "v" + std::to_string(v);
    }
    std::string edge_name(const GEdge& e) const { return name(e.src) + "->" + name(e.dst); }
};

ColoredGraph to_colored(const CrystalGraph& g, bool with_labels = true);

// Per-color adjacency over edge indices, shared by the verifier and the
// contraction. succ/pred return the unique neighbouring edge index, -1 when
// absent, -2 when the vertex has several (a K0 violation).
class GraphView {
public:
    explicit GraphView(const ColoredGraph& g);

    const ColoredGraph& graph() const { return *g_; }
    const std::vector<int>& out_edges(int v, int color) const { return out_[slot(color)][v]; }
    const std::vector<int>& in_edges(int v, int color) const { return in_[slot(color)][v]; }
    int succ_edge(int v, int color) const;
    int pred_edge(int v, int color) const;
    int succ(int v, int color) const;  // vertex; -1 absent, -2 ambiguous
    int pred(int v, int color) const;

    // True when color-i edges form disjoint simple paths (unique in/out
    // degrees, no cycles); strings and stats are only meaningful then.
    bool strings_ok(int color) const { return strings_ok_[slot(color)]; }
    int t(int v, int color) const { return t_[slot(color)][v]; }
    int h(int v, int color) const { return h_[slot(color)][v]; }

    // Maximal color strings as vertex sequences, ordered by smallest start id.
    std::vector<std::vector<int>> strings(int color) const;

private:
    static int slot(int color);
    const ColoredGraph* g_;
    std::vector<std::vector<int>> out_[3], in_[3];
    bool strings_ok_[3] = {false, false, false};
    std::vector<int> t_[3], h_[3];
};

}  // namespace b2c
