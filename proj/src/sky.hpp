#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "colored_graph.hpp"

namespace b2c {

// Raised when contraction or gluing meets structurally invalid input
// (conflicting witness labels, impossible level jumps, label mismatches).
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SkyVertex {
    int x = 0;
    int y = 0;
    friend bool operator==(const SkyVertex&, const SkyVertex&) = default;
};

// Contracted graph: one vertex per red string, green/blue edges.
struct SkyGraph {
    std::vector<SkyVertex> vertices;
    std::vector<GEdge> edges;  // colors kGreen or kBlue
    friend bool operator==(const SkyGraph&, const SkyGraph&) = default;
};

// Contract each red string of a labeled graph to a single vertex carrying
// the (X,Y) of its critical vertex; green edges project onto string pairs,
// label-0/1 edges recolor blue exactly when the X levels differ by 1.
SkyGraph contract(const ColoredGraph& g);

// Degree/label invariants plus the forbidden local shapes around half and
// blue edges.
AxiomReport check_sky(const SkyGraph& s);

// The upper sail: etage k holds positions l = 0..H-2k labeled (l, H-2k-l);
// half edges run along an etage, 0 edges climb, 1 edges descend two steps.
SkyGraph sail_upper(int h);
// Indices of the etage-0 vertices, by position.
std::vector<int> upper_diagonal(int h);

// The lower sail: a triangular blue grid, all labels (k,k) at height k.
SkyGraph sail_lower(int a);
// Indices of the A+1 vertices labeled (0,0).
std::vector<int> lower_diagonal(int a);

// Cross gluing: |T| copies of the left graph and |S| copies of the right,
// with vertex S[i] of left copy j identified with vertex T[j] of right
// copy i. Right copies are relabeled by the offset of their attachment
// point; all T labels must agree for the identification to be consistent.
SkyGraph glue(const SkyGraph& left, const std::vector<int>& s_set, const SkyGraph& right,
              const std::vector<int>& t_set);

// glue of the two sails along their diagonals; a_pairs is half the interval
// parameter A.
SkyGraph reference_sky(int h, int a_pairs);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> map;  // left vertex -> right vertex when isomorphic
    std::string reason;
};

// Deterministic traversal from the unique sources, pairing out-edges by
// (color, label); sound because out-labels are pairwise distinct.
IsoResult sky_iso(const SkyGraph& a, const SkyGraph& b);

// Sum over vertices of (X+Y+1); equals the size of the expanded crystal.
long long expansion_count(const SkyGraph& s);

}  // namespace b2c
