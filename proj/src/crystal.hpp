#pragma once

#include <map>
#include <vector>

#include "config.hpp"

namespace b2c {

struct StringStats {
    int t = 0;  // edges from string start to the vertex
    int h = 0;  // edges from the vertex to string end
    friend bool operator==(const StringStats&, const StringStats&) = default;
};

struct Weight {
    int w1 = 0;
    int w2 = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

// The interval crystal: vertices are admissible configurations reachable
// from zero, edges are the two operators. Vertex ids follow BFS order with
// color 1 explored before color 2, so serialization is reproducible.
class CrystalGraph {
public:
    static CrystalGraph generate(const Bounds& b);

    const Bounds& bounds() const { return bounds_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Config>& vertices() const { return vertices_; }
    const Config& config(int v) const { return vertices_.at(v); }
    int find_vertex(const Config& f) const;  // -1 if absent

    // -1 when the operator is undefined at the vertex.
    int succ(int v, int color) const { return color == 1 ? red_succ_[v] : green_succ_[v]; }
    int pred(int v, int color) const { return color == 1 ? red_pred_[v] : green_pred_[v]; }

    int edge_count() const;

    StringStats string_stats(int v, int color) const;
    Weight weight_of(int v) const;

    void decorate();
    bool decorated() const { return decorated_; }
    // Label of the color edge leaving v, in half units; requires decorate().
    int label_halves(int v, int color) const;

    std::vector<int> fat_vertices() const;

    // Maximal red strings as vertex sequences, ordered by smallest id.
    std::vector<std::vector<int>> red_strings() const;

    struct Critical {
        int vertex = -1;
        int x = 0;
        int y = 0;
    };
    // The vertex on the red string through v where labels switch 0 to 1
    // (string start when every label is 1, string end when every label is 0),
    // together with its (t1, h1). Requires decorate().
    Critical critical_of_red_string(int v) const;

    int source() const;
    int sink() const;

    friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;

private:
    Bounds bounds_;
    std::vector<Config> vertices_;
    std::map<std::array<int, 7>, int> index_;
    std::vector<int> red_succ_, green_succ_, red_pred_, green_pred_;
    std::vector<int> red_label_, green_label_;  // by tail vertex; -1 = no edge
    bool decorated_ = false;
};

// The same vertex set obtained by direct polyhedral enumeration,
// without using the operators. Sorted by as_array().
std::vector<Config> enumerate_interval(const Bounds& b);

// Closed-form dimension of the interval (independent oracle lives in tests).
long long expected_dimension(int h, int a);

struct EmbedReport {
    bool ok = true;
    int product_vertex_count = 0;
    int mapped_vertex_count = 0;
    int mapped_edge_count = 0;
    std::string message;
};

// Checks that the glued product of the two one-parameter intervals embeds
// into B(H,A): every shifted factor vertex is present and every factor edge
// maps to an edge of the big crystal.
EmbedReport embed_product(int h, int a);

}  // namespace b2c
