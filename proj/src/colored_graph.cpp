#include "colored_graph.hpp"

#include <stdexcept>

namespace b2c {

ColoredGraph to_colored(const CrystalGraph& g, bool with_labels) {
    ColoredGraph out;
    out.n = g.size();
    for (int v = 0; v < g.size(); ++v) {
        for (int color : {kRed, kGreen}) {
            int u = g.succ(v, color);
            if (u < 0) continue;
            int label = with_labels ? g.label_halves(v, color) : -1;
            out.edges.push_back(GEdge{v, u, color, label});
        }
    }
    return out;
}

int GraphView::slot(int color) {
    if (color < 1 || color > 3) throw std::invalid_argument("bad color");
    return color - 1;
}

GraphView::GraphView(const ColoredGraph& g) : g_(&g) {
    for (int s = 0; s < 3; ++s) {
        out_[s].assign(g.n, {});
        in_[s].assign(g.n, {});
        t_[s].assign(g.n, 0);
        h_[s].assign(g.n, 0);
    }
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const GEdge& e = g.edges[i];
        if (e.src < 0 || e.src >= g.n || e.dst < 0 || e.dst >= g.n)
            throw std::out_of_range("edge endpoint outside vertex range");
        out_[slot(e.color)][e.src].push_back(i);
        in_[slot(e.color)][e.dst].push_back(i);
    }
    for (int s = 0; s < 3; ++s) {
        int color = s + 1;
        bool ok = true;
        for (int v = 0; v < g.n && ok; ++v)
            if (out_[s][v].size() > 1 || in_[s][v].size() > 1) ok = false;
        if (ok) {
            // Walk each path from its start; a vertex never reached from a
            // start lies on a cycle.
            std::vector<int> seen(g.n, 0);
            for (int v = 0; v < g.n; ++v) {
                if (pred(v, color) >= 0) continue;
                int len = 0;
                std::vector<int> path;
                for (int u = v; u >= 0; u = succ(u, color)) {
                    path.push_back(u);
                    seen[u] = 1;
                    if (++len > g.n) { ok = false; break; }
                }
                if (!ok) break;
                for (int i = 0; i < static_cast<int>(path.size()); ++i) {
                    t_[s][path[i]] = i;
                    h_[s][path[i]] = static_cast<int>(path.size()) - 1 - i;
                }
            }
            for (int v = 0; v < g.n; ++v)
                if (!seen[v] && (succ(v, color) >= 0 || pred(v, color) >= 0)) ok = false;
            for (int v = 0; v < g.n; ++v)
                if (!seen[v]) { t_[s][v] = 0; h_[s][v] = 0; }
        }
        strings_ok_[s] = ok;
    }
}

int GraphView::succ_edge(int v, int color) const {
    const auto& lst = out_[slot(color)][v];
    if (lst.empty()) return -1;
    if (lst.size() > 1) return -2;
    return lst[0];
}

int GraphView::pred_edge(int v, int color) const {
    const auto& lst = in_[slot(color)][v];
    if (lst.empty()) return -1;
    if (lst.size() > 1) return -2;
    return lst[0];
}

int GraphView::succ(int v, int color) const {
    int e = succ_edge(v, color);
    return e < 0 ? e : g_->edges[e].dst;
}

int GraphView::pred(int v, int color) const {
    int e = pred_edge(v, color);
    return e < 0 ? e : g_->edges[e].src;
}

std::vector<std::vector<int>> GraphView::strings(int color) const {
    if (!strings_ok_[slot(color)]) throw std::logic_error("malformed strings");
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g_->n; ++v) {
        if (pred(v, color) >= 0) continue;
        std::vector<int> path;
        for (int u = v; u >= 0; u = succ(u, color)) path.push_back(u);
        out.push_back(std::move(path));
    }
    return out;
}

}  // namespace b2c
