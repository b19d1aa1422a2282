#include "sky.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace b2c {

SkyGraph contract(const ColoredGraph& g) {
    GraphView view(g);
    if (!view.strings_ok(kRed) || !view.strings_ok(kGreen))
        throw structure_error("contraction requires well-formed strings");
    for (const GEdge& e : g.edges)
        if (e.label_halves < 0) throw structure_error("contraction requires edge labels");

    auto strings = view.strings(kRed);
    SkyGraph sky;
    std::vector<int> string_of(g.n, -1);
    for (int s = 0; s < static_cast<int>(strings.size()); ++s) {
        const auto& path = strings[s];
        int zeros = 0;
        bool seen_one = false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int label = g.edges[view.succ_edge(path[i], kRed)].label_halves;
            if (label == 0) {
                if (seen_one)
                    throw structure_error("non-monotone red labels on string at " +
                                          g.name(path[0]));
                ++zeros;
            } else {
                seen_one = true;
            }
        }
        sky.vertices.push_back(SkyVertex{zeros, static_cast<int>(path.size()) - 1 - zeros});
        for (int v : path) string_of[v] = s;
    }

    std::map<std::pair<int, int>, int> label_of;  // (src string, dst string) -> label
    for (const GEdge& e : g.edges) {
        if (e.color != kGreen) continue;
        std::pair<int, int> key{string_of[e.src], string_of[e.dst]};
        auto [it, fresh] = label_of.emplace(key, e.label_halves);
        if (!fresh && it->second != e.label_halves)
            throw structure_error("conflicting witness labels between strings " +
                                  std::to_string(key.first) + " and " +
                                  std::to_string(key.second));
    }
    for (const auto& [key, label] : label_of) {
        int color = kGreen;
        if (label != 1) {
            int dx = sky.vertices[key.second].x - sky.vertices[key.first].x;
            if (dx < 0) dx = -dx;
            if (dx == 1)
                color = kBlue;
            else if (dx != 0 && dx != 2)
                throw structure_error("level jump " + std::to_string(dx) +
                                      " on a whole-labeled edge");
        }
        sky.edges.push_back(GEdge{key.first, key.second, color, label});
    }
    return sky;
}

AxiomReport check_sky(const SkyGraph& s) {
    AxiomReport rep;
    int n = static_cast<int>(s.vertices.size());
    std::vector<std::vector<const GEdge*>> out(n), in(n);
    std::set<std::pair<int, int>> seen_pairs;
    auto vname = [](int v) { return "s" + std::to_string(v); };
    for (const GEdge& e : s.edges) {
        out[e.src].push_back(&e);
        in[e.dst].push_back(&e);
        if (!seen_pairs.insert({e.src, e.dst}).second)
            rep.violations.push_back({"lemma1", vname(e.src) + "->" + vname(e.dst),
                                      "parallel edges between contracted strings"});
    }
    auto distinct_labels = [](const std::vector<const GEdge*>& edges) {
        std::set<int> labels;
        for (const GEdge* e : edges)
            if (!labels.insert(e->label_halves).second) return false;
        return true;
    };
    for (int v = 0; v < n; ++v) {
        if (out[v].size() > 3)
            rep.violations.push_back({"lemma1", vname(v), "more than three outgoing edges"});
        if (in[v].size() > 3)
            rep.violations.push_back({"lemma1", vname(v), "more than three ingoing edges"});
        if (!distinct_labels(out[v]))
            rep.violations.push_back({"lemma1", vname(v), "repeated outgoing label"});
        if (!distinct_labels(in[v]))
            rep.violations.push_back({"lemma1", vname(v), "repeated ingoing label"});
    }
    // Forbidden local shapes around half and blue edges.
    auto is_half = [](const GEdge* e) { return e->color == kGreen && e->label_halves == 1; };
    auto is_blue = [](const GEdge* e, int label) {
        return e->color == kBlue && e->label_halves == label;
    };
    for (const GEdge& e : s.edges) {
        if (is_half(&e))
            for (const GEdge* f : out[e.dst])
                if (is_blue(f, 0))
                    rep.violations.push_back(
                        {"sky-forbidden", vname(e.dst), "half edge followed by blue 0"});
        if (is_blue(&e, 2))
            for (const GEdge* f : out[e.dst])
                if (is_half(f))
                    rep.violations.push_back(
                        {"sky-forbidden", vname(e.dst), "blue 1 followed by half edge"});
    }
    for (int v = 0; v < n; ++v) {
        bool half_out = std::any_of(out[v].begin(), out[v].end(), is_half);
        bool blue0_out = std::any_of(out[v].begin(), out[v].end(),
                                     [&](const GEdge* e) { return is_blue(e, 0); });
        if (half_out && blue0_out)
            rep.violations.push_back(
                {"sky-forbidden", vname(v), "half and blue 0 leave the same vertex"});
        bool half_in = std::any_of(in[v].begin(), in[v].end(), is_half);
        bool blue2_in = std::any_of(in[v].begin(), in[v].end(),
                                    [&](const GEdge* e) { return is_blue(e, 2); });
        if (half_in && blue2_in)
            rep.violations.push_back(
                {"sky-forbidden", vname(v), "blue 1 and half enter the same vertex"});
    }
    return rep;
}

SkyGraph sail_upper(int h) {
    SkyGraph s;
    std::map<std::pair<int, int>, int> id;
    for (int k = 0; 2 * k <= h; ++k)
        for (int l = 0; l <= h - 2 * k; ++l) {
            id[{k, l}] = static_cast<int>(s.vertices.size());
            s.vertices.push_back(SkyVertex{l, h - 2 * k - l});
        }
    for (int k = 0; 2 * k <= h; ++k)
        for (int l = 0; l <= h - 2 * k; ++l) {
            if (l + 1 <= h - 2 * k)
                s.edges.push_back(GEdge{id[{k, l}], id[{k, l + 1}], kGreen, 1});
            if (2 * (k + 1) <= h && l <= h - 2 * (k + 1)) {
                s.edges.push_back(GEdge{id[{k, l}], id[{k + 1, l}], kGreen, 0});
                s.edges.push_back(GEdge{id[{k + 1, l}], id[{k, l + 2}], kGreen, 2});
            }
        }
    return s;
}

std::vector<int> upper_diagonal(int h) {
    // Etage 0 occupies the first h+1 ids by construction.
    std::vector<int> d(h + 1);
    for (int l = 0; l <= h; ++l) d[l] = l;
    return d;
}

SkyGraph sail_lower(int a) {
    SkyGraph s;
    std::map<std::pair<int, int>, int> id;
    for (int k = 0; k <= a; ++k)
        for (int j = 0; j <= a - k; ++j) {
            id[{k, j}] = static_cast<int>(s.vertices.size());
            s.vertices.push_back(SkyVertex{k, k});
        }
    for (int k = 0; k < a; ++k)
        for (int j = 0; j <= a - k - 1; ++j) {
            s.edges.push_back(GEdge{id[{k, j}], id[{k + 1, j}], kBlue, 2});
            s.edges.push_back(GEdge{id[{k + 1, j}], id[{k, j + 1}], kBlue, 0});
        }
    return s;
}

std::vector<int> lower_diagonal(int a) {
    // Row k=0 occupies the first a+1 ids by construction.
    std::vector<int> d(a + 1);
    for (int j = 0; j <= a; ++j) d[j] = j;
    return d;
}

SkyGraph glue(const SkyGraph& left, const std::vector<int>& s_set, const SkyGraph& right,
              const std::vector<int>& t_set) {
    const int nl = static_cast<int>(left.vertices.size());
    const int nr = static_cast<int>(right.vertices.size());
    const int ns = static_cast<int>(s_set.size());
    const int nt = static_cast<int>(t_set.size());
    if (ns == 0 || nt == 0) throw structure_error("empty distinguished set");
    for (int j = 1; j < nt; ++j)
        if (!(right.vertices[t_set[j]] == right.vertices[t_set[0]]))
            throw structure_error("right distinguished labels disagree");
    const SkyVertex t0 = right.vertices[t_set[0]];

    SkyGraph out;
    // Left copy j, vertex v -> j*nl + v.
    std::vector<int> t_index(nr, -1);
    for (int j = 0; j < nt; ++j) t_index[t_set[j]] = j;
    std::vector<int> s_index(nl, -1);
    for (int i = 0; i < ns; ++i) s_index[s_set[i]] = i;

    for (int j = 0; j < nt; ++j)
        for (int v = 0; v < nl; ++v) out.vertices.push_back(left.vertices[v]);

    // Right copy i: distinguished vertices reuse left ids, others get new ones.
    std::vector<std::vector<int>> right_id(ns, std::vector<int>(nr, -1));
    for (int i = 0; i < ns; ++i) {
        const SkyVertex shift{left.vertices[s_set[i]].x - t0.x, left.vertices[s_set[i]].y - t0.y};
        for (int v = 0; v < nr; ++v) {
            SkyVertex lab{right.vertices[v].x + shift.x, right.vertices[v].y + shift.y};
            if (t_index[v] >= 0) {
                int id = t_index[v] * nl + s_set[i];
                right_id[i][v] = id;
                if (!(out.vertices[id] == lab))
                    throw structure_error("labels disagree at an identified vertex");
            } else {
                right_id[i][v] = static_cast<int>(out.vertices.size());
                out.vertices.push_back(lab);
            }
        }
    }

    for (int j = 0; j < nt; ++j)
        for (const GEdge& e : left.edges)
            out.edges.push_back(GEdge{j * nl + e.src, j * nl + e.dst, e.color, e.label_halves});
    for (int i = 0; i < ns; ++i)
        for (const GEdge& e : right.edges)
            out.edges.push_back(GEdge{right_id[i][e.src], right_id[i][e.dst], e.color,
                                      e.label_halves});
    return out;
}

SkyGraph reference_sky(int h, int a_pairs) {
    return glue(sail_upper(h), upper_diagonal(h), sail_lower(a_pairs), lower_diagonal(a_pairs));
}

IsoResult sky_iso(const SkyGraph& a, const SkyGraph& b) {
    IsoResult res;
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
        res.reason = "size mismatch";
        return res;
    }
    const int n = static_cast<int>(a.vertices.size());
    auto source_of = [](const SkyGraph& s, int& src) {
        std::vector<int> indeg(s.vertices.size(), 0);
        for (const GEdge& e : s.edges) ++indeg[e.dst];
        src = -1;
        for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v)
            if (indeg[v] == 0) {
                if (src >= 0) return false;
                src = v;
            }
        return src >= 0;
    };
    int sa = -1, sb = -1;
    if (!source_of(a, sa) || !source_of(b, sb)) {
        res.reason = "source is not unique";
        return res;
    }

    auto keyed_out = [](const SkyGraph& s, int v, std::map<std::pair<int, int>, int>& out) {
        for (const GEdge& e : s.edges) {
            if (e.src != v) continue;
            if (!out.emplace(std::pair{e.color, e.label_halves}, e.dst).second) return false;
        }
        return true;
    };

    std::vector<int> map(n, -1), rmap(n, -1);
    map[sa] = sb;
    rmap[sb] = sa;
    std::deque<int> queue{sa};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        std::map<std::pair<int, int>, int> oa, ob;
        if (!keyed_out(a, v, oa) || !keyed_out(b, map[v], ob)) {
            res.reason = "repeated (color,label) among outgoing edges";
            return res;
        }
        if (oa.size() != ob.size()) {
            res.reason = "out-degree mismatch at s" + std::to_string(v);
            return res;
        }
        for (const auto& [key, ta] : oa) {
            auto it = ob.find(key);
            if (it == ob.end()) {
                res.reason = "out-edge key mismatch at s" + std::to_string(v);
                return res;
            }
            int tb = it->second;
            if (map[ta] < 0 && rmap[tb] < 0) {
                map[ta] = tb;
                rmap[tb] = ta;
                queue.push_back(ta);
            } else if (map[ta] != tb) {
                res.reason = "traversal maps a vertex inconsistently";
                return res;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (map[v] < 0) {
            res.reason = "not reachable from the source";
            return res;
        }
    // Full structural check of the unique candidate.
    std::multiset<std::array<int, 4>> ea, eb;
    for (const GEdge& e : a.edges) ea.insert({map[e.src], map[e.dst], e.color, e.label_halves});
    for (const GEdge& e : b.edges) eb.insert({e.src, e.dst, e.color, e.label_halves});
    if (ea != eb) {
        res.reason = "edge sets differ under the candidate map";
        return res;
    }
    for (int v = 0; v < n; ++v)
        if (!(a.vertices[v] == b.vertices[map[v]])) {
            res.reason = "vertex labels differ under the candidate map";
            return res;
        }
    res.isomorphic = true;
    res.map = std::move(map);
    return res;
}

long long expansion_count(const SkyGraph& s) {
    long long total = 0;
    for (const SkyVertex& v : s.vertices) total += v.x + v.y + 1;
    return total;
}

}  // namespace b2c
