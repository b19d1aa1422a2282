#include "crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace b2c {

CrystalGraph CrystalGraph::generate(const Bounds& b) {
    if (b.free_mode) throw std::invalid_argument("generate requires interval bounds");
    CrystalGraph g;
    g.bounds_ = b;

    auto add_vertex = [&g](const Config& f) {
        g.vertices_.push_back(f);
        g.index_[f.as_array()] = static_cast<int>(g.vertices_.size()) - 1;
        g.red_succ_.push_back(-1);
        g.green_succ_.push_back(-1);
        g.red_pred_.push_back(-1);
        g.green_pred_.push_back(-1);
        g.red_label_.push_back(-1);
        g.green_label_.push_back(-1);
        return static_cast<int>(g.vertices_.size()) - 1;
    };

    add_vertex(Config{});
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        const Config f = g.vertices_[v];
        for (int color : {1, 2}) {
            auto img = color == 1 ? apply_f1(f, b) : apply_f2(f, b);
            if (!img) continue;
            auto it = g.index_.find(img->as_array());
            int u;
            if (it == g.index_.end()) {
                u = add_vertex(*img);
                queue.push_back(u);
            } else {
                u = it->second;
            }
            if (color == 1) {
                g.red_succ_[v] = u;
                g.red_pred_[u] = v;
            } else {
                g.green_succ_[v] = u;
                g.green_pred_[u] = v;
            }
        }
    }
    return g;
}

int CrystalGraph::find_vertex(const Config& f) const {
    auto it = index_.find(f.as_array());
    return it == index_.end() ? -1 : it->second;
}

int CrystalGraph::edge_count() const {
    int n = 0;
    for (int v = 0; v < size(); ++v) {
        if (red_succ_[v] >= 0) ++n;
        if (green_succ_[v] >= 0) ++n;
    }
    return n;
}

StringStats CrystalGraph::string_stats(int v, int color) const {
    if (v < 0 || v >= size()) throw std::out_of_range("vertex not in graph");
    StringStats s;
    for (int u = pred(v, color); u >= 0; u = pred(u, color)) ++s.t;
    for (int u = succ(v, color); u >= 0; u = succ(u, color)) ++s.h;
    return s;
}

Weight CrystalGraph::weight_of(int v) const {
    auto s1 = string_stats(v, 1);
    auto s2 = string_stats(v, 2);
    return Weight{s1.h - s1.t, s2.h - s2.t};
}

void CrystalGraph::decorate() {
    for (int v = 0; v < size(); ++v) {
        if (int u = red_succ_[v]; u >= 0) {
            int halves = 2 * (string_stats(u, 2).h - string_stats(v, 2).h);
            if (halves != 0 && halves != 2)
                throw std::logic_error("red label out of range at " + config(v).to_string());
            red_label_[v] = halves;
        }
        if (int u = green_succ_[v]; u >= 0) {
            int halves = string_stats(u, 1).h - string_stats(v, 1).h;
            if (halves < 0 || halves > 2)
                throw std::logic_error("green label out of range at " + config(v).to_string());
            green_label_[v] = halves;
        }
    }
    decorated_ = true;
}

int CrystalGraph::label_halves(int v, int color) const {
    if (!decorated_) throw std::logic_error("graph is not decorated");
    return color == 1 ? red_label_.at(v) : green_label_.at(v);
}

std::vector<int> CrystalGraph::fat_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v) {
        const Config& f = vertices_[v];
        if (f.a == f.b && f.b == f.c && f.x == f.y && f.y == f.z && f.z == f.w)
            out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> CrystalGraph::red_strings() const {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < size(); ++v) {
        if (red_pred_[v] >= 0) continue;
        std::vector<int> string;
        for (int u = v; u >= 0; u = red_succ_[u]) string.push_back(u);
        out.push_back(std::move(string));
    }
    return out;
}

CrystalGraph::Critical CrystalGraph::critical_of_red_string(int v) const {
    if (!decorated_) throw std::logic_error("graph is not decorated");
    int start = v;
    while (red_pred_[start] >= 0) start = red_pred_[start];
    std::vector<int> string;
    for (int u = start; u >= 0; u = red_succ_[u]) string.push_back(u);

    int zeros = 0;
    bool seen_one = false;
    for (size_t i = 0; i + 1 < string.size(); ++i) {
        int halves = red_label_[string[i]];
        if (halves == 0) {
            if (seen_one)
                throw std::logic_error("non-monotone red labels on string at " +
                                       config(string[i]).to_string());
            ++zeros;
        } else {
            seen_one = true;
        }
    }
    Critical c;
    c.vertex = string[zeros];
    c.x = zeros;
    c.y = static_cast<int>(string.size()) - 1 - zeros;
    return c;
}

int CrystalGraph::source() const {
    int found = -1;
    for (int v = 0; v < size(); ++v) {
        if (red_pred_[v] < 0 && green_pred_[v] < 0) {
            if (found >= 0) throw std::logic_error("multiple sources");
            found = v;
        }
    }
    if (found < 0) throw std::logic_error("no source");
    return found;
}

int CrystalGraph::sink() const {
    int found = -1;
    for (int v = 0; v < size(); ++v) {
        if (red_succ_[v] < 0 && green_succ_[v] < 0) {
            if (found >= 0) throw std::logic_error("multiple sinks");
            found = v;
        }
    }
    if (found < 0) throw std::logic_error("no sink");
    return found;
}

std::vector<Config> enumerate_interval(const Bounds& b) {
    if (b.free_mode) throw std::invalid_argument("enumeration requires interval bounds");
    const int H = b.h_cap, A = b.a_cap;
    std::set<std::array<int, 7>> seen;
    std::vector<Config> out;
    auto add = [&](const Config& f) {
        if (seen.insert(f.as_array()).second) out.push_back(f);
    };

    // Pattern A: bottom chain constant.
    for (int a = 0; a <= A; a += 2)
        for (int c = 0; c <= a; c += 2)
            for (int bb = c; bb <= a; ++bb)
                for (int t = 0; t <= H; ++t) add(Config{a, bb, c, t, t, t, t});

    // Pattern B1: top constant, z = w, y = z mod 2.
    for (int s = 0; s <= A; s += 2)
        for (int w = 0; w <= H; ++w)
            for (int y = w; y <= H; y += 2)
                for (int x = y; x <= H; ++x) add(Config{s, s, s, x, y, w, w});

    // Pattern B2: top constant, x = y, z = y mod 2.
    for (int s = 0; s <= A; s += 2)
        for (int x = 0; x <= H; ++x)
            for (int z = x % 2; z <= x; z += 2)
                for (int w = 0; w <= z; ++w) add(Config{s, s, s, x, x, z, w});

    // Pattern C1: b = c, x = y = z.
    for (int s = 0; s <= A; s += 2)
        for (int a = s; a <= A; a += 2)
            for (int h = 0; h <= H; ++h)
                for (int w = 0; w <= h; ++w) add(Config{a, s, s, h, h, h, w});

    // Pattern C2: a = b, y = z = w.
    for (int c = 0; c <= A; c += 2)
        for (int s = c; s <= A; s += 2)
            for (int g = 0; g <= H; ++g)
                for (int x = g; x <= H; ++x) add(Config{s, s, c, x, g, g, g});

    std::sort(out.begin(), out.end(),
              [](const Config& l, const Config& r) { return l.as_array() < r.as_array(); });
    return out;
}

long long expected_dimension(int h, int a) {
    long long H = h, B = a / 2;
    return (H + 1) * (B + 1) * (H + B + 2) * (H + 2 * B + 3) / 6;
}

EmbedReport embed_product(int h, int a) {
    EmbedReport rep;
    CrystalGraph upper = CrystalGraph::generate(Bounds::interval(h, 0));
    CrystalGraph lower = CrystalGraph::generate(Bounds::interval(0, a));
    CrystalGraph big = CrystalGraph::generate(Bounds::interval(h, a));

    const int upper_fat = h + 1;      // bottom chain constant at each level 0..H
    const int lower_fat = a / 2 + 1;  // top chain constant at each even level 0..A
    rep.product_vertex_count =
        upper.size() * lower_fat + lower.size() * upper_fat - upper_fat * lower_fat;

    std::set<std::array<int, 7>> images;
    auto check_vertex = [&](const Config& f) {
        images.insert(f.as_array());
        if (big.find_vertex(f) < 0) {
            rep.ok = false;
            if (rep.message.empty()) rep.message = "missing image vertex " + f.to_string();
        }
    };
    auto check_edge = [&](const Config& s, const Config& t, int color) {
        int sv = big.find_vertex(s), tv = big.find_vertex(t);
        if (sv < 0 || tv < 0 || big.succ(sv, color) != tv) {
            rep.ok = false;
            if (rep.message.empty())
                rep.message = "missing image edge " + s.to_string() + " -> " + t.to_string();
            return;
        }
        ++rep.mapped_edge_count;
    };

    // Copies of the upper factor at each constant top level alpha.
    for (int alpha = 0; alpha <= a; alpha += 2) {
        auto shift = [alpha](Config f) {
            f.a += alpha; f.b += alpha; f.c += alpha;
            return f;
        };
        for (int v = 0; v < upper.size(); ++v) {
            check_vertex(shift(upper.config(v)));
            for (int color : {1, 2})
                if (int u = upper.succ(v, color); u >= 0)
                    check_edge(shift(upper.config(v)), shift(upper.config(u)), color);
        }
    }
    // Copies of the lower factor at each constant bottom level.
    for (int level = 0; level <= h; ++level) {
        auto shift = [level](Config f) {
            f.x += level; f.y += level; f.z += level; f.w += level;
            return f;
        };
        for (int v = 0; v < lower.size(); ++v) {
            check_vertex(shift(lower.config(v)));
            for (int color : {1, 2})
                if (int u = lower.succ(v, color); u >= 0)
                    check_edge(shift(lower.config(v)), shift(lower.config(u)), color);
        }
    }
    rep.mapped_vertex_count = static_cast<int>(images.size());
    if (rep.mapped_vertex_count != rep.product_vertex_count) {
        rep.ok = false;
        if (rep.message.empty()) rep.message = "glued vertex count mismatch";
    }
    return rep;
}

}  // namespace b2c
