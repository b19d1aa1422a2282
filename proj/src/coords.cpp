#include "coords.hpp"

#include <algorithm>
#include <stdexcept>

namespace b2c {

namespace {

// One quadruple per matched equality pattern; overlaps must agree.
template <typename PerPattern>
Quad agreed(const Config& f, const Bounds& b, PerPattern per_pattern, const char* which) {
    if (!is_admissible(f)) throw std::domain_error("inadmissible configuration: " + f.to_string());
    if (b.free_mode) throw std::domain_error("coordinates require interval bounds");
    if (!b.contains(f)) throw std::domain_error("configuration outside interval");
    PatternSet set = equality_patterns(f);
    bool have = false;
    Quad result;
    for (Pattern p : {Pattern::A, Pattern::B1, Pattern::B2, Pattern::C1, Pattern::C2}) {
        if (!has_pattern(set, p)) continue;
        Quad c = per_pattern(p);
        if (have && !(c == result))
            throw std::logic_error(std::string(which) + " formulas disagree across patterns at " +
                                   f.to_string());
        result = c;
        have = true;
    }
    return result;
}

}  // namespace

Quad coords_first(const Config& f, const Bounds& b) {
    const int H = b.h_cap, A = b.a_cap;
    return agreed(f, b, [&](Pattern p) {
        Quad c;
        switch (p) {
            case Pattern::A: {
                const int al = f.a, be = f.b, ga = f.c, h = f.x;
                c.n = H - h;
                c.p = H - h + A - be;
                if (al - be >= be - ga) {
                    c.q = (A - al) / 2;
                    c.m = (A - ga) / 2 + H - h;
                } else {
                    c.q = (A - al) / 2 + be - (al + ga) / 2;
                    c.m = (A + al) / 2 - be + H - h;
                }
                break;
            }
            case Pattern::B1: {
                const int al = f.a, h = f.x, g = f.y, e = f.z;
                c.n = H - h;
                c.m = H - h + (A - al) / 2;
                c.p = H - e + A - al;
                c.q = h - (g + e) / 2 + (A - al) / 2;
                break;
            }
            case Pattern::B2: {
                const int al = f.a, h = f.x, g = f.z, e = f.w;
                c.n = H - h;
                c.m = H - h + (A - al) / 2;
                c.p = H - e + A - al;
                c.q = (h - g) / 2 + (A - al) / 2;
                break;
            }
            case Pattern::C1: {
                const int al = f.a, be = f.b, h = f.x, e = f.w;
                c.n = H - h;
                c.m = (A - be) / 2 + H - h;
                c.p = H - e + A - be;
                c.q = (A - al) / 2;
                break;
            }
            case Pattern::C2: {
                const int al = f.a, ga = f.c, h = f.x, g = f.y;
                c.n = H - h;
                c.m = (A - al) / 2 + H - h;
                c.p = H - g + A - al;
                c.q = (al - ga) / 2 + h - g + (A - al) / 2;
                break;
            }
        }
        return c;
    }, "first-coordinate");
}

Quad coords_second(const Config& f, const Bounds& b) {
    const int H = b.h_cap, A = b.a_cap;
    return agreed(f, b, [&](Pattern p) {
        Quad c;  // fields read as (n', m', p', q')
        switch (p) {
            case Pattern::A: {
                const int al = f.a, be = f.b, ga = f.c, h = f.x;
                c.q = (A - al) / 2;
                c.p = H - h + A - al;
                c.m = (A - ga) / 2 + H - h;
                c.n = al - be + H - h;
                break;
            }
            case Pattern::B1: {
                const int al = f.a, h = f.x, g = f.y, e = f.z;
                c.q = (A - al) / 2;
                c.p = H - e + A - al;
                c.m = H - (g + e) / 2 + (A - al) / 2;
                c.n = H - h;
                break;
            }
            case Pattern::B2: {
                const int al = f.a, h = f.x, g = f.z, e = f.w;
                c.q = (A - al) / 2;
                c.p = H - g + A - al;
                c.m = H - (g + h) / 2 + (A - al) / 2;
                c.n = g - e + H - h;
                break;
            }
            case Pattern::C1: {
                // (al - be) is even on admissible input, so the floor in the
                // source formula is exact division.
                const int al = f.a, be = f.b, h = f.x, e = f.w;
                const int fl = (al - be) / 2;
                c.q = (A - be) / 2 - fl;
                c.p = H - h + A - al;
                c.m = fl + H - h + (A - al) / 2;
                c.n = H - e + al - be;
                break;
            }
            case Pattern::C2: {
                const int al = f.a, ga = f.c, h = f.x, g = f.y;
                c.q = (A - al) / 2;
                c.p = H - g + A - al;
                c.m = (al - ga) / 2 + H - g + (A - al) / 2;
                c.n = H - h;
                break;
            }
        }
        return c;
    }, "second-coordinate");
}

Word first_word(const Quad& c) {
    return Word{{1, c.n}, {2, c.m}, {1, c.p}, {2, c.q}};
}

Word second_word(const Quad& c) {
    return Word{{2, c.q}, {1, c.p}, {2, c.m}, {1, c.n}};
}

std::optional<Config> apply_word(const Config& f, const Word& w, const Bounds& b) {
    Config cur = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        for (int step = 0; step < it->count; ++step) {
            auto next = it->color == 1 ? apply_f1(cur, b) : apply_f2(cur, b);
            if (!next) return std::nullopt;
            cur = *next;
        }
    }
    return cur;
}

bool in_cone_c2(const Quad& c) { return c.p >= c.m && c.m >= c.n; }

bool in_cone_c1(const Quad& c) { return 2 * c.m >= c.p && c.p >= 2 * c.q; }

Quad transform_second_to_first(const Quad& s) {
    Quad f;
    f.q = std::max({s.q, s.p - s.m, s.m - s.n});
    f.p = std::max({s.p, s.n + 2 * s.p - 2 * s.m, 2 * s.q + s.n});
    f.m = std::min({s.m, 2 * s.m - s.p + s.q, s.n + s.q});
    f.n = std::min({s.n, 2 * s.m - s.p, s.p - 2 * s.q});
    return f;
}

}  // namespace b2c
