#include "config.hpp"

#include <stdexcept>
#include <vector>

namespace b2c {

const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::A: return "A";
        case Pattern::B1: return "B1";
        case Pattern::B2: return "B2";
        case Pattern::C1: return "C1";
        case Pattern::C2: return "C2";
    }
    return "?";
}

std::string Config::to_string() const {
    std::string s = "(";
    s += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "|";
    s += std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ",";
    s += std::to_string(w) + ")";
    return s;
}

bool chains_ordered(const Config& f) {
    return f.a >= f.b && f.b >= f.c && f.x >= f.y && f.y >= f.z && f.z >= f.w;
}

bool parity_ok(const Config& f) {
    auto even = [](int v) { return ((v % 2) + 2) % 2 == 0; };
    return even(f.a) && even(f.c) && even(f.y + f.z);
}

PatternSet equality_patterns(const Config& f) {
    if (!chains_ordered(f))
        throw std::invalid_argument("chain ordering violated: " + f.to_string());
    const bool ab = f.a == f.b, bc = f.b == f.c;
    const bool xy = f.x == f.y, yz = f.y == f.z, zw = f.z == f.w;
    PatternSet s = 0;
    if (xy && yz && zw) s |= pattern_bit(Pattern::A);
    if (ab && bc && zw) s |= pattern_bit(Pattern::B1);
    if (ab && bc && xy) s |= pattern_bit(Pattern::B2);
    if (bc && xy && yz) s |= pattern_bit(Pattern::C1);
    if (ab && yz && zw) s |= pattern_bit(Pattern::C2);
    return s;
}

bool is_admissible(const Config& f) {
    return chains_ordered(f) && parity_ok(f) && equality_patterns(f) != 0;
}

namespace {

void require_admissible(const Config& f) {
    if (!is_admissible(f))
        throw std::domain_error("inadmissible configuration: " + f.to_string());
}

}  // namespace

std::optional<Config> apply_f1(const Config& f, const Bounds& b) {
    require_admissible(f);
    Config g = f;
    if (f.w < f.z) {
        g.w += 1;
    } else if (f.b < f.a) {
        g.b += 1;
    } else {
        if (!b.free_mode && f.x + 1 > b.h_cap) return std::nullopt;
        g.x += 1;
    }
    return g;
}

std::optional<Config> apply_f2(const Config& f, const Bounds& b) {
    require_admissible(f);
    Config g = f;
    if (f.a - f.b < f.b - f.c) {
        g.c += 2;
    } else if (f.y + 2 <= f.x) {
        g.y += 2;
    } else if (f.y + 1 == f.x) {
        g.y += 1;
        g.z += 1;
    } else if (f.y == f.x && f.z < f.y) {
        g.z += 2;
    } else {
        if (!b.free_mode && f.a + 2 > b.a_cap) return std::nullopt;
        g.a += 2;
    }
    return g;
}

namespace {

// Unique-preimage search: try each candidate decrement, keep those that are
// admissible, inside bounds, and map back to f under the forward operator.
template <typename Forward>
std::optional<Config> unique_preimage(const Config& f, const Bounds& b,
                                      const std::vector<Config>& candidates,
                                      Forward forward) {
    std::optional<Config> found;
    for (const Config& g : candidates) {
        if (!is_admissible(g) || !b.contains(g)) continue;
        auto fwd = forward(g, b);
        if (!fwd || !(*fwd == f)) continue;
        if (found && !(*found == g))
            throw std::logic_error("two distinct preimages of " + f.to_string());
        found = g;
    }
    return found;
}

}  // namespace

std::optional<Config> apply_e1(const Config& f, const Bounds& b) {
    require_admissible(f);
    std::vector<Config> cands;
    {
        Config g = f; g.x -= 1; cands.push_back(g);
    }
    {
        Config g = f; g.b -= 1; cands.push_back(g);
    }
    {
        Config g = f; g.w -= 1; cands.push_back(g);
    }
    return unique_preimage(f, b, cands,
                           [](const Config& g, const Bounds& bb) { return apply_f1(g, bb); });
}

std::optional<Config> apply_e2(const Config& f, const Bounds& b) {
    require_admissible(f);
    std::vector<Config> cands;
    {
        Config g = f; g.a -= 2; cands.push_back(g);
    }
    {
        Config g = f; g.y -= 2; cands.push_back(g);
    }
    {
        Config g = f; g.y -= 1; g.z -= 1; cands.push_back(g);
    }
    {
        Config g = f; g.z -= 2; cands.push_back(g);
    }
    {
        Config g = f; g.c -= 2; cands.push_back(g);
    }
    return unique_preimage(f, b, cands,
                           [](const Config& g, const Bounds& bb) { return apply_f2(g, bb); });
}

Config star(const Config& f) {
    return Config{-f.c, -f.b, -f.a, -f.w, -f.z, -f.y, -f.x};
}

}  // namespace b2c
