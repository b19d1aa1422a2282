#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace b2c {

// The five equality patterns an admissible configuration may realize.
// Each names the set of chain equalities that must hold simultaneously.
enum class Pattern : uint8_t { A = 0, B1, B2, C1, C2 };

// Bitmask over Pattern values.
using PatternSet = uint8_t;

inline constexpr PatternSet pattern_bit(Pattern p) {
    return static_cast<PatternSet>(1u << static_cast<unsigned>(p));
}
inline constexpr bool has_pattern(PatternSet s, Pattern p) {
    return (s & pattern_bit(p)) != 0;
}

const char* pattern_name(Pattern p);

// A vertex of the crossing model: two weakly decreasing integer chains,
// (a >= b >= c) on top and (x >= y >= z >= w) below.
struct Config {
    int a = 0, b = 0, c = 0;
    int x = 0, y = 0, z = 0, w = 0;

    friend bool operator==(const Config&, const Config&) = default;
    auto as_array() const { return std::array<int, 7>{a, b, c, x, y, z, w}; }
    std::string to_string() const;
};

// Operator bounds. Interval mode restricts configurations to
// c >= 0, w >= 0, a <= a_cap, x <= h_cap; free mode imposes nothing.
struct Bounds {
    int h_cap = 0;
    int a_cap = 0;
    bool free_mode = false;

    static Bounds interval(int h, int a) { return Bounds{h, a, false}; }
    static Bounds unbounded() { return Bounds{0, 0, true}; }

    bool contains(const Config& f) const {
        if (free_mode) return true;
        return f.c >= 0 && f.w >= 0 && f.a <= a_cap && f.x <= h_cap;
    }
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

bool chains_ordered(const Config& f);
bool parity_ok(const Config& f);

// All patterns whose equality set is contained in the equalities realized
// by f. Throws std::invalid_argument when the chain orderings fail.
PatternSet equality_patterns(const Config& f);

// Total predicate: chains + parity + at least one equality pattern.
bool is_admissible(const Config& f);

// Crystal operators. Undefined steps yield nullopt; calling on an
// inadmissible configuration throws std::domain_error.
std::optional<Config> apply_f1(const Config& f, const Bounds& b);
std::optional<Config> apply_f2(const Config& f, const Bounds& b);
std::optional<Config> apply_e1(const Config& f, const Bounds& b);
std::optional<Config> apply_e2(const Config& f, const Bounds& b);

// The edge-reversing involution on configurations.
Config star(const Config& f);

}  // namespace b2c
