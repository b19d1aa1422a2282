#pragma once

#include <optional>
#include <vector>

#include "config.hpp"

namespace b2c {

struct Quad {
    int n = 0, m = 0, p = 0, q = 0;
    friend bool operator==(const Quad&, const Quad&) = default;
};

struct WordFactor {
    int color = 1;   // 1 or 2
    int count = 0;
};
// Stored leftmost factor first; factors act rightmost-first on application.
using Word = std::vector<WordFactor>;

// Canonical coordinates of an admissible configuration inside the interval.
// Both raise std::logic_error when the case formulas of overlapping
// equality patterns disagree (never expected on admissible input).
Quad coords_first(const Config& f, const Bounds& b);
Quad coords_second(const Config& f, const Bounds& b);

Word first_word(const Quad& c);   // color pattern 1^n 2^m 1^p 2^q
Word second_word(const Quad& c);  // color pattern 2^q 1^p 2^m 1^n

std::optional<Config> apply_word(const Config& f, const Word& w, const Bounds& b);

bool in_cone_c2(const Quad& first);    // p >= m >= n
bool in_cone_c1(const Quad& second);   // 2m >= p >= 2q

// Piecewise-linear change of coordinates, second quadruple to first.
Quad transform_second_to_first(const Quad& s);

}  // namespace b2c
