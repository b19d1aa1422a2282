#include <doctest.h>

#include <stdexcept>

#include "config.hpp"
#include "crystal.hpp"

using namespace b2c;

namespace {

PatternSet set_of(std::initializer_list<Pattern> ps) {
    PatternSet s = 0;
    for (Pattern p : ps) s |= pattern_bit(p);
    return s;
}

}  // namespace

TEST_CASE("equality patterns") {
    CHECK(equality_patterns(Config{0, 0, 0, 0, 0, 0, 0}) ==
          set_of({Pattern::A, Pattern::B1, Pattern::B2, Pattern::C1, Pattern::C2}));
    CHECK(equality_patterns(Config{2, 1, 0, 0, 0, 0, 0}) == set_of({Pattern::A}));
    CHECK(equality_patterns(Config{0, 0, 0, 2, 1, 1, 0}) == 0);
    CHECK(equality_patterns(Config{0, 0, 0, 2, 2, 0, 0}) == set_of({Pattern::B1, Pattern::B2}));
    CHECK_THROWS_AS(equality_patterns(Config{0, 1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(Config{0, 0, 0, 1, 0, 0, 0}));
    CHECK_FALSE(is_admissible(Config{1, 0, 0, 0, 0, 0, 0}));  // odd top value
    CHECK_FALSE(is_admissible(Config{0, 0, 0, 2, 1, 1, 0}));  // no pattern
    CHECK_FALSE(is_admissible(Config{0, 1, 0, 0, 0, 0, 0}));  // ordering
    CHECK(is_admissible(Config{0, 0, 0, 1, 1, 1, 0}));
}

TEST_CASE("raising operator, color 1") {
    Bounds b10 = Bounds::interval(1, 0);
    CHECK(apply_f1(Config{0, 0, 0, 1, 1, 1, 0}, b10) == Config{0, 0, 0, 1, 1, 1, 1});
    CHECK(apply_f1(Config{2, 0, 0, 0, 0, 0, 0}, Bounds::interval(0, 2)) ==
          Config{2, 1, 0, 0, 0, 0, 0});
    CHECK(apply_f1(Config{}, b10) == Config{0, 0, 0, 1, 0, 0, 0});
    CHECK_FALSE(apply_f1(Config{2, 2, 2, 0, 0, 0, 0}, Bounds::interval(0, 2)).has_value());
    CHECK_THROWS_AS(apply_f1(Config{0, 0, 0, 2, 1, 1, 0}, b10), std::domain_error);
}

TEST_CASE("raising operator, color 2") {
    Bounds b02 = Bounds::interval(0, 2);
    Bounds b20 = Bounds::interval(2, 0);
    CHECK(apply_f2(Config{2, 2, 0, 0, 0, 0, 0}, b02) == Config{2, 2, 2, 0, 0, 0, 0});
    CHECK(apply_f2(Config{0, 0, 0, 2, 0, 0, 0}, b20) == Config{0, 0, 0, 2, 2, 0, 0});
    CHECK(apply_f2(Config{0, 0, 0, 1, 0, 0, 0}, Bounds::interval(1, 0)) ==
          Config{0, 0, 0, 1, 1, 1, 0});
    CHECK(apply_f2(Config{0, 0, 0, 2, 2, 0, 0}, b20) == Config{0, 0, 0, 2, 2, 2, 0});
    CHECK(apply_f2(Config{}, b02) == Config{2, 0, 0, 0, 0, 0, 0});
    CHECK_FALSE(apply_f2(Config{2, 1, 0, 0, 0, 0, 0}, b02).has_value());
}

TEST_CASE("lowering operators") {
    Bounds b10 = Bounds::interval(1, 0);
    Bounds b02 = Bounds::interval(0, 2);
    CHECK(apply_e1(Config{0, 0, 0, 1, 0, 0, 0}, b10) == Config{});
    CHECK(apply_e2(Config{2, 2, 2, 0, 0, 0, 0}, b02) == Config{2, 2, 0, 0, 0, 0, 0});
    CHECK_FALSE(apply_e1(Config{}, b10).has_value());
    CHECK(apply_e1(Config{}, Bounds::unbounded()) == Config{0, 0, 0, 0, 0, 0, -1});
}

TEST_CASE("star involution") {
    CHECK(star(Config{}) == Config{});
    Config f{0, 0, 0, 1, 0, 0, 0};
    Config sf = star(f);
    CHECK(sf == Config{0, 0, 0, 0, 0, 0, -1});
    CHECK(equality_patterns(f) == set_of({Pattern::B1, Pattern::C2}));
    CHECK(equality_patterns(sf) == set_of({Pattern::B2, Pattern::C1}));
}

TEST_CASE("pattern containment implies at least three equalities") {
    for (const Config& f : enumerate_interval(Bounds::interval(3, 4))) {
        int eq = (f.a == f.b) + (f.b == f.c) + (f.x == f.y) + (f.y == f.z) + (f.z == f.w);
        CHECK(eq >= 3);
    }
}

TEST_CASE("inverses over the exhaustive sweep") {
    for (int h = 0; h <= 4; ++h)
        for (int a = 0; a <= 8; a += 2) {
            Bounds b = Bounds::interval(h, a);
            for (const Config& f : enumerate_interval(b)) {
                // star is an involution and preserves admissibility.
                CHECK(is_admissible(star(f)));
                CHECK(star(star(f)) == f);
                if (auto g = apply_f1(f, b)) {
                    auto back = apply_e1(*g, b);  // asserts uniqueness internally
                    REQUIRE(back.has_value());
                    CHECK(*back == f);
                }
                if (auto g = apply_f2(f, b)) {
                    auto back = apply_e2(*g, b);
                    REQUIRE(back.has_value());
                    CHECK(*back == f);
                }
                if (auto g = apply_e1(f, b)) CHECK(apply_f1(*g, b) == f);
                if (auto g = apply_e2(f, b)) CHECK(apply_f2(*g, b) == f);
            }
        }
}

TEST_CASE("free mode is total and star anti-commutes") {
    Bounds free = Bounds::unbounded();
    for (const Config& f : enumerate_interval(Bounds::interval(2, 4))) {
        REQUIRE(apply_f1(f, free).has_value());
        REQUIRE(apply_f2(f, free).has_value());
        REQUIRE(apply_e1(f, free).has_value());
        REQUIRE(apply_e2(f, free).has_value());
        CHECK(apply_e1(star(f), free) == star(*apply_f1(f, free)));
        CHECK(apply_e2(star(f), free) == star(*apply_f2(f, free)));
    }
}
