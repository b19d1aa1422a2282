#include <doctest.h>

#include "crystal.hpp"
#include "sky.hpp"

using namespace b2c;

namespace {

SkyGraph sky_of(int h, int a) {
    CrystalGraph g = CrystalGraph::generate(Bounds::interval(h, a));
    g.decorate();
    return contract(to_colored(g));
}

int count_color(const SkyGraph& s, int color) {
    int n = 0;
    for (const GEdge& e : s.edges) n += (e.color == color);
    return n;
}

}  // namespace

TEST_CASE("contraction of the fundamental crystals") {
    SkyGraph s10 = sky_of(1, 0);
    REQUIRE(s10.vertices.size() == 2);
    REQUIRE(s10.edges.size() == 1);
    CHECK(s10.edges[0].color == kGreen);
    CHECK(s10.edges[0].label_halves == 1);
    CHECK(s10.vertices[s10.edges[0].src] == SkyVertex{0, 1});
    CHECK(s10.vertices[s10.edges[0].dst] == SkyVertex{1, 0});

    SkyGraph s02 = sky_of(0, 2);
    REQUIRE(s02.vertices.size() == 3);
    REQUIRE(s02.edges.size() == 2);
    CHECK(count_color(s02, kBlue) == 2);
    int mid = -1;
    for (int v = 0; v < 3; ++v)
        if (s02.vertices[v] == SkyVertex{1, 1}) mid = v;
    REQUIRE(mid >= 0);
    for (const GEdge& e : s02.edges) {
        CHECK((e.src == mid || e.dst == mid));
        CHECK(s02.vertices[e.src == mid ? e.dst : e.src] == SkyVertex{0, 0});
    }

    SkyGraph s00 = sky_of(0, 0);
    CHECK(s00.vertices.size() == 1);
    CHECK(s00.edges.empty());
}

TEST_CASE("sails have the expected shape") {
    CHECK(sail_upper(0).vertices.size() == 1);
    CHECK(sail_upper(1).vertices.size() == 2);
    CHECK(sail_upper(2).vertices.size() == 4);
    CHECK(sail_upper(3).vertices.size() == 6);
    CHECK(sail_upper(4).vertices.size() == 9);
    for (int h = 0; h <= 5; ++h) {
        SkyGraph u = sail_upper(h);
        CHECK(count_color(u, kBlue) == 0);
        CHECK(check_sky(u).passed());
        auto diag = upper_diagonal(h);
        REQUIRE(static_cast<int>(diag.size()) == h + 1);
        for (int l = 0; l <= h; ++l) CHECK(u.vertices[diag[l]] == SkyVertex{l, h - l});
    }
    for (int a = 0; a <= 5; ++a) {
        SkyGraph d = sail_lower(a);
        CHECK(static_cast<int>(d.vertices.size()) == (a + 1) * (a + 2) / 2);
        CHECK(count_color(d, kGreen) == 0);
        CHECK(check_sky(d).passed());
        auto diag = lower_diagonal(a);
        REQUIRE(static_cast<int>(diag.size()) == a + 1);
        for (int v : diag) CHECK(d.vertices[v] == SkyVertex{0, 0});
    }
    CHECK(sky_iso(sail_lower(1), sky_of(0, 2)).isomorphic);
    CHECK(sky_iso(sail_upper(1), sky_of(1, 0)).isomorphic);
}

TEST_CASE("gluing counts and degenerate cases") {
    for (int h = 0; h <= 4; ++h)
        for (int b = 0; b <= 4; ++b) {
            SkyGraph r = reference_sky(h, b);
            long long nu = static_cast<long long>(sail_upper(h).vertices.size());
            long long nl = static_cast<long long>(sail_lower(b).vertices.size());
            CHECK(static_cast<long long>(r.vertices.size()) ==
                  nu * (b + 1) + nl * (h + 1) - static_cast<long long>((h + 1) * (b + 1)));
            CHECK(check_sky(r).passed());
        }
    CHECK(sky_iso(reference_sky(3, 0), sail_upper(3)).isomorphic);
    CHECK(sky_iso(reference_sky(0, 3), sail_lower(3)).isomorphic);

    SkyGraph lower = sail_lower(2);
    std::vector<int> bad_t = {lower_diagonal(2)[0], 2};  // labels differ
    if (lower.vertices[2] == SkyVertex{0, 0}) bad_t[1] = 3;
    CHECK_THROWS_AS(glue(sail_upper(2), upper_diagonal(2), lower, bad_t), structure_error);
}

TEST_CASE("contracted interval matches the glued reference") {
    for (int h = 0; h <= 4; ++h)
        for (int a = 0; a <= 8; a += 2) {
            SkyGraph got = sky_of(h, a);
            SkyGraph want = reference_sky(h, a / 2);
            IsoResult iso = sky_iso(got, want);
            if (!iso.isomorphic) MESSAGE("H=", h, " A=", a, ": ", iso.reason);
            CHECK(iso.isomorphic);
            CHECK(check_sky(got).passed());
            CHECK(expansion_count(got) == expected_dimension(h, a));
        }
}

TEST_CASE("isomorphism rejects genuinely different skies") {
    CHECK_FALSE(sky_iso(sail_upper(2), sail_upper(3)).isomorphic);
    CHECK_FALSE(sky_iso(sky_of(1, 2), reference_sky(2, 1)).isomorphic);
    SkyGraph relabeled = sail_upper(2);
    relabeled.vertices[upper_diagonal(2)[0]] = SkyVertex{5, 5};
    CHECK_FALSE(sky_iso(relabeled, sail_upper(2)).isomorphic);
}

TEST_CASE("contraction rejects structurally inconsistent input") {
    // Two strings joined by green edges whose projected labels disagree.
    ColoredGraph conflict;
    conflict.n = 4;
    conflict.edges = {{0, 1, kRed, 0}, {2, 3, kRed, 0}, {0, 2, kGreen, 0}, {1, 3, kGreen, 2}};
    CHECK_THROWS_AS(contract(conflict), structure_error);

    // A whole-label edge across a level jump of three.
    ColoredGraph jump;
    jump.n = 5;
    jump.edges = {{1, 2, kRed, 0}, {2, 3, kRed, 0}, {3, 4, kRed, 0}, {0, 4, kGreen, 0}};
    CHECK_THROWS_AS(contract(jump), structure_error);
}

TEST_CASE("sky checker flags forbidden local shapes") {
    SkyGraph half_then_blue0;
    half_then_blue0.vertices = {{0, 1}, {1, 0}, {0, 0}};
    half_then_blue0.edges = {{0, 1, kGreen, 1}, {1, 2, kBlue, 0}};
    CHECK_FALSE(check_sky(half_then_blue0).passed());

    SkyGraph blue1_then_half;
    blue1_then_half.vertices = {{0, 0}, {1, 0}, {1, 1}};
    blue1_then_half.edges = {{0, 1, kBlue, 2}, {1, 2, kGreen, 1}};
    CHECK_FALSE(check_sky(blue1_then_half).passed());

    SkyGraph common_tail;
    common_tail.vertices = {{1, 1}, {2, 1}, {0, 1}};
    common_tail.edges = {{0, 1, kGreen, 1}, {0, 2, kBlue, 0}};
    CHECK_FALSE(check_sky(common_tail).passed());

    SkyGraph common_head;
    common_head.vertices = {{0, 0}, {1, 2}, {1, 1}};
    common_head.edges = {{0, 2, kBlue, 2}, {1, 2, kGreen, 1}};
    CHECK_FALSE(check_sky(common_head).passed());

    SkyGraph dup_label;
    dup_label.vertices = {{0, 0}, {1, 0}, {2, 0}};
    dup_label.edges = {{0, 1, kGreen, 0}, {0, 2, kGreen, 0}};
    CHECK_FALSE(check_sky(dup_label).passed());

    SkyGraph parallel;
    parallel.vertices = {{0, 0}, {1, 0}};
    parallel.edges = {{0, 1, kGreen, 0}, {0, 1, kBlue, 2}};
    CHECK_FALSE(check_sky(parallel).passed());
}
