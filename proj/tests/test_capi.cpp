#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "b2crystal.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { b2c_string_free(p); }
    std::string s() const { return p ? std::string(p) : std::string(); }
};

struct Graph {
    b2c_graph* g = nullptr;
    ~Graph() { b2c_graph_free(g); }
};

struct Sky {
    b2c_sky* s = nullptr;
    ~Sky() { b2c_sky_free(s); }
};

}  // namespace

TEST_CASE("version and error strings exist") {
    CHECK(b2c_version() != nullptr);
    CHECK(std::string(b2c_version()).find('.') != std::string::npos);
}

TEST_CASE("generate, verify, stats") {
    Graph g;
    REQUIRE(b2c_generate(1, 2, &g.g) == B2C_OK);
    CHECK(b2c_graph_vertex_count(g.g) == 16);
    CHECK(b2c_graph_edge_count(g.g) > 0);

    Str report;
    CHECK(b2c_verify(g.g, "ALL", 1, 1, &report.p) == B2C_OK);
    CHECK(report.s().find("\"passed\": true") != std::string::npos);
    CHECK(report.s().find("\"dimension_expected\": 16") != std::string::npos);

    Str k3;
    CHECK(b2c_verify(g.g, "K3", 0, 0, &k3.p) == B2C_OK);

    Str stats;
    CHECK(b2c_stats_json(g.g, &stats.p) == B2C_OK);
    CHECK(stats.s().find("\"vertex_count\": 16") != std::string::npos);

    CHECK(b2c_verify(g.g, "K9", 0, 0, nullptr) == B2C_ERR_USAGE);
    CHECK(std::string(b2c_last_error()).size() > 0);
}

TEST_CASE("argument validation") {
    b2c_graph* g = nullptr;
    CHECK(b2c_generate(1, 3, &g) == B2C_ERR_USAGE);
    CHECK(g == nullptr);
    CHECK(b2c_generate(-1, 0, &g) == B2C_ERR_USAGE);
    CHECK(b2c_generate(1, 0, nullptr) == B2C_ERR_USAGE);
    CHECK(b2c_graph_from_json("{ bad", &g) == B2C_ERR_PARSE);
    CHECK(g == nullptr);
}

TEST_CASE("json round trip through the C surface") {
    Graph g;
    REQUIRE(b2c_generate(2, 2, &g.g) == B2C_OK);
    Str text;
    REQUIRE(b2c_graph_to_json(g.g, &text.p) == B2C_OK);
    Graph back;
    REQUIRE(b2c_graph_from_json(text.p, &back.g) == B2C_OK);
    CHECK(b2c_graph_vertex_count(back.g) == b2c_graph_vertex_count(g.g));
    Str text2;
    REQUIRE(b2c_graph_to_json(back.g, &text2.p) == B2C_OK);
    CHECK(text.s() == text2.s());

    Str verify;
    CHECK(b2c_verify(back.g, "ALL", 1, 0, &verify.p) == B2C_OK);

    Str dot;
    CHECK(b2c_graph_to_dot(g.g, &dot.p) == B2C_OK);
    CHECK(dot.s().find("digraph") != std::string::npos);
}

TEST_CASE("violations surface as status 1 with a report") {
    // Flip one red label in a serialized crystal.
    Graph g;
    REQUIRE(b2c_generate(1, 2, &g.g) == B2C_OK);
    Str text;
    REQUIRE(b2c_graph_to_json(g.g, &text.p) == B2C_OK);
    std::string mutated = text.s();
    size_t pos = mutated.find("\"color\": \"red\"");
    REQUIRE(pos != std::string::npos);
    size_t lab = mutated.find("\"label_halves\": 0", pos);
    if (lab == std::string::npos) {
        lab = mutated.find("\"label_halves\": 2", pos);
        REQUIRE(lab != std::string::npos);
        mutated[lab + std::string("\"label_halves\": ").size()] = '0';
    } else {
        mutated[lab + std::string("\"label_halves\": ").size()] = '2';
    }
    Graph bad;
    REQUIRE(b2c_graph_from_json(mutated.c_str(), &bad.g) == B2C_OK);
    Str report;
    CHECK(b2c_verify(bad.g, "ALL", 1, 0, &report.p) == B2C_VIOLATIONS);
    CHECK(report.s().find("\"passed\": false") != std::string::npos);
}

TEST_CASE("sky surface") {
    Graph g;
    REQUIRE(b2c_generate(2, 4, &g.g) == B2C_OK);
    Sky contracted, reference;
    REQUIRE(b2c_sky_contract(g.g, &contracted.s) == B2C_OK);
    REQUIRE(b2c_sky_reference(2, 4, &reference.s) == B2C_OK);
    CHECK(b2c_sky_param_h(contracted.s) == 2);
    CHECK(b2c_sky_param_a(contracted.s) == 4);

    int iso = 0;
    REQUIRE(b2c_sky_iso(contracted.s, reference.s, &iso) == B2C_OK);
    CHECK(iso == 1);

    Str check;
    CHECK(b2c_sky_check(contracted.s, &check.p) == B2C_OK);

    Str text;
    REQUIRE(b2c_sky_to_json(contracted.s, &text.p) == B2C_OK);
    Sky back;
    REQUIRE(b2c_sky_from_json(text.p, &back.s) == B2C_OK);
    CHECK(b2c_sky_vertex_count(back.s) == b2c_sky_vertex_count(contracted.s));

    Sky other;
    REQUIRE(b2c_sky_reference(1, 2, &other.s) == B2C_OK);
    REQUIRE(b2c_sky_iso(contracted.s, other.s, &iso) == B2C_OK);
    CHECK(iso == 0);

    CHECK(b2c_sky_reference(1, 3, &other.s) == B2C_ERR_USAGE);
    Str dot;
    CHECK(b2c_sky_to_dot(reference.s, &dot.p) == B2C_OK);
}

TEST_CASE("coordinates through the C surface") {
    Graph g;
    REQUIRE(b2c_generate(1, 2, &g.g) == B2C_OK);
    Str all;
    CHECK(b2c_coords_json(g.g, -1, 1, &all.p) == B2C_OK);
    CHECK(all.s().find("\"first\"") != std::string::npos);
    CHECK(all.s().find("\"second\"") != std::string::npos);

    Str one;
    CHECK(b2c_coords_json(g.g, 0, 0, &one.p) == B2C_OK);
    CHECK(b2c_coords_json(g.g, 999, 0, &one.p) == B2C_ERR_USAGE);

    // Parsed documents without generated configurations cannot give coords.
    Str text;
    REQUIRE(b2c_graph_to_json(g.g, &text.p) == B2C_OK);
    Graph parsed;
    REQUIRE(b2c_graph_from_json(text.p, &parsed.g) == B2C_OK);
    Str coords;
    b2c_status st = b2c_coords_json(parsed.g, -1, 1, &coords.p);
    CHECK((st == B2C_OK || st == B2C_ERR_USAGE));
}
