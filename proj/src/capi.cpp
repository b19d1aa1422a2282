#include "b2crystal.h"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "axioms.hpp"
#include "colored_graph.hpp"
#include "coords.hpp"
#include "crystal.hpp"
#include "io.hpp"
#include "sky.hpp"

struct b2c_graph {
    b2c::GraphDocument doc;
    std::optional<b2c::CrystalGraph> crystal;
};

struct b2c_sky {
    b2c::SkyGraph sky;
    std::optional<int> h, a;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::copy(s.begin(), s.end(), out);
    out[s.size()] = '\0';
    return out;
}

// Maps the library's exception taxonomy onto status codes.
template <typename Fn>
b2c_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const b2c::io_error& e) {
        set_error(e.what());
        return B2C_ERR_PARSE;
    } catch (const b2c::precondition_error& e) {
        set_error(e.what());
        return B2C_ERR_USAGE;
    } catch (const b2c::structure_error& e) {
        set_error(e.what());
        return B2C_VIOLATIONS;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return B2C_ERR_USAGE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return B2C_ERR_USAGE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return B2C_ERR_INTERNAL;
    }
}

b2c_status usage(const char* msg) {
    set_error(msg);
    return B2C_ERR_USAGE;
}

}  // namespace

extern "C" {

const char* b2c_version(void) { return "1.0.0"; }

const char* b2c_last_error(void) { return g_last_error.c_str(); }

void b2c_string_free(char* s) { delete[] s; }

b2c_status b2c_generate(int h, int a, b2c_graph** out) {
    if (!out) return usage("null output pointer");
    if (h < 0 || a < 0 || a % 2 != 0) return usage("need h >= 0 and even a >= 0");
    return guarded([&]() {
        auto g = b2c::CrystalGraph::generate(b2c::Bounds::interval(h, a));
        g.decorate();
        auto handle = std::make_unique<b2c_graph>();
        handle->doc = b2c::parse_document_text(b2c::crystal_to_json_text(g));
        handle->crystal = std::move(g);
        *out = handle.release();
        return B2C_OK;
    });
}

b2c_status b2c_graph_from_json(const char* json_text, b2c_graph** out) {
    if (!json_text || !out) return usage("null argument");
    return guarded([&]() {
        auto doc = b2c::parse_document_text(json_text);
        if (doc.kind == "sky") return usage("sky documents need b2c_sky_from_json");
        auto handle = std::make_unique<b2c_graph>();
        handle->doc = std::move(doc);
        *out = handle.release();
        return B2C_OK;
    });
}

b2c_status b2c_graph_to_json(const b2c_graph* g, char** out) {
    if (!g || !out) return usage("null argument");
    return guarded([&]() {
        *out = dup_string(b2c::document_to_json_text(g->doc));
        return B2C_OK;
    });
}

b2c_status b2c_graph_to_dot(const b2c_graph* g, char** out) {
    if (!g || !out) return usage("null argument");
    return guarded([&]() {
        if (!g->crystal) return usage("DOT export needs a generated crystal");
        *out = dup_string(b2c::crystal_to_dot(*g->crystal));
        return B2C_OK;
    });
}

int b2c_graph_vertex_count(const b2c_graph* g) { return g ? g->doc.graph.n : 0; }

int b2c_graph_edge_count(const b2c_graph* g) {
    return g ? static_cast<int>(g->doc.graph.edges.size()) : 0;
}

void b2c_graph_free(b2c_graph* g) { delete g; }

b2c_status b2c_verify(const b2c_graph* g, const char* check, int include_derived,
                      int with_stats, char** report_json) {
    if (!g || !check || !report_json) return usage("null argument");
    return guarded([&]() {
        b2c::AxiomReport rep;
        std::string id(check);
        if (id == "ALL") {
            rep = b2c::check_all(g->doc.graph, include_derived != 0);
        } else {
            b2c::Axiom axiom{};
            b2c::DerivedCheck derived{};
            bool is_axiom = false;
            if (!b2c::parse_check_id(id, axiom, derived, is_axiom))
                return usage(("unknown check id: " + id).c_str());
            rep = is_axiom ? b2c::check_axiom(g->doc.graph, axiom)
                           : b2c::check_derived(g->doc.graph, derived);
        }
        std::optional<b2c::ReportStats> stats;
        if (with_stats) {
            b2c::ReportStats s;
            s.vertex_count = g->doc.graph.n;
            s.edge_count = static_cast<long long>(g->doc.graph.edges.size());
            if (g->doc.h && g->doc.a)
                s.dimension_expected = b2c::expected_dimension(*g->doc.h, *g->doc.a);
            stats = s;
        }
        *report_json = dup_string(b2c::report_to_json_text(rep, stats));
        return rep.passed() ? B2C_OK : B2C_VIOLATIONS;
    });
}

b2c_status b2c_stats_json(const b2c_graph* g, char** out) {
    if (!g || !out) return usage("null argument");
    return guarded([&]() {
        if (!g->crystal) return usage("stats need a generated crystal");
        const b2c::CrystalGraph& c = *g->crystal;
        auto src = c.weight_of(c.source());
        auto snk = c.weight_of(c.sink());
        nlohmann::ordered_json doc;
        doc["vertex_count"] = c.size();
        doc["edge_count"] = c.edge_count();
        doc["fat_count"] = c.fat_vertices().size();
        doc["source_weight"] = {src.w1, src.w2};
        doc["sink_weight"] = {snk.w1, snk.w2};
        doc["dimension_expected"] =
            b2c::expected_dimension(c.bounds().h_cap, c.bounds().a_cap);
        *out = dup_string(doc.dump(2) + "\n");
        return B2C_OK;
    });
}

b2c_status b2c_sky_contract(const b2c_graph* g, b2c_sky** out) {
    if (!g || !out) return usage("null argument");
    return guarded([&]() {
        auto handle = std::make_unique<b2c_sky>();
        handle->sky = b2c::contract(g->doc.graph);
        handle->h = g->doc.h;
        handle->a = g->doc.a;
        *out = handle.release();
        return B2C_OK;
    });
}

b2c_status b2c_sky_reference(int h, int a, b2c_sky** out) {
    if (!out) return usage("null output pointer");
    if (h < 0 || a < 0 || a % 2 != 0) return usage("need h >= 0 and even a >= 0");
    return guarded([&]() {
        auto handle = std::make_unique<b2c_sky>();
        handle->sky = b2c::reference_sky(h, a / 2);
        handle->h = h;
        handle->a = a;
        *out = handle.release();
        return B2C_OK;
    });
}

b2c_status b2c_sky_from_json(const char* json_text, b2c_sky** out) {
    if (!json_text || !out) return usage("null argument");
    return guarded([&]() {
        auto doc = b2c::parse_document_text(json_text);
        if (doc.kind != "sky") return usage("document kind is not sky");
        auto handle = std::make_unique<b2c_sky>();
        handle->sky = std::move(doc.sky);
        handle->h = doc.h;
        handle->a = doc.a;
        *out = handle.release();
        return B2C_OK;
    });
}

b2c_status b2c_sky_to_json(const b2c_sky* s, char** out) {
    if (!s || !out) return usage("null argument");
    return guarded([&]() {
        *out = dup_string(b2c::sky_to_json_text(s->sky, s->h, s->a));
        return B2C_OK;
    });
}

b2c_status b2c_sky_to_dot(const b2c_sky* s, char** out) {
    if (!s || !out) return usage("null argument");
    return guarded([&]() {
        *out = dup_string(b2c::sky_to_dot(s->sky));
        return B2C_OK;
    });
}

int b2c_sky_vertex_count(const b2c_sky* s) {
    return s ? static_cast<int>(s->sky.vertices.size()) : 0;
}

int b2c_sky_param_h(const b2c_sky* s) { return s && s->h ? *s->h : -1; }

int b2c_sky_param_a(const b2c_sky* s) { return s && s->a ? *s->a : -1; }

b2c_status b2c_sky_check(const b2c_sky* s, char** report_json) {
    if (!s || !report_json) return usage("null argument");
    return guarded([&]() {
        auto rep = b2c::check_sky(s->sky);
        *report_json = dup_string(b2c::report_to_json_text(rep, std::nullopt));
        return rep.passed() ? B2C_OK : B2C_VIOLATIONS;
    });
}

b2c_status b2c_sky_iso(const b2c_sky* a, const b2c_sky* b, int* isomorphic) {
    if (!a || !b || !isomorphic) return usage("null argument");
    return guarded([&]() {
        auto res = b2c::sky_iso(a->sky, b->sky);
        *isomorphic = res.isomorphic ? 1 : 0;
        if (!res.isomorphic) set_error(res.reason);
        return B2C_OK;
    });
}

void b2c_sky_free(b2c_sky* s) { delete s; }

b2c_status b2c_coords_json(const b2c_graph* g, int vertex_id, int check, char** out) {
    if (!g || !out) return usage("null argument");
    return guarded([&]() {
        if (!g->crystal) return usage("coordinates need a generated crystal");
        const b2c::CrystalGraph& c = *g->crystal;
        const b2c::Bounds& b = c.bounds();
        if (vertex_id >= c.size()) return usage("unknown vertex id");
        int lo = vertex_id < 0 ? 0 : vertex_id;
        int hi = vertex_id < 0 ? c.size() - 1 : vertex_id;
        const b2c::Config sink = c.config(c.sink());

        nlohmann::ordered_json doc;
        auto rows = nlohmann::ordered_json::array();
        std::vector<std::string> failures;
        b2c::Quad max_first{0, 0, 0, 0};
        const int H = b.free_mode ? 0 : b.h_cap, A = b.free_mode ? 0 : b.a_cap;
        std::vector<char> cov_n(H + 1, 0), cov_m(H + A / 2 + 1, 0), cov_p(A + H + 1, 0),
            cov_q(A / 2 + 1, 0);
        for (int v = lo; v <= hi; ++v) {
            const b2c::Config& f = c.config(v);
            b2c::Quad first = b2c::coords_first(f, b);
            b2c::Quad second = b2c::coords_second(f, b);
            const auto arr = f.as_array();
            rows.push_back({{"id", v},
                            {"config", std::vector<int>(arr.begin(), arr.end())},
                            {"first", {first.n, first.m, first.p, first.q}},
                            {"second", {second.n, second.m, second.p, second.q}}});
            if (!check) continue;
            auto fail = [&](const std::string& what) {
                failures.push_back("vertex " + std::to_string(v) + ": " + what);
            };
            auto r1 = b2c::apply_word(f, b2c::first_word(first), b);
            if (!r1 || !(*r1 == sink)) fail("first word does not reach the sink");
            auto r2 = b2c::apply_word(f, b2c::second_word(second), b);
            if (!r2 || !(*r2 == sink)) fail("second word does not reach the sink");
            if (!b2c::in_cone_c2(first)) fail("first quadruple outside its cone");
            if (!b2c::in_cone_c1(second)) fail("second quadruple outside its cone");
            if (!(b2c::transform_second_to_first(second) == first))
                fail("coordinate transform mismatch");
            if (first.n + first.p != second.n + second.p ||
                first.m + first.q != second.m + second.q)
                fail("sum identities fail");
            max_first.n = std::max(max_first.n, first.n);
            max_first.m = std::max(max_first.m, first.m);
            max_first.p = std::max(max_first.p, first.p);
            max_first.q = std::max(max_first.q, first.q);
            if (first.n <= H) cov_n[first.n] = 1;
            if (first.m <= H + A / 2) cov_m[first.m] = 1;
            if (first.p <= A + H) cov_p[first.p] = 1;
            if (first.q <= A / 2) cov_q[first.q] = 1;
        }
        doc["vertices"] = std::move(rows);
        if (check) {
            if (vertex_id < 0) {
                // n, m, p attain exact maxima H, H+A/2, A+H; every value of
                // each coordinate interval (including q up to A/2) occurs.
                if (max_first.p != A + H || max_first.m != H + A / 2 || max_first.n != H)
                    failures.push_back("attained n/m/p maxima differ from (H, H+A/2, A+H)");
                auto covered = [](const std::vector<char>& v) {
                    for (char x : v)
                        if (!x) return false;
                    return true;
                };
                if (!covered(cov_n) || !covered(cov_m) || !covered(cov_p) || !covered(cov_q))
                    failures.push_back("coordinate intervals not fully covered");
            }
            doc["checks"] = {{"passed", failures.empty()}, {"failures", failures}};
        }
        *out = dup_string(doc.dump(2) + "\n");
        return (check && !failures.empty()) ? B2C_VIOLATIONS : B2C_OK;
    });
}

}  // extern "C"
