// Command-line front end; talks to the library through the C interface only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "b2crystal.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

int exit_code(b2c_status status) {
    switch (status) {
        case B2C_OK: return kExitPass;
        case B2C_VIOLATIONS: return kExitViolations;
        default: return kExitUsage;
    }
}

void print_error(const std::string& context) {
    std::cerr << "error: " << context;
    const char* detail = b2c_last_error();
    if (detail && *detail) std::cerr << ": " << detail;
    std::cerr << "\n";
}

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { b2c_string_free(s); }
};

struct GraphGuard {
    b2c_graph* g = nullptr;
    ~GraphGuard() { b2c_graph_free(g); }
};

struct SkyGuard {
    b2c_sky* s = nullptr;
    ~SkyGuard() { b2c_sky_free(s); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    out.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    return true;
}

bool write_file_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path tmp = fs::path(path);
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return false;
        f << text;
        if (!f.flush()) return false;
    }
    std::error_code ec;
    fs::rename(tmp, fs::path(path), ec);
    if (ec) fs::remove(tmp, ec);
    return !ec;
}

bool check_interval_flags(int h, int a) {
    if (h < 0 || a < 0 || a % 2 != 0) {
        std::cerr << "error: need --H >= 0 and even --A >= 0\n";
        return false;
    }
    return true;
}

int load_graph_file(const std::string& path, GraphGuard& graph) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitUsage;
    }
    b2c_status st = b2c_graph_from_json(text.c_str(), &graph.g);
    if (st != B2C_OK) {
        print_error("cannot parse " + path);
        return kExitUsage;
    }
    return kExitPass;
}

int cmd_generate(int h, int a, const std::string& out_path, const std::string& dot_path) {
    if (!check_interval_flags(h, a)) return kExitUsage;
    GraphGuard graph;
    if (b2c_generate(h, a, &graph.g) != B2C_OK) {
        print_error("generation failed");
        return kExitUsage;
    }
    StringGuard json;
    if (b2c_graph_to_json(graph.g, &json.s) != B2C_OK) {
        print_error("serialization failed");
        return kExitUsage;
    }
    if (!write_file_atomic(out_path, json.s)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    if (!dot_path.empty()) {
        StringGuard dot;
        if (b2c_graph_to_dot(graph.g, &dot.s) != B2C_OK || !write_file_atomic(dot_path, dot.s)) {
            print_error("cannot write DOT file " + dot_path);
            return kExitUsage;
        }
    }
    return kExitPass;
}

int cmd_verify(const std::string& in_path, const std::string& axiom, bool derived) {
    GraphGuard graph;
    if (int rc = load_graph_file(in_path, graph); rc != kExitPass) return rc;
    StringGuard report;
    b2c_status st = b2c_verify(graph.g, axiom.c_str(), derived ? 1 : 0, 1, &report.s);
    if (report.s) std::cout << report.s;
    if (st != B2C_OK && st != B2C_VIOLATIONS) print_error("verification failed");
    return exit_code(st);
}

int cmd_sky(const std::string& in_path, int h, int a, bool have_interval,
            const std::string& out_path, const std::string& dot_path, bool check) {
    GraphGuard graph;
    if (!in_path.empty()) {
        if (int rc = load_graph_file(in_path, graph); rc != kExitPass) return rc;
    } else {
        if (!have_interval) {
            std::cerr << "error: need --in or both --H and --A\n";
            return kExitUsage;
        }
        if (!check_interval_flags(h, a)) return kExitUsage;
        if (b2c_generate(h, a, &graph.g) != B2C_OK) {
            print_error("generation failed");
            return kExitUsage;
        }
    }

    SkyGuard sky;
    b2c_status st = b2c_sky_contract(graph.g, &sky.s);
    if (st != B2C_OK) {
        print_error("contraction failed");
        return exit_code(st);
    }
    if (!out_path.empty()) {
        StringGuard json;
        if (b2c_sky_to_json(sky.s, &json.s) != B2C_OK || !write_file_atomic(out_path, json.s)) {
            print_error("cannot write " + out_path);
            return kExitUsage;
        }
    }
    if (!dot_path.empty()) {
        StringGuard dot;
        if (b2c_sky_to_dot(sky.s, &dot.s) != B2C_OK || !write_file_atomic(dot_path, dot.s)) {
            print_error("cannot write DOT file " + dot_path);
            return kExitUsage;
        }
    }
    if (check) {
        StringGuard report;
        b2c_status chk = b2c_sky_check(sky.s, &report.s);
        if (report.s) std::cout << report.s;
        if (chk != B2C_OK) return exit_code(chk);
        // Compare against the glued-sail reference; interval parameters come
        // from the flags or from the document metadata.
        int rh = have_interval ? h : b2c_sky_param_h(sky.s);
        int ra = have_interval ? a : b2c_sky_param_a(sky.s);
        if (rh < 0 || ra < 0) {
            std::cerr << "error: --check needs interval parameters (--H/--A or metadata)\n";
            return kExitUsage;
        }
        SkyGuard ref;
        if (b2c_sky_reference(rh, ra, &ref.s) != B2C_OK) {
            print_error("cannot build reference");
            return kExitUsage;
        }
        int iso = 0;
        if (b2c_sky_iso(sky.s, ref.s, &iso) != B2C_OK) {
            print_error("isomorphism check failed");
            return kExitUsage;
        }
        if (!iso) {
            print_error("contracted graph differs from the glued sails");
            return kExitViolations;
        }
    }
    return kExitPass;
}

int cmd_coords(int h, int a, bool all, int vertex, bool check) {
    if (!check_interval_flags(h, a)) return kExitUsage;
    GraphGuard graph;
    if (b2c_generate(h, a, &graph.g) != B2C_OK) {
        print_error("generation failed");
        return kExitUsage;
    }
    StringGuard json;
    b2c_status st = b2c_coords_json(graph.g, all ? -1 : vertex, check ? 1 : 0, &json.s);
    if (json.s) std::cout << json.s;
    if (st != B2C_OK && st != B2C_VIOLATIONS) print_error("coordinate computation failed");
    return exit_code(st);
}

int cmd_stats(int h, int a) {
    if (!check_interval_flags(h, a)) return kExitUsage;
    GraphGuard graph;
    if (b2c_generate(h, a, &graph.g) != B2C_OK) {
        print_error("generation failed");
        return kExitUsage;
    }
    StringGuard json;
    if (b2c_stats_json(graph.g, &json.s) != B2C_OK) {
        print_error("stats failed");
        return kExitUsage;
    }
    std::cout << json.s;
    return kExitPass;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
    SkyGuard sa, sb;
    for (auto [path, guard] : {std::pair{&a_path, &sa}, std::pair{&b_path, &sb}}) {
        std::string text;
        if (!read_file(*path, text)) {
            std::cerr << "error: cannot read " << *path << "\n";
            return kExitUsage;
        }
        if (b2c_sky_from_json(text.c_str(), &guard->s) != B2C_OK) {
            print_error("cannot parse " + *path);
            return kExitUsage;
        }
    }
    int iso = 0;
    if (b2c_sky_iso(sa.s, sb.s, &iso) != B2C_OK) {
        print_error("isomorphism check failed");
        return kExitUsage;
    }
    std::cout << (iso ? "isomorphic\n" : "not isomorphic\n");
    return iso ? kExitPass : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"B2 crystal graphs: generation, verification, sky view, coordinates"};
    app.require_subcommand(1);

    int h = 0, a = 0, vertex = 0;
    bool derived = false, check = false, all = false;
    std::string in_path, out_path, dot_path, axiom = "ALL", a_path, b_path;

    auto* gen = app.add_subcommand("generate", "Generate a decorated interval crystal");
    gen->add_option("--H", h)->required();
    gen->add_option("--A", a)->required();
    gen->add_option("--out", out_path)->required();
    gen->add_option("--dot", dot_path);

    auto* ver = app.add_subcommand("verify", "Check a graph document against the axioms");
    ver->add_option("--in", in_path)->required();
    ver->add_option("--axiom", axiom);
    ver->add_flag("--derived", derived);

    auto* sky = app.add_subcommand("sky", "Contract a crystal to its sky view");
    sky->add_option("--in", in_path);
    auto* sky_h = sky->add_option("--H", h);
    auto* sky_a = sky->add_option("--A", a);
    sky->add_option("--out", out_path);
    sky->add_option("--dot", dot_path);
    sky->add_flag("--check", check);

    auto* coords = app.add_subcommand("coords", "Canonical coordinates per vertex");
    coords->add_option("--H", h)->required();
    coords->add_option("--A", a)->required();
    coords->add_flag("--all", all);
    coords->add_option("--vertex", vertex);
    coords->add_flag("--check", check);

    auto* stats = app.add_subcommand("stats", "Counts, weights and expected dimension");
    stats->add_option("--H", h)->required();
    stats->add_option("--A", a)->required();

    auto* iso = app.add_subcommand("iso", "Compare two sky documents");
    iso->add_option("--a", a_path)->required();
    iso->add_option("--b", b_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) return cmd_generate(h, a, out_path, dot_path);
    if (ver->parsed()) return cmd_verify(in_path, axiom, derived);
    if (sky->parsed()) {
        bool have_interval = sky_h->count() > 0 && sky_a->count() > 0;
        return cmd_sky(in_path, h, a, have_interval, out_path, dot_path, check);
    }
    if (coords->parsed()) {
        if (!all && coords->get_option("--vertex")->count() == 0) {
            std::cerr << "error: need --all or --vertex\n";
            return kExitUsage;
        }
        return cmd_coords(h, a, all, vertex, check);
    }
    if (stats->parsed()) return cmd_stats(h, a);
    if (iso->parsed()) return cmd_iso(a_path, b_path);
    return kExitUsage;
}
