#include "io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

namespace b2c {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* color_name(int color) {
    switch (color) {
        case kRed: return "red";
        case kGreen: return "green";
        case kBlue: return "blue";
    }
    return "?";
}

int color_from_name(const std::string& name) {
    if (name == "red") return kRed;
    if (name == "green") return kGreen;
    if (name == "blue") return kBlue;
    throw io_error("unknown edge color: " + name);
}

std::string label_text(int halves) {
    switch (halves) {
        case 0: return "0";
        case 1: return "1/2";
        case 2: return "1";
    }
    return "";
}

ordered_json edges_to_json(const std::vector<GEdge>& edges) {
    ordered_json out = ordered_json::array();
    for (const GEdge& e : edges) {
        ordered_json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["color"] = color_name(e.color);
        if (e.label_halves >= 0) je["label_halves"] = e.label_halves;
        out.push_back(std::move(je));
    }
    return out;
}

}  // namespace

std::string crystal_to_json_text(const CrystalGraph& g) {
    ordered_json doc;
    doc["meta"] = {{"kind", "crystal"}, {"h", g.bounds().h_cap}, {"a", g.bounds().a_cap}};
    ordered_json verts = ordered_json::array();
    for (int v = 0; v < g.size(); ++v) {
        const auto arr = g.config(v).as_array();
        verts.push_back({{"id", v}, {"config", std::vector<int>(arr.begin(), arr.end())}});
    }
    doc["vertices"] = std::move(verts);
    doc["edges"] = edges_to_json(to_colored(g, g.decorated()).edges);
    return doc.dump(2) + "\n";
}

std::string sky_to_json_text(const SkyGraph& s, std::optional<int> h, std::optional<int> a) {
    ordered_json doc;
    doc["meta"] = ordered_json{{"kind", "sky"}};
    if (h) doc["meta"]["h"] = *h;
    if (a) doc["meta"]["a"] = *a;
    ordered_json verts = ordered_json::array();
    for (size_t v = 0; v < s.vertices.size(); ++v)
        verts.push_back({{"id", static_cast<int>(v)},
                         {"xy", std::vector<int>{s.vertices[v].x, s.vertices[v].y}}});
    doc["vertices"] = std::move(verts);
    doc["edges"] = edges_to_json(s.edges);
    return doc.dump(2) + "\n";
}

GraphDocument parse_document_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw io_error(std::string("invalid JSON: ") + e.what());
    }
    GraphDocument out;
    try {
        out.kind = doc.at("meta").at("kind").get<std::string>();
        if (out.kind != "crystal" && out.kind != "sky" && out.kind != "generic")
            throw io_error("unknown document kind: " + out.kind);
        if (doc["meta"].contains("h")) out.h = doc["meta"]["h"].get<int>();
        if (doc["meta"].contains("a")) out.a = doc["meta"]["a"].get<int>();

        std::map<long long, int> index;
        std::vector<std::vector<int>> xys;
        bool any_config = false;
        for (const auto& jv : doc.at("vertices")) {
            long long id = jv.at("id").get<long long>();
            if (!index.emplace(id, static_cast<int>(index.size())).second)
                throw io_error("duplicate vertex id " + std::to_string(id));
            if (jv.contains("config")) {
                auto arr = jv["config"].get<std::vector<int>>();
                if (arr.size() != 7) throw io_error("config must have 7 entries");
                out.configs.push_back(
                    Config{arr[0], arr[1], arr[2], arr[3], arr[4], arr[5], arr[6]});
                any_config = true;
            } else {
                out.configs.push_back(Config{});
            }
            if (jv.contains("xy")) {
                auto xy = jv["xy"].get<std::vector<int>>();
                if (xy.size() != 2) throw io_error("xy must have 2 entries");
                xys.push_back(xy);
            } else {
                xys.push_back({0, 0});
            }
            out.graph.names.push_back(std::to_string(id));
        }
        if (!any_config) out.configs.clear();
        out.graph.n = static_cast<int>(index.size());

        for (const auto& je : doc.at("edges")) {
            GEdge e;
            auto src = index.find(je.at("src").get<long long>());
            auto dst = index.find(je.at("dst").get<long long>());
            if (src == index.end() || dst == index.end())
                throw io_error("edge endpoint does not resolve");
            e.src = src->second;
            e.dst = dst->second;
            e.color = color_from_name(je.at("color").get<std::string>());
            if (je.contains("label_halves")) {
                e.label_halves = je["label_halves"].get<int>();
                if (e.label_halves < 0 || e.label_halves > 2)
                    throw io_error("label_halves outside 0..2");
            }
            bool legal = out.kind == "sky" ? (e.color == kGreen || e.color == kBlue)
                                           : (e.color == kRed || e.color == kGreen);
            if (!legal)
                throw io_error(std::string("color ") + color_name(e.color) +
                               " is illegal for kind " + out.kind);
            out.graph.edges.push_back(e);
        }
        if (out.kind == "sky") {
            for (const auto& xy : xys) out.sky.vertices.push_back(SkyVertex{xy[0], xy[1]});
            out.sky.edges = out.graph.edges;
        }
    } catch (const io_error&) {
        throw;
    } catch (const std::exception& e) {
        throw io_error(std::string("malformed document: ") + e.what());
    }
    return out;
}

std::string document_to_json_text(const GraphDocument& doc) {
    ordered_json out;
    out["meta"] = ordered_json{{"kind", doc.kind}};
    if (doc.h) out["meta"]["h"] = *doc.h;
    if (doc.a) out["meta"]["a"] = *doc.a;
    ordered_json verts = ordered_json::array();
    auto id_of = [&doc](int v) -> long long {
        if (v < static_cast<int>(doc.graph.names.size()) && !doc.graph.names[v].empty())
            return std::stoll(doc.graph.names[v]);
        return v;
    };
    for (int v = 0; v < doc.graph.n; ++v) {
        ordered_json jv;
        jv["id"] = id_of(v);
        if (!doc.configs.empty()) {
            const auto arr = doc.configs[v].as_array();
            jv["config"] = std::vector<int>(arr.begin(), arr.end());
        }
        if (doc.kind == "sky")
            jv["xy"] = std::vector<int>{doc.sky.vertices[v].x, doc.sky.vertices[v].y};
        verts.push_back(std::move(jv));
    }
    out["vertices"] = std::move(verts);
    ordered_json edges = ordered_json::array();
    for (const GEdge& e : doc.graph.edges) {
        ordered_json je;
        je["src"] = id_of(e.src);
        je["dst"] = id_of(e.dst);
        je["color"] = color_name(e.color);
        if (e.label_halves >= 0) je["label_halves"] = e.label_halves;
        edges.push_back(std::move(je));
    }
    out["edges"] = std::move(edges);
    return out.dump(2) + "\n";
}

std::string report_to_json_text(const AxiomReport& rep, const std::optional<ReportStats>& stats) {
    ordered_json doc;
    doc["passed"] = rep.passed();
    ordered_json viols = ordered_json::array();
    for (const Violation& v : rep.violations)
        viols.push_back({{"axiom", v.axiom}, {"location", v.location}, {"message", v.message}});
    doc["violations"] = std::move(viols);
    if (!rep.warnings.empty()) {
        ordered_json warns = ordered_json::array();
        for (const Violation& v : rep.warnings)
            warns.push_back({{"axiom", v.axiom}, {"location", v.location}, {"message", v.message}});
        doc["warnings"] = std::move(warns);
    }
    if (stats)
        doc["stats"] = {{"vertex_count", stats->vertex_count},
                        {"edge_count", stats->edge_count},
                        {"dimension_expected", stats->dimension_expected}};
    return doc.dump(2) + "\n";
}

namespace {

const char* dot_color(int color) {
    switch (color) {
        case kRed: return "red";
        case kGreen: return "green";
        case kBlue: return "blue";
    }
    return "black";
}

}  // namespace

std::string crystal_to_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n  rankdir=TB;\n";
    for (int v = 0; v < g.size(); ++v)
        out += "  n" + std::to_string(v) + " [label=\"" + g.config(v).to_string() + "\"];\n";
    ColoredGraph cg = to_colored(g, g.decorated());
    for (const GEdge& e : cg.edges) {
        out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [color=" +
               dot_color(e.color);
        if (e.label_halves >= 0) out += ", label=\"" + label_text(e.label_halves) + "\"";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

std::string sky_to_dot(const SkyGraph& s) {
    std::string out = "digraph sky {\n  rankdir=TB;\n";
    for (size_t v = 0; v < s.vertices.size(); ++v)
        out += "  n" + std::to_string(v) + " [label=\"(" + std::to_string(s.vertices[v].x) +
               "," + std::to_string(s.vertices[v].y) + ")\"];\n";
    for (const GEdge& e : s.edges) {
        out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [color=" +
               dot_color(e.color);
        if (e.label_halves >= 0) out += ", label=\"" + label_text(e.label_halves) + "\"";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

void atomic_write_file(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw io_error("cannot open " + tmp.string() + " for writing");
        f << text;
        if (!f.flush()) throw io_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw io_error("cannot move temporary file onto " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace b2c
