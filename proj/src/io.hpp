#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "axioms.hpp"
#include "colored_graph.hpp"
#include "sky.hpp"

namespace b2c {

// Bad document syntax, unknown kinds, unresolved ids, illegal colors.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parsed graph document. Crystal and generic documents fill `graph`
// (red/green edges, optional per-vertex configurations); sky documents
// fill `sky`.
struct GraphDocument {
    std::string kind;  // "crystal", "sky" or "generic"
    std::optional<int> h, a;
    ColoredGraph graph;
    std::vector<Config> configs;  // parallel to graph vertices when nonempty
    SkyGraph sky;
};

std::string crystal_to_json_text(const CrystalGraph& g);
std::string sky_to_json_text(const SkyGraph& s, std::optional<int> h, std::optional<int> a);
GraphDocument parse_document_text(const std::string& text);
// Re-serializes a parsed document, preserving the original vertex ids.
std::string document_to_json_text(const GraphDocument& doc);

struct ReportStats {
    long long vertex_count = 0;
    long long edge_count = 0;
    long long dimension_expected = 0;
};
std::string report_to_json_text(const AxiomReport& rep, const std::optional<ReportStats>& stats);

std::string crystal_to_dot(const CrystalGraph& g);
std::string sky_to_dot(const SkyGraph& s);

// Writes via a sibling temporary file and renames over the target.
void atomic_write_file(const std::string& path, const std::string& text);

std::string read_file(const std::string& path);

}  // namespace b2c
