#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "riccigap/generators.hpp"
#include "riccigap/graph.hpp"

namespace riccigap {

/// Graph JSON: {"n": <int>, "edges": [[u,v], ...]} with 0-based indices.
/// Written with u < v and edges sorted lexicographically; byte-stable.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

/// Edge-list text: one "u v" pair per line; blank lines and lines starting
/// with '#' are skipped. All-integer tokens are used as indices directly
/// (n = max index + 1); otherwise tokens are treated as names and mapped to
/// indices in sorted name order.
Graph graph_from_edge_list(const std::string& text);

/// Loads either format, deciding by the first non-space byte ('{' = JSON).
Graph load_graph(const std::string& path);
Graph parse_graph(const std::string& text);

void save_graph(const Graph& g, const std::string& path);

/// FamilySpec JSON, e.g. {"family":"random_regular","n":100,"d":3,"seed":7}
/// or {"family":"cayley_abelian","orders":[5,5],"generators":[[1,0],[4,0],[0,1],[0,4]]}.
FamilySpec family_spec_from_json_text(const std::string& text);
std::vector<FamilySpec> family_specs_from_json_text(const std::string& text);
std::vector<FamilySpec> family_specs_from_json_file(const std::string& path);

/// FNV-1a 64-bit content hash, rendered as 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace riccigap
