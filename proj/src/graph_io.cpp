#include "riccigap/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace riccigap {

using nlohmann::json;

Graph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("graph json: parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InputError("graph json: expected object with \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) throw InputError("graph json: \"n\" must be an integer");
  const std::int64_t n = doc["n"].get<std::int64_t>();
  if (n < 0 || n > 50'000'000) throw InputError("graph json: vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError("graph json: each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
  std::ostringstream out;
  out << "{\"n\": " << g.vertex_count() << ", \"edges\": [";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out << ", ";
    out << "[" << u << ", " << v << "]";
    first = false;
  }
  out << "]}\n";
  return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw InputError("edge list: expected exactly two tokens per line, got '" + line + "'");
    }
    raw.emplace_back(a, b);
  }

  auto is_index = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
  };
  const bool numeric =
      std::all_of(raw.begin(), raw.end(), [&](const auto& p) {
        return is_index(p.first) && is_index(p.second);
      });

  std::vector<std::pair<int, int>> edges;
  int n = 0;
  if (numeric) {
    for (const auto& [a, b] : raw) {
      const int u = std::stoi(a), v = std::stoi(b);
      edges.emplace_back(u, v);
      n = std::max({n, u + 1, v + 1});
    }
  } else {
    // Deterministic name mapping: sorted unique names get indices 0,1,...
    std::map<std::string, int> names;
    for (const auto& [a, b] : raw) {
      names.emplace(a, 0);
      names.emplace(b, 0);
    }
    int next = 0;
    for (auto& [name, index] : names) index = next++;
    for (const auto& [a, b] : raw) edges.emplace_back(names[a], names[b]);
    n = next;
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw InputError("graph input: empty file");
  return text[start] == '{' ? graph_from_json(text) : graph_from_edge_list(text);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void save_graph(const Graph& g, const std::string& path) {
  write_file(path, graph_to_json(g));
}

FamilySpec family_spec_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("family")) {
    throw InputError("family spec: expected object with \"family\"");
  }
  FamilySpec spec;
  spec.family = family_from_name(doc["family"].get<std::string>());
  if (doc.contains("n")) spec.n = doc["n"].get<std::int64_t>();
  if (doc.contains("m")) spec.m = doc["m"].get<std::int64_t>();
  if (doc.contains("d")) spec.d = doc["d"].get<std::int64_t>();
  if (doc.contains("depth")) spec.depth = doc["depth"].get<std::int64_t>();
  if (doc.contains("orders")) spec.orders = doc["orders"].get<std::vector<int>>();
  if (doc.contains("generators")) {
    spec.generators = doc["generators"].get<std::vector<std::vector<int>>>();
  }
  if (doc.contains("seed")) {
    spec.seed = doc["seed"].get<std::uint64_t>();
    spec.has_seed = true;
  }
  return spec;
}

FamilySpec family_spec_from_json_text(const std::string& text) {
  try {
    return family_spec_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError(std::string("family spec: parse failure: ") + e.what());
  }
}

std::vector<FamilySpec> family_specs_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("family manifest: parse failure: ") + e.what());
  }
  const json& list = doc.is_object() && doc.contains("families") ? doc["families"] : doc;
  if (!list.is_array()) {
    throw InputError("family manifest: expected an array or {\"families\": [...]}");
  }
  std::vector<FamilySpec> specs;
  for (const auto& item : list) specs.push_back(family_spec_from_json(item));
  return specs;
}

std::vector<FamilySpec> family_specs_from_json_file(const std::string& path) {
  return family_specs_from_json_text(read_file(path));
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace riccigap
