#include "riccigap/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "riccigap/rng.hpp"

namespace riccigap {
namespace {

// Materialized graphs are capped; truncated trees in particular outgrow any
// machine long before the parameter ranges do.
constexpr std::int64_t kMaxVertices = 20'000'000;

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError("generate: " + message);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::prism: return "prism";
    case Family::mobius_ladder: return "mobius_ladder";
    case Family::hypercube: return "hypercube";
    case Family::torus2d: return "torus2d";
    case Family::grid2d: return "grid2d";
    case Family::regular_tree_truncation: return "regular_tree_truncation";
    case Family::random_regular: return "random_regular";
    case Family::cayley_abelian: return "cayley_abelian";
  }
  throw InputError("generate: unknown family");
}

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"cycle", Family::cycle},
      {"path", Family::path},
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"star", Family::star},
      {"prism", Family::prism},
      {"mobius_ladder", Family::mobius_ladder},
      {"hypercube", Family::hypercube},
      {"torus2d", Family::torus2d},
      {"grid2d", Family::grid2d},
      {"regular_tree_truncation", Family::regular_tree_truncation},
      {"random_regular", Family::random_regular},
      {"cayley_abelian", Family::cayley_abelian},
  };
  auto it = table.find(name);
  if (it == table.end()) throw InputError("generate: unknown family '" + name + "'");
  return it->second;
}

std::string FamilySpec::label() const {
  std::string out = family_name(family);
  out += "(";
  switch (family) {
    case Family::complete_bipartite:
      out += std::to_string(n) + "," + std::to_string(m);
      break;
    case Family::hypercube:
      out += std::to_string(d);
      break;
    case Family::regular_tree_truncation:
      out += std::to_string(d) + "," + std::to_string(depth);
      break;
    case Family::random_regular:
      out += std::to_string(n) + "," + std::to_string(d) + ",seed=" + std::to_string(seed);
      break;
    case Family::cayley_abelian: {
      out += "Z";
      for (std::size_t i = 0; i < orders.size(); ++i) {
        out += (i ? "xZ" : "") + std::to_string(orders[i]);
      }
      out += ",g=" + std::to_string(generators.size());
      break;
    }
    default:
      out += std::to_string(n);
  }
  out += ")";
  return out;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs both sides >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, std::move(edges));
}

Graph make_star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph make_prism(int n) {
  require(n >= 3, "prism needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph::from_edges(2 * n, std::move(edges));
}

Graph make_mobius_ladder(int n) {
  // 2n-cycle plus the n antipodal rungs; n = 2 degenerates to K_4.
  require(n >= 2, "mobius_ladder needs n >= 2");
  const int size = 2 * n;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + n);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(size, std::move(edges));
}

Graph make_hypercube(int d) {
  require(d >= 1 && d <= 24, "hypercube needs 1 <= d <= 24");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph make_torus2d(int n) {
  require(n >= 3, "torus2d needs n >= 3");
  auto id = [n](int i, int j) { return ((i % n + n) % n) * n + ((j % n + n) % n); };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      edges.emplace_back(id(i, j), id(i + 1, j));
      edges.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n * n, std::move(edges));
}

Graph make_grid2d(int n) {
  require(n >= 1, "grid2d needs n >= 1");
  auto id = [n](int i, int j) { return i * n + j; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i + 1 < n) edges.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < n) edges.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  return Graph::from_edges(n * n, std::move(edges));
}

Graph make_regular_tree_truncation(int d, int depth) {
  require(d >= 3, "regular_tree_truncation needs d >= 3");
  require(depth >= 0, "regular_tree_truncation needs depth >= 0");
  // count = 1 + d ((d-1)^depth - 1)/(d-2), computed with an overflow cap.
  std::int64_t count = 1;
  std::int64_t layer = 1;
  for (int k = 1; k <= depth; ++k) {
    layer = (k == 1) ? d : layer * (d - 1);
    if (layer > kMaxVertices || count + layer > kMaxVertices) {
      throw CapabilityError("generate: regular_tree_truncation exceeds vertex cap " +
                            std::to_string(kMaxVertices));
    }
    count += layer;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(count - 1));
  // Children assigned in BFS order: vertex ids are contiguous per layer.
  std::int64_t next = 1;
  std::int64_t layer_begin = 0, layer_size = 1;
  for (int k = 0; k < depth; ++k) {
    const std::int64_t fanout = (k == 0) ? d : d - 1;
    for (std::int64_t p = layer_begin; p < layer_begin + layer_size; ++p) {
      for (std::int64_t c = 0; c < fanout; ++c) {
        edges.emplace_back(static_cast<int>(p), static_cast<int>(next++));
      }
    }
    layer_begin += layer_size;
    layer_size *= (k == 0) ? d : d - 1;
  }
  return Graph::from_edges(static_cast<int>(count), std::move(edges));
}

Graph make_random_regular(int n, int d, std::uint64_t seed) {
  require(n >= 1 && d >= 1, "random_regular needs n >= 1, d >= 1");
  require(d < n, "random_regular needs d < n");
  require((static_cast<std::int64_t>(n) * d) % 2 == 0, "random_regular needs n*d even");

  const std::int64_t stubs_count = static_cast<std::int64_t>(n) * d;
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SplitMix64 rng(sub_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<int> stubs(static_cast<std::size_t>(stubs_count));
    for (std::int64_t i = 0; i < stubs_count; ++i) stubs[i] = static_cast<int>(i / d);
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      simple = seen.insert({u, v}).second;
    }
    if (!simple) continue;
    std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
    return Graph::from_edges(n, std::move(edges));
  }
  throw CapabilityError("generate: random_regular rejection budget exhausted (" +
                        std::to_string(kAttempts) + " attempts)");
}

Graph make_cayley_abelian(const std::vector<int>& orders,
                          const std::vector<std::vector<int>>& generators) {
  require(!orders.empty(), "cayley_abelian needs at least one cyclic factor");
  std::int64_t n = 1;
  for (int o : orders) {
    require(o >= 1, "cayley_abelian cyclic orders must be >= 1");
    n *= o;
    require(n <= kMaxVertices, "cayley_abelian group too large");
  }
  require(!generators.empty(), "cayley_abelian needs a nonempty generator set");
  const std::size_t rank = orders.size();

  auto normalize = [&](const std::vector<int>& g) {
    std::vector<int> out(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      out[i] = ((g[i] % orders[i]) + orders[i]) % orders[i];
    }
    return out;
  };
  std::set<std::vector<int>> gens;
  for (const auto& g : generators) {
    require(g.size() == rank, "cayley_abelian generator arity mismatch");
    auto norm = normalize(g);
    require(std::any_of(norm.begin(), norm.end(), [](int x) { return x != 0; }),
            "cayley_abelian identity generator forbidden");
    gens.insert(norm);
  }
  for (const auto& g : gens) {
    std::vector<int> neg(rank);
    for (std::size_t i = 0; i < rank; ++i) neg[i] = (orders[i] - g[i]) % orders[i];
    require(gens.count(neg) == 1, "cayley_abelian generator set must be symmetric");
  }

  auto index_of = [&](const std::vector<int>& coords) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < rank; ++i) idx = idx * orders[i] + coords[i];
    return idx;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<int> coords(rank, 0);
  for (std::int64_t v = 0; v < n; ++v) {
    for (const auto& g : gens) {
      std::vector<int> to(rank);
      for (std::size_t i = 0; i < rank; ++i) to[i] = (coords[i] + g[i]) % orders[i];
      const std::int64_t w = index_of(to);
      if (v < w) edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
    }
    for (std::size_t i = rank; i-- > 0;) {
      if (++coords[i] < orders[i]) break;
      coords[i] = 0;
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::cycle: return make_cycle(static_cast<int>(spec.n));
    case Family::path: return make_path(static_cast<int>(spec.n));
    case Family::complete: return make_complete(static_cast<int>(spec.n));
    case Family::complete_bipartite:
      return make_complete_bipartite(static_cast<int>(spec.n), static_cast<int>(spec.m));
    case Family::star: return make_star(static_cast<int>(spec.n));
    case Family::prism: return make_prism(static_cast<int>(spec.n));
    case Family::mobius_ladder: return make_mobius_ladder(static_cast<int>(spec.n));
    case Family::hypercube: return make_hypercube(static_cast<int>(spec.d));
    case Family::torus2d: return make_torus2d(static_cast<int>(spec.n));
    case Family::grid2d: return make_grid2d(static_cast<int>(spec.n));
    case Family::regular_tree_truncation:
      return make_regular_tree_truncation(static_cast<int>(spec.d), static_cast<int>(spec.depth));
    case Family::random_regular:
      require(spec.has_seed, "random_regular requires an explicit seed");
      return make_random_regular(static_cast<int>(spec.n), static_cast<int>(spec.d), spec.seed);
    case Family::cayley_abelian:
      return make_cayley_abelian(spec.orders, spec.generators);
  }
  throw InputError("generate: unknown family");
}

}  // namespace riccigap
