#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "riccigap/errors.hpp"

namespace riccigap {

/// Simple undirected graph over dense vertex indices 0..n-1, stored as
/// sorted compressed adjacency. Immutable after construction; every
/// operation in this library is a read and is safe to call concurrently.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Rejects out-of-range endpoints, self-loops and
  /// repeated edges. Edge orientation and order do not matter.
  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(offset_.size()) - 1; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

  int degree(int v) const { return static_cast<int>(offset_[v + 1] - offset_[v]); }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }

  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  void require_vertex(int v, const char* where) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::int64_t> offset_{0};
  std::vector<int> adj_;
};

/// Induced subgraph on the vertices at distance <= radius from a root,
/// re-indexed by BFS discovery order (root first, then layer by layer,
/// ascending original index within a layer).
struct RootedBall {
  Graph subgraph;
  int root = 0;  // always 0 after re-indexing
  int radius = 0;
  std::vector<int> layer_of;         // distance from the root, per local vertex
  std::vector<int> original_vertex;  // local index -> index in the source graph
};

RootedBall ball(const Graph& g, int origin, int radius);

/// BFS shortest-path length; std::nullopt when x and y lie in different
/// components.
std::optional<int> graph_distance(const Graph& g, int x, int y);

/// (1/|V|) * sum over vertices of deg * log(deg), natural log, with the
/// convention 1 * log 1 = 0. Degree-weighted log-degree density; finite
/// uniform bounds on it are the sparsity regime this toolkit probes.
double sparsity_functional(const Graph& g);

}  // namespace riccigap
