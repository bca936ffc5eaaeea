#include "riccigap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace riccigap {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0) throw InputError("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InputError("graph: edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(vertex_count));
    }
    if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("graph: repeated edge");
  }

  Graph g;
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offset_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (int v = 0; v < vertex_count; ++v) g.offset_[v + 1] = g.offset_[v] + deg[v];
  g.adj_.resize(static_cast<std::size_t>(g.offset_.back()));
  std::vector<std::int64_t> cursor(g.offset_.begin(), g.offset_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[static_cast<std::size_t>(cursor[u]++)] = v;
    g.adj_[static_cast<std::size_t>(cursor[v]++)] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto nb = g.neighbors(v);
    if (!std::is_sorted(nb.begin(), nb.end())) {
      std::sort(g.adj_.begin() + g.offset_[v], g.adj_.begin() + g.offset_[v + 1]);
    }
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::require_vertex(int v, const char* where) const {
  if (!has_vertex(v)) {
    throw InputError(std::string(where) + ": vertex index " + std::to_string(v) +
                     " out of range [0," + std::to_string(vertex_count()) + ")");
  }
}

RootedBall ball(const Graph& g, int origin, int radius) {
  g.require_vertex(origin, "ball");
  if (radius < 0) throw InputError("ball: negative radius");

  RootedBall b;
  b.radius = radius;
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> order;
  dist[origin] = 0;
  order.push_back(origin);
  // Sorted adjacency makes BFS discovery order (layer, then index) canonical.
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    if (dist[u] == radius) break;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
    }
  }

  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : g.neighbors(order[i])) {
      const int lw = local[w];
      if (lw >= 0 && static_cast<int>(i) < lw) edges.emplace_back(static_cast<int>(i), lw);
    }
  }
  b.subgraph = Graph::from_edges(static_cast<int>(order.size()), std::move(edges));
  b.root = 0;
  b.layer_of.reserve(order.size());
  for (int v : order) b.layer_of.push_back(dist[v]);
  b.original_vertex = std::move(order);
  return b;
}

std::optional<int> graph_distance(const Graph& g, int x, int y) {
  g.require_vertex(x, "graph_distance");
  g.require_vertex(y, "graph_distance");
  if (x == y) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  dist[x] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        if (w == y) return dist[w];
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

double sparsity_functional(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("sparsity_functional: empty graph");
  // Grouped by distinct degree so regular graphs give exactly n * (d log d).
  std::vector<std::int64_t> count(static_cast<std::size_t>(g.max_degree()) + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++count[g.degree(v)];
  double sum = 0.0;
  for (std::size_t d = 2; d < count.size(); ++d) {
    if (count[d] > 0) {
      sum += static_cast<double>(count[d]) *
             (static_cast<double>(d) * std::log(static_cast<double>(d)));
    }
  }
  return sum / g.vertex_count();
}

}  // namespace riccigap
