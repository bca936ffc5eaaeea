#include "riccigap/transport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace riccigap {
namespace {

using std::int64_t;

/// Min-cost flow by successive shortest paths with node potentials.
/// Arc costs must be non-negative; the instances here are tiny bipartite
/// transportation problems, so Dijkstra is a plain linear scan.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : head_(nodes, -1), nodes_(nodes) {}

  void add_arc(int from, int to, int64_t capacity, int64_t cost) {
    arcs_.push_back({to, head_[from], capacity, cost});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, -cost});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  /// Sends `amount` units from source to sink; returns total cost.
  /// Throws InvariantError if the network cannot carry the flow.
  int64_t solve(int source, int sink, int64_t amount) {
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
    std::vector<int64_t> potential(nodes_, 0);
    std::vector<int64_t> dist(nodes_);
    std::vector<int> parent_arc(nodes_);
    std::vector<char> done(nodes_);
    int64_t total_cost = 0;

    while (amount > 0) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(done.begin(), done.end(), 0);
      dist[source] = 0;
      for (;;) {
        int u = -1;
        for (int v = 0; v < nodes_; ++v) {
          if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
        }
        if (u < 0) break;
        done[u] = 1;
        for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.capacity <= 0) continue;
          const int64_t nd = dist[u] + arc.cost + potential[u] - potential[arc.to];
          if (nd < dist[arc.to]) {
            dist[arc.to] = nd;
            parent_arc[arc.to] = a;
          }
        }
      }
      if (dist[sink] >= kInf) {
        throw InvariantError("min_cost_flow: demand exceeds network capacity");
      }
      for (int v = 0; v < nodes_; ++v) {
        if (dist[v] < kInf) potential[v] += dist[v];
      }
      int64_t push = amount;
      for (int v = sink; v != source;) {
        const Arc& arc = arcs_[parent_arc[v]];
        push = std::min(push, arc.capacity);
        v = arcs_[parent_arc[v] ^ 1].to;
      }
      for (int v = sink; v != source;) {
        Arc& arc = arcs_[parent_arc[v]];
        arc.capacity -= push;
        arcs_[parent_arc[v] ^ 1].capacity += push;
        total_cost += push * arc.cost;
        v = arcs_[parent_arc[v] ^ 1].to;
      }
      amount -= push;
    }
    return total_cost;
  }

  /// Flow currently on the k-th forward arc (arcs are added in pairs).
  int64_t flow_on(int k) const { return arcs_[2 * k + 1].capacity; }

 private:
  struct Arc {
    int to;
    int next;
    int64_t capacity;
    int64_t cost;
  };
  std::vector<Arc> arcs_;
  std::vector<int> head_;
  int nodes_;
};

/// BFS distances from `from` to every vertex listed in `targets`; stops as
/// soon as all targets are found. Throws MetricInfiniteError otherwise.
std::vector<int> distances_to(const Graph& g, int from, const std::vector<int>& targets) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  dist[from] = 0;
  queue.push_back(from);
  std::size_t remaining = 0;
  std::vector<char> wanted(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int t : targets) {
    if (!wanted[t]) {
      wanted[t] = 1;
      ++remaining;
    }
  }
  if (wanted[from]) --remaining;
  for (std::size_t head = 0; head < queue.size() && remaining > 0; ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        if (wanted[w]) --remaining;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> out;
  out.reserve(targets.size());
  for (int t : targets) {
    if (dist[t] < 0) {
      throw MetricInfiniteError("wasserstein1: supports lie in different components");
    }
    out.push_back(dist[t]);
  }
  return out;
}

struct ScaledProblem {
  int64_t scale = 1;  // common denominator of both distributions
  std::vector<int64_t> supply;
  std::vector<int64_t> demand;
  std::vector<std::vector<int>> dist;  // dist[i][j] between supports
};

ScaledProblem scale_masses(const Graph& g, const VertexDistribution& mu,
                           const VertexDistribution& nu) {
  ScaledProblem p;
  BigInt lcm = 1;
  for (const auto& [v, q] : mu.support) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  for (const auto& [v, q] : nu.support) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  if (lcm > (std::int64_t{1} << 31)) {
    throw CapabilityError("wasserstein1: mass denominators exceed the integer scaling range");
  }
  p.scale = lcm.convert_to<int64_t>();
  for (const auto& [v, q] : mu.support) {
    p.supply.push_back((numerator(q) * (lcm / denominator(q))).convert_to<int64_t>());
  }
  for (const auto& [v, q] : nu.support) {
    p.demand.push_back((numerator(q) * (lcm / denominator(q))).convert_to<int64_t>());
  }
  std::vector<int> targets;
  targets.reserve(nu.support.size());
  for (const auto& [v, q] : nu.support) targets.push_back(v);
  p.dist.reserve(mu.support.size());
  for (const auto& [u, q] : mu.support) p.dist.push_back(distances_to(g, u, targets));
  return p;
}

}  // namespace

void VertexDistribution::validate(const Graph& g) const {
  Rational total = 0;
  int prev = -1;
  for (const auto& [v, mass] : support) {
    g.require_vertex(v, "vertex_distribution");
    if (v <= prev) throw InputError("vertex_distribution: support not sorted/distinct");
    if (mass <= 0) throw InputError("vertex_distribution: non-positive mass");
    total += mass;
    prev = v;
  }
  if (total != 1) throw InputError("vertex_distribution: total mass != 1");
}

Rational VertexDistribution::mass_at(int v) const {
  for (const auto& [u, mass] : support) {
    if (u == v) return mass;
  }
  return 0;
}

VertexDistribution lazy_kernel_row(const Graph& g, int x) {
  return alpha_idle_row(g, x, Rational(1, 2));
}

VertexDistribution alpha_idle_row(const Graph& g, int x, const Rational& alpha) {
  g.require_vertex(x, "kernel_row");
  if (alpha < 0 || alpha >= 1) throw InputError("kernel_row: alpha must lie in [0,1)");
  const int deg = g.degree(x);
  if (deg == 0) {
    throw InputError("kernel_row: isolated vertex " + std::to_string(x) +
                     " has no walk distribution");
  }
  VertexDistribution row;
  const Rational neighbor_mass = (1 - alpha) / deg;
  bool placed_self = false;
  for (int w : g.neighbors(x)) {
    if (!placed_self && x < w) {
      if (alpha > 0) row.support.emplace_back(x, alpha);
      placed_self = true;
    }
    row.support.emplace_back(w, neighbor_mass);
  }
  if (!placed_self && alpha > 0) row.support.emplace_back(x, alpha);
  return row;
}

Rational wasserstein1(const Graph& g, const VertexDistribution& mu,
                      const VertexDistribution& nu) {
  mu.validate(g);
  nu.validate(g);
  const ScaledProblem p = scale_masses(g, mu, nu);
  const int ns = static_cast<int>(p.supply.size());
  const int nd = static_cast<int>(p.demand.size());
  MinCostFlow net(ns + nd + 2);
  const int source = ns + nd;
  const int sink = source + 1;
  for (int i = 0; i < ns; ++i) net.add_arc(source, i, p.supply[i], 0);
  for (int j = 0; j < nd; ++j) net.add_arc(ns + j, sink, p.demand[j], 0);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nd; ++j) net.add_arc(i, ns + j, p.scale, p.dist[i][j]);
  }
  const int64_t cost = net.solve(source, sink, p.scale);
  return Rational(cost, p.scale);
}

TransportPlan good_optimal_coupling(const Graph& g, int x, int y) {
  g.require_vertex(x, "good_optimal_coupling");
  g.require_vertex(y, "good_optimal_coupling");
  if (x == y) throw InputError("good_optimal_coupling: endpoints must differ");
  const auto base = graph_distance(g, x, y);
  if (!base) {
    throw MetricInfiniteError("good_optimal_coupling: endpoints in different components");
  }
  const int base_distance = *base;

  const VertexDistribution mu = lazy_kernel_row(g, x);
  const VertexDistribution nu = lazy_kernel_row(g, y);
  const ScaledProblem p = scale_masses(g, mu, nu);
  const int ns = static_cast<int>(p.supply.size());
  const int nd = static_cast<int>(p.demand.size());

  // Lexicographic objective: scaled_cost * M - (units on Gamma), shifted by
  // +1 per unit to keep arc costs non-negative. M = scale + 1 > any possible
  // Gamma total, so cost strictly dominates.
  if (p.scale > (std::int64_t{1} << 20)) {
    throw CapabilityError("good_optimal_coupling: scale too large for lexicographic costs");
  }
  const int64_t M = p.scale + 1;
  const int source = ns + nd;
  const int sink = source + 1;

  auto solve_phase = [&](bool lexicographic) {
    MinCostFlow net(ns + nd + 2);
    for (int i = 0; i < ns; ++i) net.add_arc(source, i, p.supply[i], 0);
    for (int j = 0; j < nd; ++j) net.add_arc(ns + j, sink, p.demand[j], 0);
    for (int i = 0; i < ns; ++i) {
      for (int j = 0; j < nd; ++j) {
        const bool in_gamma = p.dist[i][j] < base_distance;
        const int64_t cost = lexicographic
                                 ? p.dist[i][j] * M + (in_gamma ? 0 : 1)
                                 : p.dist[i][j];
        net.add_arc(i, ns + j, p.scale, cost);
      }
    }
    const int64_t total = net.solve(source, sink, p.scale);
    return std::make_pair(total, std::move(net));
  };

  const int64_t plain_cost = solve_phase(false).first;
  auto [shifted_cost, net] = solve_phase(true);
  // shifted = cost*M + (scale - gamma_units)
  const int64_t gamma_units = p.scale - (shifted_cost - plain_cost * M);
  if (gamma_units < 0 || gamma_units > p.scale) {
    throw InvariantError("good_optimal_coupling: lexicographic decomposition out of range");
  }

  TransportPlan plan;
  int arc_index = ns + nd;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nd; ++j, ++arc_index) {
      const int64_t flow = net.flow_on(arc_index);
      if (flow > 0) {
        plan.entries.emplace_back(mu.support[i].first, nu.support[j].first,
                                  Rational(flow, p.scale));
      }
    }
  }
  std::sort(plan.entries.begin(), plan.entries.end(),
            [](const auto& a, const auto& b) {
              return std::pair(std::get<0>(a), std::get<1>(a)) <
                     std::pair(std::get<0>(b), std::get<1>(b));
            });
  plan.cost = Rational(plain_cost, p.scale);
  plan.gamma_mass = Rational(gamma_units, p.scale);

  const Rational floor =
      Rational(1, 2) * std::max(Rational(1, g.degree(x)), Rational(1, g.degree(y)));
  if (plan.gamma_mass < floor) {
    throw InvariantError("good_optimal_coupling: gamma mass below the 1/(2 deg) floor");
  }
  return plan;
}

}  // namespace riccigap
