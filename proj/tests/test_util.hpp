// Shared test-side oracles. Everything here is independent of the library
// code paths it is used to check: brute-force searches, exhaustive
// basic-solution enumeration, closed-form spectra, and an exact-rational
// layer recursion for walks on truncated regular trees.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "riccigap/graph.hpp"
#include "riccigap/rational.hpp"
#include "riccigap/rng.hpp"

namespace testutil {

using riccigap::BigInt;
using riccigap::Graph;
using riccigap::Rational;

/// Root-preserving isomorphism by exhaustive permutation search (<= 9 ish
/// non-root vertices).
inline bool brute_force_rooted_isomorphic(const Graph& a, int root_a, const Graph& b,
                                          int root_b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != root_a) others.push_back(v);
  }
  std::vector<int> image;
  for (int v = 0; v < n; ++v) {
    if (v != root_b) image.push_back(v);
  }
  std::sort(image.begin(), image.end());
  do {
    std::vector<int> phi(static_cast<std::size_t>(n));
    phi[root_a] = root_b;
    for (std::size_t i = 0; i < others.size(); ++i) phi[others[i]] = image[i];
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int w : a.neighbors(u)) {
        if (!b.has_edge(phi[u], phi[w])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

inline Graph relabel(const Graph& g, const std::vector<int>& phi) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(phi[u], phi[v]);
  return Graph::from_edges(g.vertex_count(), std::move(edges));
}

/// Exhaustive transportation-LP oracle: enumerates every basic feasible
/// solution (spanning trees of the bipartite supply/demand graph, solved by
/// leaf peeling in exact integers) and reports the minimum cost together
/// with the maximum "marked cell" mass among minimum-cost basic solutions.
/// The optimum of a linear objective over the optimal face is attained at a
/// vertex of the polytope, so this is exact.
struct TransportOracleResult {
  std::int64_t min_cost_units = -1;  // sum flow * cost, flow in supply units
  std::int64_t max_marked_units_at_optimum = -1;
};

inline TransportOracleResult transport_oracle(const std::vector<std::int64_t>& supply,
                                              const std::vector<std::int64_t>& demand,
                                              const std::vector<std::vector<int>>& cost,
                                              const std::vector<std::vector<char>>& marked) {
  const int rows = static_cast<int>(supply.size());
  const int cols = static_cast<int>(demand.size());
  const int cells = rows * cols;
  const int basis_size = rows + cols - 1;
  TransportOracleResult result;

  std::vector<int> chosen(basis_size);
  std::iota(chosen.begin(), chosen.end(), 0);

  // Reused buffers; the subset count is large (e.g. C(25,9) for 5x5).
  std::vector<std::int64_t> rest_supply(rows), rest_demand(cols), flow(basis_size);
  std::vector<int> row_left(rows), col_left(cols);
  std::vector<char> solved(basis_size);

  auto evaluate = [&](const std::vector<int>& basis) {
    // Leaf peeling over the bipartite graph whose edges are the basis cells.
    rest_supply = supply;
    rest_demand = demand;
    std::fill(row_left.begin(), row_left.end(), 0);
    std::fill(col_left.begin(), col_left.end(), 0);
    std::fill(solved.begin(), solved.end(), 0);
    for (int cell : basis) {
      ++row_left[cell / cols];
      ++col_left[cell % cols];
    }
    for (int peel = 0; peel < basis_size; ++peel) {
      int k = -1;
      std::int64_t amount = 0;
      for (int idx = 0; idx < basis_size && k < 0; ++idx) {
        if (solved[idx]) continue;
        const int i = basis[idx] / cols, j = basis[idx] % cols;
        if (row_left[i] == 1) {
          k = idx;
          amount = rest_supply[i];
        } else if (col_left[j] == 1) {
          k = idx;
          amount = rest_demand[j];
        }
      }
      if (k < 0 || amount < 0) return;  // cycle or infeasible
      solved[k] = 1;
      flow[k] = amount;
      const int i = basis[k] / cols, j = basis[k] % cols;
      rest_supply[i] -= amount;
      rest_demand[j] -= amount;
      --row_left[i];
      --col_left[j];
    }
    for (int i = 0; i < rows; ++i) {
      if (rest_supply[i] != 0) return;
    }
    for (int j = 0; j < cols; ++j) {
      if (rest_demand[j] != 0) return;
    }
    std::int64_t total = 0, marked_units = 0;
    for (int k = 0; k < basis_size; ++k) {
      const int i = basis[k] / cols, j = basis[k] % cols;
      total += flow[k] * cost[i][j];
      if (marked[i][j]) marked_units += flow[k];
    }
    if (result.min_cost_units < 0 || total < result.min_cost_units) {
      result.min_cost_units = total;
      result.max_marked_units_at_optimum = marked_units;
    } else if (total == result.min_cost_units) {
      result.max_marked_units_at_optimum =
          std::max(result.max_marked_units_at_optimum, marked_units);
    }
  };

  // Enumerate all (rows+cols-1)-subsets of the cells.
  for (;;) {
    evaluate(chosen);
    int pos = basis_size - 1;
    while (pos >= 0 && chosen[pos] == cells - basis_size + pos) --pos;
    if (pos < 0) break;
    ++chosen[pos];
    for (int q = pos + 1; q < basis_size; ++q) chosen[q] = chosen[q - 1] + 1;
  }
  return result;
}

/// W1 on a complete graph equals total variation: all distances are 0/1.
inline Rational w1_complete_oracle(const std::vector<Rational>& mu,
                                   const std::vector<Rational>& nu) {
  Rational out = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Rational d = mu[i] - nu[i];
    if (d > 0) out += d;
  }
  return out;
}

/// Closed-form lazy-walk spectra.
inline std::vector<double> cycle_spectrum(int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(0.5 + 0.5 * std::cos(2.0 * M_PI * k / n));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<double> complete_spectrum(int n) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.5 - 0.5 / (n - 1));
  out[0] = 1.0;
  return out;
}

inline std::vector<double> torus_spectrum(int n) {
  std::vector<double> out;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      out.push_back(0.5 + (std::cos(2.0 * M_PI * j / n) + std::cos(2.0 * M_PI * k / n)) / 4.0);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<double> hypercube_spectrum(int d) {
  std::vector<double> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    const int k = __builtin_popcount(static_cast<unsigned>(mask));
    out.push_back(0.5 + static_cast<double>(d - 2 * k) / (2.0 * d));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Exact-rational layer recursion for the lazy walk on a depth-truncated
/// d-regular tree: state = distance from the root.
struct ExactTreeWalk {
  int d, depth;
  std::vector<Rational> q;

  ExactTreeWalk(int d_, int depth_) : d(d_), depth(depth_), q(depth_ + 1, Rational(0)) {
    q[0] = 1;
  }

  void step() {
    std::vector<Rational> next(q.size(), Rational(0));
    next[0] += q[0] / 2;
    next[1] += q[0] / 2;
    for (int k = 1; k < depth; ++k) {
      next[k] += q[k] / 2;
      next[k - 1] += q[k] / (2 * d);
      next[k + 1] += q[k] * (d - 1) / (2 * d);
    }
    next[depth] += q[depth] / 2;
    next[depth - 1] += q[depth] / 2;
    q.swap(next);
  }

  /// Number of vertices in layer k.
  BigInt layer_count(int k) const {
    if (k == 0) return 1;
    BigInt count = d;
    for (int i = 1; i < k; ++i) count *= (d - 1);
    return count;
  }

  /// Entropy of the per-vertex distribution, in doubles via exact masses.
  double entropy() const {
    double h = 0;
    for (int k = 0; k <= depth; ++k) {
      if (q[k] == 0) continue;
      const double qk = riccigap::to_double(q[k]);
      const double log_nk =
          (k == 0) ? 0.0
                   : std::log(static_cast<double>(d)) + (k - 1) * std::log(double(d - 1));
      h += qk * (log_nk - std::log(qk));
    }
    return h;
  }
};

inline Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer cycle
    edges.emplace_back(i, i + 5);              // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, std::move(edges));
}

}  // namespace testutil
