#pragma once

#include <tuple>
#include <vector>

#include "riccigap/graph.hpp"
#include "riccigap/rational.hpp"

namespace riccigap {

/// Finitely supported probability distribution on vertices, exact masses.
struct VertexDistribution {
  /// Sorted by vertex; masses positive and summing to exactly 1.
  std::vector<std::pair<int, Rational>> support;

  void validate(const Graph& g) const;
  Rational mass_at(int v) const;
};

/// One row of the lazy simple random walk kernel: mass 1/2 at x and
/// 1/(2 deg x) at each neighbor.
VertexDistribution lazy_kernel_row(const Graph& g, int x);

/// Row of the alpha-idle kernel (2-2a) P + (2a-1) Id for 0 <= a < 1:
/// mass a at x and (1-a)/deg(x) at each neighbor. a = 1/2 is the lazy row.
VertexDistribution alpha_idle_row(const Graph& g, int x, const Rational& alpha);

/// Exact Wasserstein-1 distance between mu and nu under the graph metric.
/// Masses are scaled to a common integer denominator and the transportation
/// problem is solved as integer min-cost flow, so the result is an exact
/// rational. Throws MetricInfiniteError when the supports do not lie in a
/// single connected component.
Rational wasserstein1(const Graph& g, const VertexDistribution& mu,
                      const VertexDistribution& nu);

/// Coupling of two vertex distributions with exact rational masses.
struct TransportPlan {
  std::vector<std::tuple<int, int, Rational>> entries;  // (u, v, mass), sorted
  Rational cost;
  Rational gamma_mass;  // mass on pairs strictly closer than the base pair
};

/// Cost-optimal coupling of the lazy rows at x and y that, among all
/// cost-optimal couplings, maximizes the mass of
///   Gamma = {(u,v) : d(u,v) < d(x,y)},
/// the set of endpoint pairs strictly closer than (x,y). Solved
/// lexicographically in one integer flow with cost' = cost*M - 1_Gamma,
/// which is exact by integrality. The returned gamma_mass always satisfies
/// gamma_mass >= max(1/deg(x), 1/deg(y)) / 2.
TransportPlan good_optimal_coupling(const Graph& g, int x, int y);

}  // namespace riccigap
