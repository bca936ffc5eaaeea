#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "riccigap/generators.hpp"
#include "riccigap/transport.hpp"
#include "test_util.hpp"

using namespace riccigap;

namespace {

/// Scales the lazy rows at x, y to common units and runs the exhaustive
/// basic-solution oracle on them. Returns (w1, gamma_max) as rationals.
std::pair<Rational, Rational> oracle_for_pair(const Graph& g, int x, int y) {
  const VertexDistribution mu = lazy_kernel_row(g, x);
  const VertexDistribution nu = lazy_kernel_row(g, y);
  BigInt lcm = 1;
  for (const auto& [v, q] : mu.support) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  for (const auto& [v, q] : nu.support) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  const std::int64_t scale = lcm.convert_to<std::int64_t>();
  std::vector<std::int64_t> supply, demand;
  for (const auto& [v, q] : mu.support) {
    supply.push_back((numerator(q) * (lcm / denominator(q))).convert_to<std::int64_t>());
  }
  for (const auto& [v, q] : nu.support) {
    demand.push_back((numerator(q) * (lcm / denominator(q))).convert_to<std::int64_t>());
  }
  const int base = *graph_distance(g, x, y);
  std::vector<std::vector<int>> cost;
  std::vector<std::vector<char>> marked;
  for (const auto& [u, qu] : mu.support) {
    std::vector<int> row;
    std::vector<char> mrow;
    for (const auto& [v, qv] : nu.support) {
      const int d = *graph_distance(g, u, v);
      row.push_back(d);
      mrow.push_back(d < base ? 1 : 0);
    }
    cost.push_back(row);
    marked.push_back(mrow);
  }
  const auto result = testutil::transport_oracle(supply, demand, cost, marked);
  REQUIRE(result.min_cost_units >= 0);
  return {Rational(result.min_cost_units, scale),
          Rational(result.max_marked_units_at_optimum, scale)};
}

Rational plan_total(const TransportPlan& plan) {
  Rational total = 0;
  for (const auto& [u, v, mass] : plan.entries) total += mass;
  return total;
}

void check_marginals(const TransportPlan& plan, const VertexDistribution& mu,
                     const VertexDistribution& nu) {
  std::map<int, Rational> row, col;
  for (const auto& [u, v, mass] : plan.entries) {
    row[u] += mass;
    col[v] += mass;
  }
  for (const auto& [u, mass] : mu.support) CHECK(row[u] == mass);
  for (const auto& [v, mass] : nu.support) CHECK(col[v] == mass);
  CHECK(plan_total(plan) == 1);
}

}  // namespace

TEST_CASE("lazy kernel rows") {
  const Graph k2 = make_complete(2);
  const VertexDistribution row = lazy_kernel_row(k2, 0);
  CHECK(row.support ==
        std::vector<std::pair<int, Rational>>{{0, Rational(1, 2)}, {1, Rational(1, 2)}});

  const Graph c4 = make_cycle(4);
  const VertexDistribution r0 = lazy_kernel_row(c4, 0);
  CHECK(r0.support == std::vector<std::pair<int, Rational>>{
                          {0, Rational(1, 2)}, {1, Rational(1, 4)}, {3, Rational(1, 4)}});

  const VertexDistribution k5row = lazy_kernel_row(make_complete(5), 2);
  CHECK(k5row.mass_at(2) == Rational(1, 2));
  CHECK(k5row.mass_at(0) == Rational(1, 8));
  CHECK(k5row.support.size() == 5);

  CHECK_THROWS_AS(lazy_kernel_row(make_path(1), 0), InputError);
}

TEST_CASE("alpha idle rows") {
  const Graph c8 = make_cycle(8);
  const VertexDistribution srw = alpha_idle_row(c8, 0, Rational(0));
  CHECK(srw.mass_at(0) == 0);
  CHECK(srw.mass_at(1) == Rational(1, 2));
  CHECK(srw.support.size() == 2);

  const VertexDistribution idle = alpha_idle_row(c8, 0, Rational(3, 4));
  CHECK(idle.mass_at(0) == Rational(3, 4));
  CHECK(idle.mass_at(7) == Rational(1, 8));

  CHECK(alpha_idle_row(c8, 3, Rational(1, 2)).support == lazy_kernel_row(c8, 3).support);
  CHECK_THROWS_AS(alpha_idle_row(c8, 0, Rational(1)), InputError);
  CHECK_THROWS_AS(alpha_idle_row(c8, 0, Rational(-1, 10)), InputError);
}

TEST_CASE("wasserstein1: identity, point masses, K5 vs oracle") {
  const Graph c10 = make_cycle(10);
  const VertexDistribution row = lazy_kernel_row(c10, 4);
  CHECK(wasserstein1(c10, row, row) == 0);

  VertexDistribution du, dv;
  du.support = {{1, Rational(1)}};
  dv.support = {{6, Rational(1)}};
  CHECK(wasserstein1(c10, du, dv) == 5);

  const Graph k5 = make_complete(5);
  const auto [w1_oracle, gamma_oracle] = oracle_for_pair(k5, 0, 1);
  CHECK(w1_oracle == Rational(3, 8));
  CHECK(wasserstein1(k5, lazy_kernel_row(k5, 0), lazy_kernel_row(k5, 1)) == w1_oracle);
}

TEST_CASE("wasserstein1 agrees with the exhaustive oracle on assorted pairs") {
  const Graph graphs[] = {make_cycle(6), make_prism(3), make_star(3),
                          make_random_regular(10, 3, 5)};
  for (const Graph& g : graphs) {
    for (const auto& [x, y] : g.edges()) {
      if (lazy_kernel_row(g, x).support.size() * lazy_kernel_row(g, y).support.size() > 25) {
        continue;  // oracle subset enumeration gets slow past 5x5
      }
      const auto [w1_oracle, gamma_oracle] = oracle_for_pair(g, x, y);
      CHECK(wasserstein1(g, lazy_kernel_row(g, x), lazy_kernel_row(g, y)) == w1_oracle);
    }
  }
}

TEST_CASE("wasserstein1 is a metric on one-component distributions") {
  const Graph g = make_random_regular(12, 3, 9);
  SplitMix64 rng(17);
  auto random_distribution = [&]() {
    VertexDistribution d;
    // three atoms with masses k/8
    std::set<int> support;
    while (support.size() < 3) support.insert(static_cast<int>(rng.below(12)));
    std::vector<std::int64_t> cuts = {0, 0, 8};
    cuts[0] = 1 + static_cast<std::int64_t>(rng.below(6));
    cuts[1] = cuts[0] + 1 + static_cast<std::int64_t>(rng.below(8 - cuts[0] - 1));
    std::int64_t prev = 0;
    auto it = support.begin();
    for (std::int64_t cut : cuts) {
      d.support.emplace_back(*it++, Rational(cut - prev, 8));
      prev = cut;
    }
    return d;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const VertexDistribution a = random_distribution(), b = random_distribution(),
                             c = random_distribution();
    const Rational ab = wasserstein1(g, a, b);
    CHECK(ab == wasserstein1(g, b, a));
    CHECK(ab <= wasserstein1(g, a, c) + wasserstein1(g, c, b));
    CHECK(ab >= 0);
  }
}

TEST_CASE("wasserstein1: disconnected supports") {
  const Graph tri2 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(
      wasserstein1(tri2, lazy_kernel_row(tri2, 0), lazy_kernel_row(tri2, 3)),
      MetricInfiniteError);
}

TEST_CASE("good coupling: K2 is diagonal") {
  const Graph k2 = make_complete(2);
  const TransportPlan plan = good_optimal_coupling(k2, 0, 1);
  CHECK(plan.cost == 0);
  CHECK(plan.gamma_mass == 1);
  for (const auto& [u, v, mass] : plan.entries) CHECK(u == v);
  check_marginals(plan, lazy_kernel_row(k2, 0), lazy_kernel_row(k2, 1));
}

TEST_CASE("good coupling: C6 adjacent pair") {
  const Graph c6 = make_cycle(6);
  const TransportPlan plan = good_optimal_coupling(c6, 0, 1);
  CHECK(plan.gamma_mass >= Rational(1, 4));
  CHECK(plan.cost == wasserstein1(c6, lazy_kernel_row(c6, 0), lazy_kernel_row(c6, 1)));
}

TEST_CASE("good coupling: K4 against the two-phase oracle") {
  const Graph k4 = make_complete(4);
  const TransportPlan plan = good_optimal_coupling(k4, 0, 1);
  const auto [w1_oracle, gamma_oracle] = oracle_for_pair(k4, 0, 1);
  CHECK(plan.cost == w1_oracle);
  CHECK(plan.gamma_mass == gamma_oracle);
  CHECK(plan.gamma_mass >= Rational(1, 6));
}

TEST_CASE("good coupling: gamma maximality against the oracle on edges") {
  const Graph graphs[] = {make_cycle(5), make_prism(3), make_star(4),
                          make_random_regular(8, 3, 2)};
  for (const Graph& g : graphs) {
    for (const auto& [x, y] : g.edges()) {
      if (lazy_kernel_row(g, x).support.size() * lazy_kernel_row(g, y).support.size() > 25) {
        continue;
      }
      const TransportPlan plan = good_optimal_coupling(g, x, y);
      const auto [w1_oracle, gamma_oracle] = oracle_for_pair(g, x, y);
      CHECK(plan.cost == w1_oracle);
      CHECK(plan.gamma_mass == gamma_oracle);
    }
  }
}

TEST_CASE("good coupling: marginals and the degree floor across pairs") {
  const Graph graphs[] = {make_prism(5), make_torus2d(4), make_complete_bipartite(3, 5),
                          make_random_regular(20, 4, 4)};
  for (const Graph& g : graphs) {
    // edges and a few distance-2/3 pairs
    std::vector<std::pair<int, int>> pairs = g.edges();
    for (int x = 0; x < g.vertex_count(); x += 5) {
      for (int y = 0; y < g.vertex_count(); y += 7) {
        const auto d = graph_distance(g, x, y);
        if (d && *d >= 2 && *d <= 3) pairs.emplace_back(x, y);
      }
    }
    for (const auto& [x, y] : pairs) {
      const TransportPlan plan = good_optimal_coupling(g, x, y);
      check_marginals(plan, lazy_kernel_row(g, x), lazy_kernel_row(g, y));
      const Rational floor = std::max(Rational(1, 2 * g.degree(x)), Rational(1, 2 * g.degree(y)));
      CHECK(plan.gamma_mass >= floor);
      CHECK(plan.cost == wasserstein1(g, lazy_kernel_row(g, x), lazy_kernel_row(g, y)));
    }
  }
}

TEST_CASE("good coupling preconditions") {
  const Graph c4 = make_cycle(4);
  CHECK_THROWS_AS(good_optimal_coupling(c4, 1, 1), InputError);
  const Graph tri2 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(good_optimal_coupling(tri2, 0, 4), MetricInfiniteError);
}

TEST_CASE("vertex distribution validation") {
  const Graph c4 = make_cycle(4);
  VertexDistribution bad;
  bad.support = {{0, Rational(1, 2)}, {1, Rational(1, 4)}};
  CHECK_THROWS_AS(wasserstein1(c4, bad, bad), InputError);  // mass != 1
  bad.support = {{1, Rational(1, 2)}, {0, Rational(1, 2)}};
  CHECK_THROWS_AS(wasserstein1(c4, bad, bad), InputError);  // unsorted
}
