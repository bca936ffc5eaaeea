#include "riccigap/curvature.hpp"

#include <algorithm>
#include <string>

#include "riccigap/parallel.hpp"
#include "riccigap/transport.hpp"

namespace riccigap {

Rational kappa_edge(const Graph& g, int x, int y) {
  if (!g.has_edge(x, y)) {
    throw InputError("kappa_edge: {" + std::to_string(x) + "," + std::to_string(y) +
                     "} is not an edge");
  }
  return 1 - wasserstein1(g, lazy_kernel_row(g, x), lazy_kernel_row(g, y));
}

Rational kappa_alpha_edge(const Graph& g, int x, int y, const Rational& alpha) {
  if (!g.has_edge(x, y)) {
    throw InputError("kappa_alpha_edge: {" + std::to_string(x) + "," + std::to_string(y) +
                     "} is not an edge");
  }
  if (alpha < 0 || alpha >= 1) throw InputError("kappa_alpha_edge: alpha must lie in [0,1)");
  return 1 - wasserstein1(g, alpha_idle_row(g, x, alpha), alpha_idle_row(g, y, alpha));
}

CurvatureProfile curvature_profile(const Graph& g, const std::vector<Rational>& eps_list,
                                   int threads) {
  const auto edges = g.edges();
  if (edges.empty()) throw InputError("curvature: graph has no edges");

  CurvatureProfile profile;
  profile.per_edge.resize(edges.size());
  parallel_for(
      edges.size(),
      [&](std::size_t i) {
        profile.per_edge[i] = {edges[i], kappa_edge(g, edges[i].first, edges[i].second)};
      },
      threads);

  profile.min_kappa = profile.per_edge.front().kappa;
  for (const auto& e : profile.per_edge) profile.min_kappa = std::min(profile.min_kappa, e.kappa);

  for (const auto& eps : eps_list) {
    std::int64_t count = 0;
    for (const auto& e : profile.per_edge) {
      if (e.kappa < -eps) ++count;
    }
    profile.negative_fraction_at.emplace_back(
        eps, Rational(count, static_cast<std::int64_t>(edges.size())));
  }
  return profile;
}

Rational kappa_graph(const Graph& g, int threads) {
  return curvature_profile(g, {}, threads).min_kappa;
}

Rational negative_fraction(const Graph& g, const Rational& eps, int threads) {
  if (eps < 0) throw InputError("negative_fraction: eps must be >= 0");
  return curvature_profile(g, {eps}, threads).negative_fraction_at.front().second;
}

}  // namespace riccigap
