#pragma once

#include <utility>
#include <vector>

#include "riccigap/graph.hpp"
#include "riccigap/rational.hpp"

namespace riccigap {

/// Ollivier-Ricci curvature of the edge {x,y}:
///   kappa(x,y) = 1 - W1(lazy row at x, lazy row at y),
/// an exact rational, always <= 1.
Rational kappa_edge(const Graph& g, int x, int y);

/// Curvature computed with the alpha-idle kernel, 0 <= alpha < 1.
/// alpha = 1/2 reproduces kappa_edge.
Rational kappa_alpha_edge(const Graph& g, int x, int y, const Rational& alpha);

/// Minimum edge curvature over the whole graph.
Rational kappa_graph(const Graph& g, int threads = 0);

/// Fraction of edges with kappa < -eps, exact.
Rational negative_fraction(const Graph& g, const Rational& eps, int threads = 0);

struct EdgeCurvature {
  std::pair<int, int> edge;  // (u, v) with u < v
  Rational kappa;
};

/// Per-edge census in lexicographic edge order, plus the minimum and the
/// negative fraction at each requested threshold.
struct CurvatureProfile {
  std::vector<EdgeCurvature> per_edge;
  Rational min_kappa;
  std::vector<std::pair<Rational, Rational>> negative_fraction_at;  // (eps, fraction)
};

CurvatureProfile curvature_profile(const Graph& g, const std::vector<Rational>& eps_list,
                                   int threads = 0);

}  // namespace riccigap
