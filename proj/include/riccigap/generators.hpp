#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riccigap/graph.hpp"

namespace riccigap {

enum class Family {
  cycle,
  path,
  complete,
  complete_bipartite,
  star,
  prism,
  mobius_ladder,
  hypercube,
  torus2d,
  grid2d,
  regular_tree_truncation,
  random_regular,
  cayley_abelian,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Parameters for one graph family instance.
///   cycle/complete/star/prism/mobius_ladder/torus2d/grid2d/path: n
///   complete_bipartite: n, m (the two sides)
///   hypercube: d (dimension)
///   regular_tree_truncation: d, depth
///   random_regular: n, d, seed
///   cayley_abelian: orders (cyclic factors), generators (symmetric set)
struct FamilySpec {
  Family family = Family::cycle;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::int64_t depth = 0;
  std::vector<int> orders;
  std::vector<std::vector<int>> generators;
  std::uint64_t seed = 0;
  bool has_seed = false;

  /// Compact "family(params...)" label used in tables.
  std::string label() const;
};

/// Deterministic: fixed family, parameters and seed always produce a
/// bit-identical graph.
Graph generate(const FamilySpec& spec);

// Direct constructors; generate() dispatches to these.
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int leaves);
Graph make_prism(int n);
Graph make_mobius_ladder(int n);
Graph make_hypercube(int d);
Graph make_torus2d(int n);
Graph make_grid2d(int n);
Graph make_regular_tree_truncation(int d, int depth);
Graph make_random_regular(int n, int d, std::uint64_t seed);
Graph make_cayley_abelian(const std::vector<int>& orders,
                          const std::vector<std::vector<int>>& generators);

}  // namespace riccigap
