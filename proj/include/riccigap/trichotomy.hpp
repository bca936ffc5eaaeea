#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riccigap/generators.hpp"
#include "riccigap/graph.hpp"
#include "riccigap/rational.hpp"

namespace riccigap {

/// One graph evaluated against the three ways of being far from a sparse
/// non-negatively-curved expander: heavy degree-weighted log-degrees, an
/// eigenvalue pile-up above rho, or a positive fraction of edges with
/// curvature below -eps.
struct TrichotomyReport {
  std::int64_t delta = 1;
  double rho = 0;
  Rational eps;
  bool at_least_rho = false;  // expansion counts lambda >= rho instead of >

  struct SparsityClause {
    bool fired = false;
    double lhs = 0;  // sum over vertices of deg log deg
    double rhs = 0;  // (delta log delta) |V|
  } sparsity;

  struct CountClause {
    bool fired = false;
    std::int64_t count = 0;
    Rational threshold;  // eps |V| or eps |E|
  } expansion, curvature;

  bool any_clause = false;
};

struct TrichotomyOptions {
  bool at_least_rho = false;
  int threads = 0;
};

TrichotomyReport evaluate(const Graph& g, std::int64_t delta, double rho, const Rational& eps,
                          const TrichotomyOptions& options = {});

/// Sweep rows: one per (spec, eps), with the fired clause named in priority
/// order sparsity > expansion > curvature ("none" when no clause fires).
struct SweepRow {
  std::string label;
  Rational eps;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  bool sparsity = false;
  bool expansion = false;
  bool curvature = false;
  std::string fired;
};

std::vector<SweepRow> sweep(const std::vector<FamilySpec>& specs, std::int64_t delta, double rho,
                            const std::vector<Rational>& eps_grid,
                            const TrichotomyOptions& options = {});

}  // namespace riccigap
