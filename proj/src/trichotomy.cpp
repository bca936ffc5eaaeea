#include "riccigap/trichotomy.hpp"

#include <cmath>

#include "riccigap/curvature.hpp"
#include "riccigap/spectral.hpp"

namespace riccigap {
namespace {

void check_parameters(std::int64_t delta, double rho, const Rational& eps) {
  if (delta < 1) throw InputError("trichotomy: delta must be >= 1");
  if (!(rho > 0 && rho < 1)) throw InputError("trichotomy: rho must lie in (0,1)");
  if (eps <= 0) throw InputError("trichotomy: eps must be positive");
}

TrichotomyReport evaluate_with(const Graph& g, std::int64_t delta, double rho,
                               const Rational& eps, const TrichotomyOptions& options,
                               const Spectrum& spec, const CurvatureProfile& kappa) {
  TrichotomyReport report;
  report.delta = delta;
  report.rho = rho;
  report.eps = eps;
  report.at_least_rho = options.at_least_rho;

  const std::int64_t n = g.vertex_count();
  const std::int64_t m = g.edge_count();

  // Degree-grouped sum: a d-regular graph with delta = d lands bitwise on
  // the boundary and the strict comparison stays false on every platform.
  {
    std::vector<std::int64_t> count(static_cast<std::size_t>(g.max_degree()) + 1, 0);
    for (int v = 0; v < n; ++v) ++count[g.degree(v)];
    double lhs = 0.0;
    for (std::size_t d = 2; d < count.size(); ++d) {
      if (count[d] > 0) {
        lhs += static_cast<double>(count[d]) *
               (static_cast<double>(d) * std::log(static_cast<double>(d)));
      }
    }
    report.sparsity.lhs = lhs;
  }
  report.sparsity.rhs =
      static_cast<double>(n) *
      (static_cast<double>(delta) * std::log(static_cast<double>(delta)));
  report.sparsity.fired = report.sparsity.lhs > report.sparsity.rhs;

  std::int64_t count = 0;
  for (double lambda : spec.eigenvalues) {
    if (options.at_least_rho ? lambda >= rho : lambda > rho) ++count;
  }
  report.expansion.count = count;
  report.expansion.threshold = eps * n;
  report.expansion.fired = Rational(count) >= report.expansion.threshold;

  std::int64_t negative = 0;
  for (const auto& e : kappa.per_edge) {
    if (e.kappa < -eps) ++negative;
  }
  report.curvature.count = negative;
  report.curvature.threshold = eps * m;
  report.curvature.fired = Rational(negative) >= report.curvature.threshold;

  report.any_clause =
      report.sparsity.fired || report.expansion.fired || report.curvature.fired;
  return report;
}

}  // namespace

TrichotomyReport evaluate(const Graph& g, std::int64_t delta, double rho, const Rational& eps,
                          const TrichotomyOptions& options) {
  check_parameters(delta, rho, eps);
  const Spectrum spec = spectrum(g);
  const CurvatureProfile kappa = curvature_profile(g, {}, options.threads);
  return evaluate_with(g, delta, rho, eps, options, spec, kappa);
}

std::vector<SweepRow> sweep(const std::vector<FamilySpec>& specs, std::int64_t delta, double rho,
                            const std::vector<Rational>& eps_grid,
                            const TrichotomyOptions& options) {
  if (eps_grid.empty()) throw InputError("trichotomy sweep: empty eps grid");
  for (const auto& eps : eps_grid) check_parameters(delta, rho, eps);

  std::vector<SweepRow> rows;
  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    // Spectrum and per-edge curvature are shared across the eps grid.
    const Spectrum s = spectrum(g);
    const CurvatureProfile kappa = curvature_profile(g, {}, options.threads);
    for (const auto& eps : eps_grid) {
      const TrichotomyReport report = evaluate_with(g, delta, rho, eps, options, s, kappa);
      SweepRow row;
      row.label = spec.label();
      row.eps = eps;
      row.vertices = g.vertex_count();
      row.edges = g.edge_count();
      row.sparsity = report.sparsity.fired;
      row.expansion = report.expansion.fired;
      row.curvature = report.curvature.fired;
      row.fired = row.sparsity     ? "sparsity"
                  : row.expansion  ? "expansion"
                  : row.curvature  ? "curvature"
                                   : "none";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace riccigap
