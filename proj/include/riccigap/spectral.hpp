#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "riccigap/graph.hpp"

namespace riccigap {

/// Eigenvalues of the lazy walk kernel, sorted descending. All lie in [0,1];
/// the multiplicity of 1 equals the number of connected components.
struct Spectrum {
  std::vector<double> eigenvalues;
  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Atomic measure on [0,1]: (location, weight) with locations descending and
/// atoms within 1e-9 of each other merged, so weights of degenerate
/// eigenspaces are basis-independent.
struct SpectralMeasure {
  std::vector<std::pair<double, double>> atoms;
  double total_weight() const;
  /// Mass on the closed interval [rho, 1].
  double mass_at_least(double rho) const;
};

/// Full eigendecomposition of the lazy kernel P = 1/2 I + 1/2 D^{-1} A,
/// obtained from the symmetric conjugate D^{1/2} P D^{-1/2}. Column i of
/// `basis` is the eigenvector phi_i paired with spectrum.eigenvalues[i],
/// orthonormal in the degree-weighted inner product
/// <f,g> = sum_o deg(o) f(o) g(o).
struct Eigendecomposition {
  Spectrum spectrum;
  Eigen::MatrixXd basis;
  std::vector<int> degrees;
};

/// Dense solve; guarded at 5000 vertices. Eigenvalues outside [0,1] by more
/// than 1e-9 and orthonormality/eigenpair residuals above 1e-8 are hard
/// errors.
Eigendecomposition eigendecomposition(const Graph& g);

Spectrum spectrum(const Graph& g);

/// Uniform weight 1/N on each eigenvalue, atoms merged.
SpectralMeasure empirical_distribution(const Spectrum& s);
SpectralMeasure empirical_distribution(const Graph& g);

/// Local spectral measure at root o: atom weights deg(o) |phi_i(o)|^2.
/// Its t-th moment is the t-step return probability at o.
SpectralMeasure local_spectral_measure(const Eigendecomposition& dec, int o);
SpectralMeasure local_spectral_measure(const Graph& g, int o);

/// Number of eigenvalues strictly above rho.
int count_above(const Spectrum& s, double rho);
int count_above(const Graph& g, double rho);

/// Fraction of vertices whose local spectral measure puts mass <= eps on
/// [rho, 1]; small values mean the high part of the spectrum is felt almost
/// everywhere.
double delocalization_fraction(const Eigendecomposition& dec, double rho, double eps);
double delocalization_fraction(const Graph& g, double rho, double eps);

}  // namespace riccigap
