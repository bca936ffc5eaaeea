#include "riccigap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riccigap/rng.hpp"

namespace riccigap {
namespace {

constexpr int kMaxDenseSolve = 5000;
constexpr double kClampTolerance = 1e-9;
constexpr double kBasisTolerance = 1e-8;
constexpr double kAtomMergeTolerance = 1e-9;

SpectralMeasure merge_atoms(std::vector<std::pair<double, double>> raw) {
  // Input sorted by descending location; group locations within tolerance.
  SpectralMeasure m;
  for (const auto& [lambda, weight] : raw) {
    if (!m.atoms.empty() && m.atoms.back().first - lambda <= kAtomMergeTolerance) {
      m.atoms.back().second += weight;
    } else {
      m.atoms.emplace_back(lambda, weight);
    }
  }
  return m;
}

}  // namespace

double SpectralMeasure::total_weight() const {
  double sum = 0;
  for (const auto& [lambda, weight] : atoms) sum += weight;
  return sum;
}

double SpectralMeasure::mass_at_least(double rho) const {
  double sum = 0;
  for (const auto& [lambda, weight] : atoms) {
    if (lambda >= rho) sum += weight;
  }
  return sum;
}

Eigendecomposition eigendecomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw InputError("spectrum: empty graph");
  if (n > kMaxDenseSolve) {
    throw CapabilityError("spectrum: dense solve guarded at " +
                          std::to_string(kMaxDenseSolve) + " vertices, got " +
                          std::to_string(n));
  }
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    degrees[v] = g.degree(v);
    if (degrees[v] == 0) {
      throw InputError("spectrum: isolated vertex " + std::to_string(v) +
                       " has no walk kernel row");
    }
  }

  // Symmetric conjugate M = 1/2 I + 1/2 D^{-1/2} A D^{-1/2}.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    m(v, v) = 0.5;
    for (int w : g.neighbors(v)) {
      m(v, w) = 0.5 / std::sqrt(static_cast<double>(degrees[v]) * degrees[w]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("spectrum: eigensolver failed to converge");
  }

  Eigendecomposition dec;
  dec.degrees = std::move(degrees);
  dec.spectrum.eigenvalues.resize(static_cast<std::size_t>(n));
  dec.basis.resize(n, n);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  for (int i = 0; i < n; ++i) {
    double lambda = values(n - 1 - i);  // descending
    if (lambda < -kClampTolerance || lambda > 1 + kClampTolerance) {
      throw InvariantError("spectrum: eigenvalue " + std::to_string(lambda) +
                           " outside [0,1] beyond clamp tolerance");
    }
    dec.spectrum.eigenvalues[i] = std::clamp(lambda, 0.0, 1.0);
    // phi_i = D^{-1/2} v_i is orthonormal for <f,g> = sum deg(o) f(o) g(o).
    for (int v = 0; v < n; ++v) {
      dec.basis(v, i) = vectors(v, n - 1 - i) / std::sqrt(static_cast<double>(dec.degrees[v]));
    }
  }

  // Verify the eigenpairs and the orthonormality in the symmetric
  // coordinates; sampled columns once the full Gram matrix gets expensive.
  std::vector<int> cols;
  if (n <= 1200) {
    cols.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[i] = i;
  } else {
    SplitMix64 rng(0x5eedc01u);
    for (int k = 0; k < 96; ++k) cols.push_back(static_cast<int>(rng.below(n)));
  }
  for (int i : cols) {
    const Eigen::VectorXd v = vectors.col(n - 1 - i);
    const double residual = (m * v - values(n - 1 - i) * v).lpNorm<Eigen::Infinity>();
    if (residual > kBasisTolerance) {
      throw InvariantError("spectrum: eigenpair residual " + std::to_string(residual));
    }
    for (int j : cols) {
      const double gram = v.dot(vectors.col(n - 1 - j));
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(gram - target) > kBasisTolerance) {
        throw InvariantError("spectrum: basis not orthonormal");
      }
    }
  }
  return dec;
}

Spectrum spectrum(const Graph& g) { return eigendecomposition(g).spectrum; }

SpectralMeasure empirical_distribution(const Spectrum& s) {
  if (s.size() == 0) throw InputError("empirical_distribution: empty spectrum");
  std::vector<std::pair<double, double>> raw;
  raw.reserve(s.eigenvalues.size());
  const double w = 1.0 / s.size();
  for (double lambda : s.eigenvalues) raw.emplace_back(lambda, w);
  return merge_atoms(std::move(raw));
}

SpectralMeasure empirical_distribution(const Graph& g) {
  return empirical_distribution(spectrum(g));
}

SpectralMeasure local_spectral_measure(const Eigendecomposition& dec, int o) {
  const int n = dec.spectrum.size();
  if (o < 0 || o >= n) throw InputError("local_spectral_measure: root out of range");
  std::vector<std::pair<double, double>> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double amp = dec.basis(o, i);
    raw.emplace_back(dec.spectrum.eigenvalues[i], dec.degrees[o] * amp * amp);
  }
  SpectralMeasure m = merge_atoms(std::move(raw));
  const double total = m.total_weight();
  if (std::abs(total - 1.0) > 1e-10) {
    throw InvariantError("local_spectral_measure: weights sum to " + std::to_string(total));
  }
  return m;
}

SpectralMeasure local_spectral_measure(const Graph& g, int o) {
  return local_spectral_measure(eigendecomposition(g), o);
}

int count_above(const Spectrum& s, double rho) {
  int count = 0;
  for (double lambda : s.eigenvalues) {
    if (lambda > rho) ++count;
  }
  return count;
}

int count_above(const Graph& g, double rho) { return count_above(spectrum(g), rho); }

double delocalization_fraction(const Eigendecomposition& dec, double rho, double eps) {
  const int n = dec.spectrum.size();
  int low = 0;
  for (int x = 0; x < n; ++x) {
    if (local_spectral_measure(dec, x).mass_at_least(rho) <= eps) ++low;
  }
  return static_cast<double>(low) / n;
}

double delocalization_fraction(const Graph& g, double rho, double eps) {
  return delocalization_fraction(eigendecomposition(g), rho, eps);
}

}  // namespace riccigap
