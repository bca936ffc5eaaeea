#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "riccigap/graph.hpp"
#include "riccigap/rational.hpp"
#include "riccigap/rng.hpp"
#include "riccigap/transport.hpp"

namespace riccigap {

enum class ArithmeticMode { rational, floating };

/// Exact t-step distribution of the lazy walk started at `origin`.
/// Rational mode keeps every probability exact; floating mode mirrors the
/// same iteration in doubles. When no mode is forced, rational is chosen for
/// t <= 30 on graphs of at most 20000 vertices. The mode actually used is
/// recorded in `mode`.
struct WalkDistribution {
  int origin = 0;
  int t = 0;
  ArithmeticMode mode = ArithmeticMode::floating;
  std::vector<std::pair<int, Rational>> exact;     // rational mode only, sorted
  std::vector<std::pair<int, double>> values;      // both modes, sorted
  double at(int v) const;
  Rational exact_at(int v) const;
};

WalkDistribution walk_distribution(const Graph& g, int origin, int t,
                                   std::optional<ArithmeticMode> mode = std::nullopt);

double return_probability(const Graph& g, int origin, int t);
Rational return_probability_exact(const Graph& g, int origin, int t);

/// Shannon entropies H_t of the walk distribution for t = 0..t_max, natural
/// log, 0 log 0 = 0, plus the rate H_t / t.
struct EntropySeries {
  int origin = 0;
  ArithmeticMode mode = ArithmeticMode::floating;
  std::vector<std::pair<int, double>> values;          // (t, H_t), t = 0..t_max
  std::vector<std::pair<int, double>> rate_estimates;  // (t, H_t/t), t >= 1
};

EntropySeries entropy_series(const Graph& g, int origin, int t_max,
                             std::optional<ArithmeticMode> mode = std::nullopt);

/// Even-time root sequence (t, (P^{2t}(o,o))^{1/(2t)}) for t = 1..t_max.
/// A diagnostic trend toward the spectral radius; no extrapolation is done.
struct RadiusSeries {
  int origin = 0;
  struct Entry {
    int t;
    double even_return;  // P^{2t}(o,o)
    double estimate;     // even_return^{1/(2t)}
  };
  std::vector<Entry> entries;
};

RadiusSeries spectral_radius_estimate(const Graph& g, int origin, int t_max);

/// H_t/t - 2 log(1/r_t) where r_t is the t-th radius estimate. Converges to
/// the entropy/radius defect on graphs where both limits exist; identically
/// pinned to 0 in the large-t finite-graph limit.
double entropy_radius_gap(const Graph& g, int origin, int t);

/// Tail bound z (2a + K - z) / a^2 for a non-negative super-martingale
/// started at z with increments bounded by K, evaluated at threshold a,
/// plus a residual of 1 unless the caller knows the quadratic-variation sum
/// reaches a^2 deterministically.
double supermartingale_bound(double z, double K, double a, bool deterministic_sum_ok);

/// One-sided Wilson upper confidence bound for a binomial proportion.
double wilson_upper_bound(std::int64_t successes, std::int64_t trials, double z_score);

/// Steps a coupled pair of lazy walks: distinct coordinates advance by the
/// Gamma-maximal optimal coupling of their kernel rows, met coordinates move
/// together. Plans are cached per ordered pair with bounded LRU eviction.
/// Not thread-safe; use one simulator per worker.
class CoupledWalkSimulator {
 public:
  explicit CoupledWalkSimulator(const Graph& g, std::size_t cache_capacity = 1u << 16);
  std::pair<int, int> step(std::pair<int, int> state, SplitMix64& rng);

 private:
  struct PlanSampler {
    std::vector<std::tuple<int, int, std::int64_t>> entries;  // cumulative weights
    std::int64_t total = 0;
  };
  const PlanSampler& sampler_for(int u, int v);

  const Graph& g_;
  std::size_t capacity_;
  std::list<std::pair<std::int64_t, PlanSampler>> lru_;
  std::unordered_map<std::int64_t, std::list<std::pair<std::int64_t, PlanSampler>>::iterator>
      index_;
};

/// Empirical meeting-time experiment for the coupled pair started at (x, y).
struct MeetingExperiment {
  std::pair<int, int> pair;
  std::int64_t trials = 0;
  int horizon = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> meeting_time;  // per trial; -1 when beyond horizon
  std::vector<double> tail;                // tail[t] = P(tau > t), t = 0..horizon
  std::int64_t met_count = 0;
  double mean_met = 0;  // over trials that met
  std::int64_t max_met = -1;
  // Aggregates of the distance increments before meeting, available when
  // collect_increments was set: count, sum, sum of squares.
  std::int64_t increment_steps = 0;
  double increment_sum = 0;
  double increment_sum_squares = 0;

  /// P(tau >= t): number of trials with meeting time >= t over all trials.
  double survival_at_least(int t) const;
};

MeetingExperiment coupled_meeting_experiment(const Graph& g, int x, int y, int horizon,
                                             std::int64_t trials, std::uint64_t seed,
                                             int threads = 0,
                                             bool collect_increments = false);

/// Lazy walk on the depth-truncated d-regular tree, collapsed to the
/// distance-from-root birth-death chain. Per-layer symmetry makes every
/// root observable of the full tree computable from this chain, which stays
/// tractable at depths where the tree itself cannot be materialized.
std::vector<double> tree_layer_distribution(int d, int depth, int t);
double tree_return_probability(int d, int depth, int t);
EntropySeries tree_entropy_series(int d, int depth, int t_max);
RadiusSeries tree_radius_series(int d, int depth, int t_max);

}  // namespace riccigap
