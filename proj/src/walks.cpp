#include "riccigap/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "riccigap/parallel.hpp"

namespace riccigap {
namespace {

constexpr int kRationalMaxSteps = 30;
constexpr int kRationalMaxVertices = 20000;

struct Kahan {
  double sum = 0, carry = 0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

ArithmeticMode pick_mode(const Graph& g, int t, std::optional<ArithmeticMode> mode) {
  if (mode) return *mode;
  return (t <= kRationalMaxSteps && g.vertex_count() <= kRationalMaxVertices)
             ? ArithmeticMode::rational
             : ArithmeticMode::floating;
}

void check_walk_pre(const Graph& g, int origin, int t) {
  g.require_vertex(origin, "walk");
  if (t < 0) throw InputError("walk: negative time");
  if (g.degree(origin) == 0) {
    throw InputError("walk: isolated origin " + std::to_string(origin));
  }
}

/// Dense rational evolution restricted to the active support.
class RationalEvolution {
 public:
  RationalEvolution(const Graph& g, int origin) : g_(g), mass_(g.vertex_count()) {
    if (g.vertex_count() > kRationalMaxVertices) {
      throw CapabilityError("walk: rational mode guarded at " +
                            std::to_string(kRationalMaxVertices) + " vertices");
    }
    mass_[origin] = 1;
    active_.push_back(origin);
  }

  void step() {
    std::vector<Rational> next(mass_.size());
    std::vector<int> touched;
    auto touch = [&](int v) {
      if (next[v] == 0) touched.push_back(v);
    };
    for (int u : active_) {
      const Rational& p = mass_[u];
      touch(u);
      next[u] += p / 2;
      const Rational hop = p / (2 * g_.degree(u));
      for (int w : g_.neighbors(u)) {
        touch(w);
        next[w] += hop;
      }
    }
    std::sort(touched.begin(), touched.end());
    mass_.swap(next);
    active_.swap(touched);
  }

  const std::vector<int>& active() const { return active_; }
  const Rational& at(int v) const { return mass_[v]; }

 private:
  const Graph& g_;
  std::vector<Rational> mass_;
  std::vector<int> active_;
};

/// Dense double evolution over the whole vertex set.
class FloatEvolution {
 public:
  FloatEvolution(const Graph& g, int origin)
      : g_(g), mass_(static_cast<std::size_t>(g.vertex_count()), 0.0) {
    mass_[origin] = 1.0;
  }

  void step() {
    std::vector<double> next(mass_.size(), 0.0);
    const int n = g_.vertex_count();
    for (int u = 0; u < n; ++u) {
      const double p = mass_[u];
      if (p == 0.0) continue;
      next[u] += 0.5 * p;
      const double hop = 0.5 * p / g_.degree(u);
      for (int w : g_.neighbors(u)) next[w] += hop;
    }
    mass_.swap(next);
  }

  const std::vector<double>& mass() const { return mass_; }

 private:
  const Graph& g_;
  std::vector<double> mass_;
};

double entropy_of(const std::vector<double>& mass) {
  Kahan h;
  for (double p : mass) {
    if (p > 0.0) h.add(-p * std::log(p));
  }
  return h.sum;
}

}  // namespace

double WalkDistribution::at(int v) const {
  for (const auto& [u, p] : values) {
    if (u == v) return p;
  }
  return 0.0;
}

Rational WalkDistribution::exact_at(int v) const {
  for (const auto& [u, p] : exact) {
    if (u == v) return p;
  }
  return 0;
}

WalkDistribution walk_distribution(const Graph& g, int origin, int t,
                                   std::optional<ArithmeticMode> mode) {
  check_walk_pre(g, origin, t);
  WalkDistribution out;
  out.origin = origin;
  out.t = t;
  out.mode = pick_mode(g, t, mode);
  if (out.mode == ArithmeticMode::rational) {
    RationalEvolution evo(g, origin);
    for (int s = 0; s < t; ++s) evo.step();
    for (int v : evo.active()) {
      if (evo.at(v) != 0) {
        out.exact.emplace_back(v, evo.at(v));
        out.values.emplace_back(v, to_double(evo.at(v)));
      }
    }
  } else {
    FloatEvolution evo(g, origin);
    for (int s = 0; s < t; ++s) evo.step();
    const auto& mass = evo.mass();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (mass[v] > 0.0) out.values.emplace_back(v, mass[v]);
    }
  }
  return out;
}

double return_probability(const Graph& g, int origin, int t) {
  return walk_distribution(g, origin, t).at(origin);
}

Rational return_probability_exact(const Graph& g, int origin, int t) {
  return walk_distribution(g, origin, t, ArithmeticMode::rational).exact_at(origin);
}

EntropySeries entropy_series(const Graph& g, int origin, int t_max,
                             std::optional<ArithmeticMode> mode) {
  check_walk_pre(g, origin, t_max);
  EntropySeries series;
  series.origin = origin;
  series.mode = pick_mode(g, t_max, mode);
  series.values.emplace_back(0, 0.0);
  if (series.mode == ArithmeticMode::rational) {
    RationalEvolution evo(g, origin);
    for (int t = 1; t <= t_max; ++t) {
      evo.step();
      Kahan h;
      for (int v : evo.active()) {
        const double p = to_double(evo.at(v));
        if (p > 0) h.add(-p * std::log(p));
      }
      series.values.emplace_back(t, h.sum);
    }
  } else {
    FloatEvolution evo(g, origin);
    for (int t = 1; t <= t_max; ++t) {
      evo.step();
      series.values.emplace_back(t, entropy_of(evo.mass()));
    }
  }
  for (const auto& [t, h] : series.values) {
    if (t >= 1) series.rate_estimates.emplace_back(t, h / t);
  }
  return series;
}

RadiusSeries spectral_radius_estimate(const Graph& g, int origin, int t_max) {
  check_walk_pre(g, origin, t_max);
  RadiusSeries series;
  series.origin = origin;
  FloatEvolution evo(g, origin);
  for (int s = 1; s <= 2 * t_max; ++s) {
    evo.step();
    if (s % 2 == 0) {
      const int t = s / 2;
      const double p = evo.mass()[origin];
      series.entries.push_back({t, p, std::pow(p, 1.0 / (2.0 * t))});
    }
  }
  return series;
}

double entropy_radius_gap(const Graph& g, int origin, int t) {
  if (t < 1) throw InputError("entropy_radius_gap: t must be >= 1");
  const auto entropy = entropy_series(g, origin, t);
  const auto radius = spectral_radius_estimate(g, origin, t);
  const double rate = entropy.values[t].second / t;
  const double r = radius.entries.back().estimate;
  return rate - 2.0 * std::log(1.0 / r);
}

double supermartingale_bound(double z, double K, double a, bool deterministic_sum_ok) {
  if (!(a > 0)) throw InputError("supermartingale_bound: a must be positive");
  if (!(K > 0)) throw InputError("supermartingale_bound: K must be positive");
  if (z < 0) throw InputError("supermartingale_bound: z must be non-negative");
  return z * (2 * a + K - z) / (a * a) + (deterministic_sum_ok ? 0.0 : 1.0);
}

double wilson_upper_bound(std::int64_t successes, std::int64_t trials, double z_score) {
  if (trials <= 0) throw InputError("wilson_upper_bound: trials must be positive");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z_score * z_score;
  const double center = p + z2 / (2 * n);
  const double spread = z_score * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return (center + spread) / (1 + z2 / n);
}

CoupledWalkSimulator::CoupledWalkSimulator(const Graph& g, std::size_t cache_capacity)
    : g_(g), capacity_(std::max<std::size_t>(1, cache_capacity)) {}

const CoupledWalkSimulator::PlanSampler& CoupledWalkSimulator::sampler_for(int u, int v) {
  const std::int64_t key = static_cast<std::int64_t>(u) * g_.vertex_count() + v;
  if (auto it = index_.find(key); it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return lru_.front().second;
  }
  const TransportPlan plan = good_optimal_coupling(g_, u, v);
  PlanSampler sampler;
  BigInt denom = 1;
  for (const auto& [a, b, mass] : plan.entries) {
    denom = boost::multiprecision::lcm(denom, denominator(mass));
  }
  const std::int64_t scale = denom.convert_to<std::int64_t>();
  for (const auto& [a, b, mass] : plan.entries) {
    const std::int64_t w =
        (numerator(mass) * (denom / denominator(mass))).convert_to<std::int64_t>();
    sampler.total += w;
    sampler.entries.emplace_back(a, b, sampler.total);  // cumulative
  }
  if (sampler.total != scale) {
    throw InvariantError("coupled walk: plan masses do not sum to one");
  }
  lru_.emplace_front(key, std::move(sampler));
  index_[key] = lru_.begin();
  if (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
  return lru_.front().second;
}

std::pair<int, int> CoupledWalkSimulator::step(std::pair<int, int> state, SplitMix64& rng) {
  auto [u, v] = state;
  if (u == v) {
    // Met: identity coupling, both copies take the same lazy step.
    const int deg = g_.degree(u);
    const std::uint64_t r = rng.below(2 * static_cast<std::uint64_t>(deg));
    const int to = (r < static_cast<std::uint64_t>(deg)) ? g_.neighbors(u)[r] : u;
    return {to, to};
  }
  const PlanSampler& sampler = sampler_for(u, v);
  const std::int64_t r = static_cast<std::int64_t>(rng.below(sampler.total));
  for (const auto& [a, b, cum] : sampler.entries) {
    if (r < cum) return {a, b};
  }
  throw InvariantError("coupled walk: sampler fell off the cumulative table");
}

double MeetingExperiment::survival_at_least(int t) const {
  if (t <= 0) return 1.0;
  std::int64_t count = 0;
  for (std::int64_t tau : meeting_time) {
    if (tau < 0 || tau >= t) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(trials);
}

MeetingExperiment coupled_meeting_experiment(const Graph& g, int x, int y, int horizon,
                                             std::int64_t trials, std::uint64_t seed,
                                             int threads, bool collect_increments) {
  g.require_vertex(x, "coupled_meeting_experiment");
  g.require_vertex(y, "coupled_meeting_experiment");
  if (x == y) throw InputError("coupled_meeting_experiment: start vertices must differ");
  if (!graph_distance(g, x, y)) {
    throw InputError("coupled_meeting_experiment: start vertices in different components");
  }
  if (horizon < 1) throw InputError("coupled_meeting_experiment: horizon must be >= 1");
  if (trials < 1) throw InputError("coupled_meeting_experiment: trials must be >= 1");

  MeetingExperiment exp;
  exp.pair = {x, y};
  exp.trials = trials;
  exp.horizon = horizon;
  exp.seed = seed;
  exp.meeting_time.assign(static_cast<std::size_t>(trials), -1);

  const int workers = resolve_thread_count(threads);
  struct IncrementStats {
    std::int64_t steps = 0;
    double sum = 0, sum_squares = 0;
  };
  std::vector<IncrementStats> stats(static_cast<std::size_t>(workers));

  auto run_range = [&](int worker, std::int64_t begin, std::int64_t end) {
    CoupledWalkSimulator simulator(g);
    auto pair_distance = [&](int a, int b) { return *graph_distance(g, a, b); };
    for (std::int64_t trial = begin; trial < end; ++trial) {
      SplitMix64 rng(sub_seed(seed, static_cast<std::uint64_t>(trial)));
      std::pair<int, int> state{x, y};
      int prev_dist = collect_increments ? pair_distance(x, y) : 0;
      for (int t = 1; t <= horizon; ++t) {
        state = simulator.step(state, rng);
        if (collect_increments) {
          const int d = (state.first == state.second) ? 0
                                                      : pair_distance(state.first, state.second);
          const double dz = d - prev_dist;
          stats[worker].steps += 1;
          stats[worker].sum += dz;
          stats[worker].sum_squares += dz * dz;
          prev_dist = d;
        }
        if (state.first == state.second) {
          exp.meeting_time[trial] = t;
          break;
        }
      }
    }
  };

  if (workers <= 1) {
    run_range(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t begin = w * chunk;
      const std::int64_t end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, w, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& s : stats) {
    exp.increment_steps += s.steps;
    exp.increment_sum += s.sum;
    exp.increment_sum_squares += s.sum_squares;
  }

  std::vector<std::int64_t> met_at(static_cast<std::size_t>(horizon) + 1, 0);
  for (std::int64_t tau : exp.meeting_time) {
    if (tau >= 0) {
      ++met_at[tau];
      exp.met_count += 1;
      exp.mean_met += static_cast<double>(tau);
      exp.max_met = std::max(exp.max_met, tau);
    }
  }
  // tail[t] = P(tau > t) = fraction of trials whose tau exceeds t.
  exp.tail.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
  std::int64_t exceeding = trials;
  for (int t = 0; t <= horizon; ++t) {
    exceeding -= met_at[t];
    exp.tail[t] = static_cast<double>(exceeding) / static_cast<double>(trials);
  }
  if (exp.met_count > 0) exp.mean_met /= static_cast<double>(exp.met_count);
  return exp;
}

namespace {

struct TreeChain {
  int d, depth;
  std::vector<double> q;  // distribution over layers 0..depth

  TreeChain(int d_, int depth_) : d(d_), depth(depth_), q(depth_ + 1, 0.0) {
    if (d_ < 3) throw InputError("tree walk: degree must be >= 3");
    if (depth_ < 1) throw InputError("tree walk: depth must be >= 1");
    q[0] = 1.0;
  }

  void step() {
    std::vector<double> next(q.size(), 0.0);
    next[0] += 0.5 * q[0];
    next[1] += 0.5 * q[0];
    for (int k = 1; k < depth; ++k) {
      next[k] += 0.5 * q[k];
      next[k - 1] += q[k] / (2.0 * d);
      next[k + 1] += q[k] * (d - 1) / (2.0 * d);
    }
    next[depth] += 0.5 * q[depth];
    next[depth - 1] += 0.5 * q[depth];
    q.swap(next);
  }

  /// log of the number of vertices in layer k: d (d-1)^{k-1} for k >= 1.
  double log_layer_count(int k) const {
    if (k == 0) return 0.0;
    return std::log(static_cast<double>(d)) + (k - 1) * std::log(static_cast<double>(d - 1));
  }

  double entropy() const {
    Kahan h;
    for (int k = 0; k <= depth; ++k) {
      if (q[k] > 0.0) h.add(q[k] * (log_layer_count(k) - std::log(q[k])));
    }
    return h.sum;
  }
};

}  // namespace

std::vector<double> tree_layer_distribution(int d, int depth, int t) {
  if (t < 0) throw InputError("tree walk: negative time");
  TreeChain chain(d, depth);
  for (int s = 0; s < t; ++s) chain.step();
  return chain.q;
}

double tree_return_probability(int d, int depth, int t) {
  return tree_layer_distribution(d, depth, t)[0];
}

EntropySeries tree_entropy_series(int d, int depth, int t_max) {
  TreeChain chain(d, depth);
  EntropySeries series;
  series.origin = 0;
  series.mode = ArithmeticMode::floating;
  series.values.emplace_back(0, 0.0);
  for (int t = 1; t <= t_max; ++t) {
    chain.step();
    series.values.emplace_back(t, chain.entropy());
  }
  for (const auto& [t, h] : series.values) {
    if (t >= 1) series.rate_estimates.emplace_back(t, h / t);
  }
  return series;
}

RadiusSeries tree_radius_series(int d, int depth, int t_max) {
  TreeChain chain(d, depth);
  RadiusSeries series;
  series.origin = 0;
  for (int s = 1; s <= 2 * t_max; ++s) {
    chain.step();
    if (s % 2 == 0) {
      const int t = s / 2;
      series.entries.push_back({t, chain.q[0], std::pow(chain.q[0], 1.0 / (2.0 * t))});
    }
  }
  return series;
}

}  // namespace riccigap
