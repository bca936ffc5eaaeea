#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "riccigap/canonical.hpp"
#include "riccigap/graph.hpp"
#include "riccigap/rational.hpp"

namespace riccigap {

/// Depth-t census of rooted-ball isomorphism classes over all rootings of a
/// finite graph: the computable truncation of its local profile.
struct BallCensus {
  int depth = 0;
  std::int64_t total = 0;  // |V|
  struct ClassEntry {
    CanonicalCode code;
    std::int64_t count = 0;
    RootedBall representative;  // first rooting encountered, by vertex order
  };
  std::vector<ClassEntry> classes;  // sorted by code

  Rational frequency(std::size_t i) const { return Rational(classes[i].count, total); }
};

BallCensus ball_census(const Graph& g, int depth, int threads = 0);

/// Per-depth total-variation distance between the censuses of two graphs,
/// plus the aggregate sum of 2^{-t} tv_t. The aggregate weighting is a
/// reporting convention, chosen to discount deep disagreements the way the
/// local metric on rooted graphs discounts large radii.
struct ProfileDistance {
  std::vector<std::pair<int, Rational>> per_depth_tv;  // (t, tv_t), t = 0..t_max
  Rational aggregate;
};

ProfileDistance profile_distance(const Graph& g, const Graph& h, int t_max, int threads = 0);

/// Callback for the mass-transport verifier: receives the induced ball
/// around both roots (both marked, local indices) and returns a non-negative
/// exact amount of mass sent from the first root to the second.
using MassTransportFn =
    std::function<Rational(const Graph& ball, int root_from, int root_to)>;

struct MtpResult {
  Rational lhs;  // (1/|V|) sum_o sum_x f(o, x)
  Rational rhs;  // (1/|V|) sum_o sum_x f(x, o)
  bool equal;
};

/// Evaluates both sides of the mass-transport identity over all ordered
/// vertex pairs at distance <= radius. The callback must vanish beyond
/// `radius` and depend only on the induced ball; violations of that contract
/// are not detected.
MtpResult verify_mtp(const Graph& g, const MassTransportFn& f, int radius);

/// Max over y of |sum_x pi(x) P(x,y) - pi(y)| for pi = deg / (2|E|), exact;
/// zero on every finite graph because the degree-biased root measure is
/// stationary for the lazy walk.
Rational verify_stationarity(const Graph& g);

}  // namespace riccigap
