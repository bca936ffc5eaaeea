#include "riccigap/local_profile.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "riccigap/parallel.hpp"
#include "riccigap/transport.hpp"

namespace riccigap {
namespace {

constexpr std::int64_t kMaxBallVertices = 200000;
constexpr std::int64_t kMaxCensusVertices = 2000000;

}  // namespace

BallCensus ball_census(const Graph& g, int depth, int threads) {
  const int n = g.vertex_count();
  if (n == 0) throw InputError("ball_census: empty graph");
  if (depth < 0) throw InputError("ball_census: negative depth");
  if (n > kMaxCensusVertices) {
    throw CapabilityError("ball_census: guarded at " + std::to_string(kMaxCensusVertices) +
                          " vertices");
  }

  std::vector<CanonicalCode> codes(static_cast<std::size_t>(n));
  std::vector<RootedBall> balls(static_cast<std::size_t>(n));
  parallel_for(
      static_cast<std::size_t>(n),
      [&](std::size_t v) {
        RootedBall b = ball(g, static_cast<int>(v), depth);
        if (b.subgraph.vertex_count() > kMaxBallVertices) {
          throw CapabilityError("ball_census: ball at vertex " + std::to_string(v) +
                                " exceeds " + std::to_string(kMaxBallVertices) + " vertices");
        }
        codes[v] = canonical_code(b);
        balls[v] = std::move(b);
      },
      threads);

  std::map<CanonicalCode, std::size_t> index;
  BallCensus census;
  census.depth = depth;
  census.total = n;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = index.try_emplace(codes[v], census.classes.size());
    if (fresh) {
      census.classes.push_back({codes[v], 0, std::move(balls[v])});
    }
    census.classes[it->second].count += 1;
  }
  std::sort(census.classes.begin(), census.classes.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  return census;
}

ProfileDistance profile_distance(const Graph& g, const Graph& h, int t_max, int threads) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    throw InputError("profile_distance: empty graph");
  }
  if (t_max < 0) throw InputError("profile_distance: negative depth");

  ProfileDistance out;
  out.aggregate = 0;
  Rational weight = 1;
  for (int t = 0; t <= t_max; ++t) {
    const BallCensus a = ball_census(g, t, threads);
    const BallCensus b = ball_census(h, t, threads);
    // TV over the union of class codes; codes are comparable only at equal depth.
    std::map<CanonicalCode, Rational> diff;
    for (std::size_t i = 0; i < a.classes.size(); ++i) diff[a.classes[i].code] += a.frequency(i);
    for (std::size_t i = 0; i < b.classes.size(); ++i) diff[b.classes[i].code] -= b.frequency(i);
    Rational tv = 0;
    for (const auto& [code, delta] : diff) tv += abs(delta);
    tv /= 2;
    out.per_depth_tv.emplace_back(t, tv);
    out.aggregate += weight * tv;
    weight /= 2;
  }
  return out;
}

namespace {

/// Induced subgraph on the union of the radius-balls around o and x, with
/// canonical local ordering (sorted original indices).
struct DoubleBall {
  Graph ball;
  int o_local;
  int x_local;
};

DoubleBall double_ball(const Graph& g, int o, int x, int radius) {
  std::vector<int> members;
  for (int root : {o, x}) {
    RootedBall b = ball(g, root, radius);
    members.insert(members.end(), b.original_vertex.begin(), b.original_vertex.end());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int w : g.neighbors(members[i])) {
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
    }
  }
  return {Graph::from_edges(static_cast<int>(members.size()), std::move(edges)), local[o],
          local[x]};
}

}  // namespace

MtpResult verify_mtp(const Graph& g, const MassTransportFn& f, int radius) {
  const int n = g.vertex_count();
  if (n == 0) throw InputError("verify_mtp: empty graph");
  if (radius < 0) throw InputError("verify_mtp: negative radius");

  Rational lhs = 0, rhs = 0;
  for (int o = 0; o < n; ++o) {
    const RootedBall around = ball(g, o, radius);
    for (int x : around.original_vertex) {
      const DoubleBall db = double_ball(g, o, x, radius);
      lhs += f(db.ball, db.o_local, db.x_local);
      rhs += f(db.ball, db.x_local, db.o_local);
    }
  }
  lhs /= n;
  rhs /= n;
  return {lhs, rhs, lhs == rhs};
}

Rational verify_stationarity(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw InputError("verify_stationarity: empty graph");
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw InputError("verify_stationarity: isolated vertex " + std::to_string(v));
    }
  }
  const Rational degree_sum = Rational(2 * g.edge_count());
  Rational residual = 0;
  for (int y = 0; y < n; ++y) {
    const Rational pi_y = Rational(g.degree(y)) / degree_sum;
    Rational mass = pi_y * Rational(1, 2);
    for (int x : g.neighbors(y)) {
      mass += (Rational(g.degree(x)) / degree_sum) * Rational(1, 2 * g.degree(x));
    }
    const Rational gap = abs(mass - pi_y);
    residual = std::max(residual, gap);
  }
  return residual;
}

}  // namespace riccigap
