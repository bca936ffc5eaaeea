#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "riccigap/graph.hpp"

namespace riccigap {

/// Isomorphism-class fingerprint of a rooted ball: two codes are equal iff
/// the balls are root-preserving isomorphic.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

/// Exact canonical form. Layer-respecting iterative color refinement, then
/// backtracking over tied color classes selecting the lexicographically
/// minimal adjacency serialization. Mutually-twin classes are branched once,
/// which keeps highly symmetric balls (stars, cliques, tree layers) cheap.
CanonicalCode canonical_code(const RootedBall& b);

std::string to_hex(const CanonicalCode& code);

}  // namespace riccigap
