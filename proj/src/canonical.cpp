#include "riccigap/canonical.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace riccigap {
namespace {

constexpr std::size_t kSearchBudget = 1u << 21;

struct Labeler {
  const Graph& g;
  const std::vector<int>& layer_of;
  std::size_t nodes_visited = 0;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  explicit Labeler(const RootedBall& b) : g(b.subgraph), layer_of(b.layer_of) {}

  int refine(std::vector<int>& color) const {
    const int n = g.vertex_count();
    int classes = 1 + *std::max_element(color.begin(), color.end());
    for (;;) {
      // Signature = (current color, sorted neighbor colors). Ranking sorted
      // signatures keeps the class order independent of vertex labels.
      std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        auto& sig = sigs[v].first;
        sig.push_back(color[v]);
        for (int w : g.neighbors(v)) sig.push_back(color[w]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[v].second = v;
      }
      auto sorted = sigs;
      std::sort(sorted.begin(), sorted.end());
      int next = -1;
      std::vector<int> fresh(static_cast<std::size_t>(n));
      const std::vector<int>* prev = nullptr;
      for (const auto& [sig, v] : sorted) {
        if (prev == nullptr || sig != *prev) ++next;
        fresh[v] = next;
        prev = &sig;
      }
      const int refined = next + 1;
      color.swap(fresh);
      if (refined == classes) return classes;
      classes = refined;
    }
  }

  std::vector<int> class_members(const std::vector<int>& color, int c) const {
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (color[v] == c) members.push_back(v);
    }
    return members;
  }

  /// True iff every pair in the class is interchangeable by a transposition
  /// automorphism: identical neighborhoods outside the class, and the class
  /// induces a complete or an empty subgraph.
  bool all_twins(const std::vector<int>& members) const {
    std::vector<int> in_class(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : members) in_class[v] = 1;
    std::vector<int> outside0;
    int inside0 = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<int> outside;
      int inside = 0;
      for (int w : g.neighbors(members[i])) {
        if (in_class[w]) {
          ++inside;
        } else {
          outside.push_back(w);
        }
      }
      if (i == 0) {
        outside0 = std::move(outside);
        inside0 = inside;
      } else if (outside != outside0 || inside != inside0) {
        return false;
      }
    }
    const int k = static_cast<int>(members.size());
    return inside0 == 0 || inside0 == k - 1;
  }

  void serialize_leaf(const std::vector<int>& color) {
    const int n = g.vertex_count();
    std::vector<int> vertex_at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;

    std::vector<std::uint8_t> bytes;
    bytes.reserve(static_cast<std::size_t>(n) * 4 + 4);
    auto put16 = [&bytes](int value) {
      bytes.push_back(static_cast<std::uint8_t>(value & 0xFF));
      bytes.push_back(static_cast<std::uint8_t>((value >> 8) & 0xFF));
    };
    put16(n);
    for (int i = 0; i < n; ++i) put16(layer_of[vertex_at[i]]);
    std::vector<int> nb;
    for (int i = 0; i < n; ++i) {
      const int v = vertex_at[i];
      nb.clear();
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      put16(static_cast<int>(nb.size()));
      for (int c : nb) put16(c);
    }
    if (!have_best || bytes < best) {
      best = std::move(bytes);
      have_best = true;
    }
  }

  void search(std::vector<int> color) {
    if (++nodes_visited > kSearchBudget) {
      throw CapabilityError("canonical_code: labeling search budget exceeded");
    }
    const int n = g.vertex_count();
    int target = -1;
    {
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v) ++count[color[v]];
      for (int c = 0; c < n; ++c) {
        if (count[c] >= 2) {
          target = c;
          break;
        }
      }
    }
    if (target < 0) {
      serialize_leaf(color);
      return;
    }
    std::vector<int> members = class_members(color, target);
    const std::size_t branches = all_twins(members) ? 1 : members.size();
    for (std::size_t i = 0; i < branches; ++i) {
      std::vector<int> next(color.size());
      for (int v = 0; v < n; ++v) {
        if (color[v] < target) {
          next[v] = color[v];
        } else if (color[v] == target) {
          next[v] = (v == members[i]) ? target : target + 1;
        } else {
          next[v] = color[v] + 1;
        }
      }
      refine(next);
      search(std::move(next));
    }
  }
};

}  // namespace

CanonicalCode canonical_code(const RootedBall& b) {
  const int n = b.subgraph.vertex_count();
  if (n == 0 || b.root != 0 || static_cast<int>(b.layer_of.size()) != n || b.layer_of[0] != 0) {
    throw InputError("canonical_code: malformed rooted ball");
  }
  if (n > 0xFFFF) throw CapabilityError("canonical_code: ball larger than 65535 vertices");

  Labeler labeler(b);
  // Initial coloring by (layer, degree); the root is alone in layer 0.
  std::vector<std::pair<std::pair<int, int>, int>> keyed;
  keyed.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    keyed.push_back({{b.layer_of[v], b.subgraph.degree(v)}, v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> color(static_cast<std::size_t>(n));
  int next = -1;
  const std::pair<int, int>* prev = nullptr;
  for (const auto& [key, v] : keyed) {
    if (prev == nullptr || key != *prev) ++next;
    color[v] = next;
    prev = &key;
  }
  labeler.refine(color);
  labeler.search(std::move(color));
  return CanonicalCode{std::move(labeler.best)};
}

std::string to_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.bytes.size() * 2);
  for (std::uint8_t b : code.bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

}  // namespace riccigap
