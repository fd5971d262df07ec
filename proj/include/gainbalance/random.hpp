#pragma once

#include <cstdint>
#include <random>

#include "gainbalance/gaingraph.hpp"

namespace gainbalance {

/// Seeded generator with a portable uniform draw, so that identical seeds give
/// identical graphs on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Connected multigraph on `vertices` vertices (a random spanning tree first,
/// then extra edges). Needs edges >= vertices - 1.
Graph random_multigraph(Rng& rng, std::size_t vertices, std::size_t edges, bool loops);

/// Uniform elements for finite groups; reduced words of length <= 3 for free groups.
GroupElement random_element(Rng& rng, const Group& group);
GainAssignment random_gains(Rng& rng, const Graph& g, const Group& group);
Switching random_switching(Rng& rng, const Graph& g, const Group& group);

}  // namespace gainbalance
