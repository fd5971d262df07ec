#pragma once

#include <algorithm>

#include "gainbalance/random.hpp"

// random_multigraph with the edge count raised to what connectivity needs
inline gainbalance::Graph sample_graph(gainbalance::Rng& rng, std::size_t vertices, std::size_t edges, bool loops) {
  if (vertices == 1 && !loops) vertices = 2;
  return gainbalance::random_multigraph(rng, vertices, std::max(edges, vertices - 1), loops);
}
