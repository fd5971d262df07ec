#include "gainbalance/random.hpp"

#include <limits>

namespace gainbalance {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // rejection keeps the draw exactly uniform
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

Graph random_multigraph(Rng& rng, std::size_t vertices, std::size_t edges, bool loops) {
  if (vertices == 0 || edges + 1 < vertices) throw GraphError("random_multigraph: too few edges for a connected graph");
  if (vertices == 1 && !loops && edges > 0) throw GraphError("random_multigraph: one vertex needs loops");
  Graph g;
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  std::size_t next = 1;
  auto add = [&](VertexId a, VertexId b) {
    if (rng.coin()) std::swap(a, b);
    g.add_edge("e" + std::to_string(next++), a, b);
  };
  for (VertexId v = 1; v < vertices; ++v) add(static_cast<VertexId>(rng.below(v)), v);
  while (g.edge_count() < edges) {
    auto a = static_cast<VertexId>(rng.below(vertices));
    auto b = static_cast<VertexId>(rng.below(vertices));
    if (a == b && (!loops || rng.below(4) != 0)) continue;
    add(a, b);
  }
  return g;
}

GroupElement random_element(Rng& rng, const Group& group) {
  if (group.is_finite()) {
    auto all = group.elements();
    return all[rng.below(all.size())];
  }
  GroupElement x = group.identity();
  const auto symbols = static_cast<std::int64_t>(group.symbols().size());
  auto len = rng.below(4);
  for (std::uint64_t i = 0; i < len; ++i) {
    auto s = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(symbols))) + 1;
    x = group.op(x, GroupElement{{rng.coin() ? s : -s}});
  }
  return x;
}

GainAssignment random_gains(Rng& rng, const Graph& g, const Group& group) {
  GainAssignment a{group, {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) a.gains.push_back(random_element(rng, group));
  return a;
}

Switching random_switching(Rng& rng, const Graph& g, const Group& group) {
  Switching f;
  for (VertexId v = 0; v < g.vertex_count(); ++v) f.push_back(random_element(rng, group));
  return f;
}

}  // namespace gainbalance
