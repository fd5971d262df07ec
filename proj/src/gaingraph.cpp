#include "gainbalance/gaingraph.hpp"

#include <deque>

namespace gainbalance {

GainAssignment identity_gains(const Graph& g, const Group& group) {
  return {group, std::vector<GroupElement>(g.edge_count(), group.identity())};
}

GainAssignment gains_by_id(const Graph& g, const Group& group,
                           const std::map<std::string, GroupElement>& by_id) {
  auto a = identity_gains(g, group);
  for (const auto& [id, x] : by_id) {
    group.check(x);
    a.gains[g.edge_index(id)] = x;
  }
  return a;
}

void validate_gain_graph(const GainGraph& gg) {
  if (gg.gains.gains.size() != gg.graph.edge_count())
    throw GraphError("gain assignment has " + std::to_string(gg.gains.gains.size()) + " entries for " +
                     std::to_string(gg.graph.edge_count()) + " edges");
  for (EdgeIndex e = 0; e < gg.graph.edge_count(); ++e)
    if (!gg.group().contains(gg.gains.gains[e]))
      throw GraphError("gain of edge " + gg.graph.edge(e).id + " is not in " + gg.group().to_string());
}

GainGraph make_gain_graph(Graph g, GainAssignment gains) {
  GainGraph gg{std::move(g), std::move(gains)};
  validate_gain_graph(gg);
  return gg;
}

GroupElement step_gain(const GainGraph& gg, DirectedEdge step) {
  const auto& x = gg.gain(step.edge);
  return step.is_forward() ? x : gg.group().inverse(x);
}

GroupElement walk_gain(const GainGraph& gg, const ClosedWalk& w) {
  validate_walk(gg.graph, w);
  GroupElement acc = gg.group().identity();
  for (const auto& step : w.steps) acc = gg.group().op(acc, step_gain(gg, step));
  return acc;
}

bool is_balanced_circle(const GainGraph& gg, const Circle& c) {
  return gg.group().is_identity(walk_gain(gg, c.walk));
}

GainGraph apply_switching(const GainGraph& gg, const Switching& f) {
  if (f.size() != gg.graph.vertex_count()) throw GraphError("switching function must cover every vertex");
  const auto& G = gg.group();
  GainGraph out = gg;
  for (EdgeIndex e = 0; e < gg.graph.edge_count(); ++e) {
    const auto& rec = gg.graph.edge(e);
    out.gains.gains[e] = G.op(G.op(G.inverse(f[rec.tail]), gg.gain(e)), f[rec.head]);
  }
  return out;
}

std::pair<GainGraph, Switching> switch_to_forest(const GainGraph& gg, const EdgeSet& forest) {
  if (!is_maximal_forest(gg.graph, forest)) throw GraphError("edge set is not a maximal forest");
  const auto& G = gg.group();
  const auto n = gg.graph.vertex_count();
  Switching f(n, G.identity());
  std::vector<bool> seen(n, false);
  auto inc = gg.graph.incidence();
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (EdgeIndex e : inc[x]) {
        if (!forest.test(e)) continue;
        const auto& rec = gg.graph.edge(e);
        VertexId y = rec.other(x);
        if (seen[y]) continue;
        seen[y] = true;
        // Choose f(y) so that f(tail)^-1 g(e) f(head) = 1.
        if (rec.tail == x) f[y] = G.op(G.inverse(gg.gain(e)), f[x]);
        else f[y] = G.op(gg.gain(e), f[x]);
        queue.push_back(y);
      }
    }
  }
  return {apply_switching(gg, f), f};
}

BalanceResult is_balanced(const GainGraph& gg) {
  validate_gain_graph(gg);
  EdgeSet forest = spanning_forest(gg.graph);
  auto switched = switch_to_forest(gg, forest).first;
  BalanceResult r;
  for (EdgeIndex e = 0; e < gg.graph.edge_count(); ++e) {
    if (forest.test(e) || gg.group().is_identity(switched.gain(e))) continue;
    EdgeSet s(gg.graph.edge_count());
    s.set(e);
    const auto& rec = gg.graph.edge(e);
    for (const auto& step : forest_path(gg.graph, forest, rec.head, rec.tail)) s.set(step.edge);
    r.balanced = false;
    r.certificate = make_circle_or_throw(gg.graph, s);
    break;
  }
  return r;
}

}  // namespace gainbalance
