#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainbalance/cyclespace.hpp"
#include "gainbalance/graph.hpp"
#include "gainbalance/groups.hpp"

namespace gainbalance {

/// Gains in reference orientation, one per edge index.
struct GainAssignment {
  Group group;
  std::vector<GroupElement> gains;
};

GainAssignment identity_gains(const Graph& g, const Group& group);
/// Gains by edge id; omitted edges get the identity.
GainAssignment gains_by_id(const Graph& g, const Group& group,
                           const std::map<std::string, GroupElement>& by_id);

struct GainGraph {
  Graph graph;
  GainAssignment gains;

  const Group& group() const { return gains.group; }
  const GroupElement& gain(EdgeIndex e) const { return gains.gains.at(e); }
};

/// Throws GraphError unless the assignment covers exactly the edges of the graph
/// with elements of its group.
void validate_gain_graph(const GainGraph& gg);
GainGraph make_gain_graph(Graph g, GainAssignment gains);

/// Gain of one traversal: g(e) forward, g(e)^-1 reversed.
GroupElement step_gain(const GainGraph& gg, DirectedEdge step);
/// Ordered product of step gains; the trivial walk has identity gain.
GroupElement walk_gain(const GainGraph& gg, const ClosedWalk& w);
bool is_balanced_circle(const GainGraph& gg, const Circle& c);

/// One group element per vertex.
using Switching = std::vector<GroupElement>;

/// g'(e) = f(tail)^-1 g(e) f(head).
GainGraph apply_switching(const GainGraph& gg, const Switching& f);

/// Switches so that every edge of the maximal forest `forest` has identity gain.
std::pair<GainGraph, Switching> switch_to_forest(const GainGraph& gg, const EdgeSet& forest);

struct BalanceResult {
  bool balanced = true;
  /// Unbalanced fundamental circle of least non-forest edge index.
  std::optional<Circle> certificate;
};

/// Decides balance through the fundamental circles of the greedy spanning forest.
BalanceResult is_balanced(const GainGraph& gg);

}  // namespace gainbalance
