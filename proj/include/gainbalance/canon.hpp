#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "gainbalance/graph.hpp"

namespace gainbalance {

/// Isomorphism-invariant code of a (vertex-coloured) multigraph. Isolated
/// vertices only contribute their count.
struct CanonicalForm {
  std::size_t isolated = 0;
  std::vector<std::uint32_t> code;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// Non-isolated vertices in canonical position order.
  std::vector<VertexId> order;
  std::vector<VertexId> isolated;
};

/// Individualisation-refinement canonical labelling. `colors`, when given,
/// holds one colour per vertex and must be preserved by isomorphisms.
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors = {});
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {});

struct GraphIsomorphism {
  std::vector<VertexId> vertex_map;  // from-vertex -> to-vertex
  std::vector<EdgeIndex> edge_map;   // from-edge -> to-edge
};

/// Multigraph isomorphism ignoring edge orientation; vertex counts must agree.
std::optional<GraphIsomorphism> find_isomorphism(const Graph& from, const Graph& to);
bool isomorphic(const Graph& a, const Graph& b);

/// Copy of `g` without its isolated vertices.
Graph strip_isolated(const Graph& g);

}  // namespace gainbalance
