#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gainbalance {

using VertexId = std::size_t;
using EdgeIndex = std::size_t;

/// Bit set over the edge indices of a host graph.
using EdgeSet = boost::dynamic_bitset<>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeRecord {
  std::string id;
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  VertexId other(VertexId v) const { return v == tail ? head : tail; }
};

/// Finite multigraph with loops and parallel edges. Every edge carries a fixed
/// reference orientation tail -> head. Vertices and edges are addressed by
/// dense indices in declaration order; names and ids are kept for I/O.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(std::string name);
  /// Returns the existing vertex with this name or declares a new one.
  VertexId ensure_vertex(std::string_view name);
  EdgeIndex add_edge(std::string id, VertexId tail, VertexId head);
  EdgeIndex add_edge(std::string id, std::string_view tail, std::string_view head);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const EdgeRecord& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  VertexId vertex(std::string_view name) const;
  EdgeIndex edge_index(std::string_view id) const;

  /// Incident edge indices per vertex; a loop is listed once at its vertex.
  std::vector<std::vector<EdgeIndex>> incidence() const;
  /// Degree with loops counted twice.
  std::size_t degree(VertexId v) const;
  std::vector<std::size_t> degrees() const;
  /// Number of non-loop edges joining u and v (loops at u when u == v).
  std::size_t multiplicity(VertexId u, VertexId v) const;

  /// Component label per vertex, labels dense from 0 in vertex order.
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;
  /// |E| - |V| + #components, the dimension of the binary cycle space.
  std::size_t cycle_rank() const;
  bool has_loops() const;
  bool is_forest() const;
  std::size_t isolated_count() const;

  EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
  EdgeSet edge_set(const std::vector<std::string>& ids) const;
  std::vector<std::string> edge_ids(const EdgeSet& s) const;

 private:
  std::vector<std::string> names_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, VertexId> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

enum class Direction { forward, reverse };

struct DirectedEdge {
  EdgeIndex edge = 0;
  Direction direction = Direction::forward;

  DirectedEdge reversed() const {
    return {edge, direction == Direction::forward ? Direction::reverse : Direction::forward};
  }
  bool is_forward() const { return direction == Direction::forward; }
  bool operator==(const DirectedEdge&) const = default;
};

VertexId step_source(const Graph& g, DirectedEdge step);
VertexId step_target(const Graph& g, DirectedEdge step);

struct ClosedWalk {
  VertexId start = 0;
  std::vector<DirectedEdge> steps;

  bool trivial() const { return steps.empty(); }
  bool operator==(const ClosedWalk&) const = default;
};

/// Throws GraphError unless consecutive steps chain and the walk closes.
void validate_walk(const Graph& g, const ClosedWalk& w);
bool is_valid_walk(const Graph& g, const ClosedWalk& w);
ClosedWalk reversed_walk(const Graph& g, const ClosedWalk& w);
ClosedWalk repeated_walk(const ClosedWalk& w, std::size_t times);
/// Signed edge ids, "-" marking a reversed step.
std::string format_walk(const Graph& g, const ClosedWalk& w);

/// Maximal forest chosen greedily in edge-index order.
EdgeSet spanning_forest(const Graph& g);
/// Unique forest path from `from` to `to` as directed steps; empty when equal.
/// Throws when the vertices lie in different trees of the forest.
std::vector<DirectedEdge> forest_path(const Graph& g, const EdgeSet& forest, VertexId from,
                                      VertexId to);
bool is_maximal_forest(const Graph& g, const EdgeSet& forest);

/// Subgraph on the given edges with vertices restricted to their endpoints
/// (plus `keep_vertices` when true). Names and ids are preserved.
Graph edge_subgraph(const Graph& g, const EdgeSet& edges, bool keep_vertices = false);

/// Maximal inseparable subgraphs. Loops are blocks of their own and isolated
/// vertices are dropped.
std::vector<Graph> blocks(const Graph& g);
bool is_inseparable(const Graph& g);

/// Repeatedly replaces a degree-2 vertex with two distinct neighbours by a
/// single edge joining them. Digon vertices are left alone.
Graph suppress_divalent(const Graph& g);

}  // namespace gainbalance
