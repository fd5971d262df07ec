#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainbalance/cyclespace.hpp"
#include "gainbalance/gaingraph.hpp"
#include "gainbalance/graph.hpp"

namespace gainbalance {

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

/// Removes edges; vertices stay. Surviving edges keep their relative order.
struct DeletionResult {
  Graph graph;
  std::vector<EdgeIndex> edge_map;  // host edge -> new edge, kNoIndex when deleted
  std::vector<EdgeIndex> origin;    // new edge -> host edge
};
DeletionResult delete_edges(const Graph& g, const EdgeSet& s);

/// Merges the endpoints of every component of `s`. The merged vertex takes the
/// name of its least-index member and vertices keep the order of their least
/// members. Parallel edges and loops that arise are kept.
struct ContractionResult {
  Graph graph;
  std::vector<VertexId> vertex_map;  // host vertex -> new vertex
  std::vector<EdgeIndex> edge_map;   // host edge -> new edge, kNoIndex when contracted
  std::vector<EdgeIndex> origin;     // new edge -> host edge
};
ContractionResult contract_edges(const Graph& g, const EdgeSet& s);

struct MinorWitness {
  std::vector<std::vector<VertexId>> branch_sets;  // target vertex -> host vertices
  std::vector<EdgeIndex> edge_map;                  // target edge -> host edge
};

struct MinorSearchLimits {
  std::size_t max_target_vertices = 8;
  std::size_t max_target_edges = 16;
  std::size_t max_states = 2'000'000;
};

/// A verified witness that `target` is a minor of `g`, or nullopt. Targets
/// must have no isolated vertices. Throws BudgetExceeded past the limits.
std::optional<MinorWitness> has_minor(const Graph& g, const Graph& target, const MinorSearchLimits& limits = {});

/// Deletions and contractions that realise a witness: contracting `tree` in
/// g minus `deleted` gives the target plus isolated vertices.
struct MinorRealization {
  EdgeSet deleted;
  EdgeSet tree;
};
/// Nullopt when the witness is malformed.
std::optional<MinorRealization> realize_minor(const Graph& g, const Graph& target, const MinorWitness& w);
bool verify_minor_witness(const Graph& g, const Graph& target, const MinorWitness& w);

/// Basis and gains on g from basis and gains on g minus s. Forest edges of s
/// get identity gain; each other edge of s gets a circle through it whose gain
/// is forced to the identity.
std::pair<OrientedBasis, GainAssignment> lift_basis_deletion(const Graph& g, const EdgeSet& s,
                                                             const OrientedBasis& b, const GainAssignment& gains);

/// Basis and gains on g from basis and gains on g/t, t a forest. Tree paths are
/// spliced between consecutive steps; contracted edges get identity gain.
std::pair<OrientedBasis, GainAssignment> lift_basis_contraction(const Graph& g, const EdgeSet& t,
                                                                const OrientedBasis& b, const GainAssignment& gains);

/// Moves the given v-w edges to a new vertex joined to v by a new edge.
Graph extrude(const Graph& g, VertexId v, VertexId w, const std::vector<EdgeIndex>& moved,
              std::string new_vertex = {}, std::string new_edge = {});

/// One extrusion, recorded by names so it can be replayed forward.
struct ExtrusionStep {
  std::string from;        // v
  std::string neighbor;    // w
  std::string vertex;      // the extruded vertex v'
  std::string edge;        // e_v
  std::vector<std::string> moved;
};

/// Reverse of one step: contract e_v back into v.
Graph undo_extrusion(const Graph& g, const ExtrusionStep& step);
Graph apply_extrusion(const Graph& g, const ExtrusionStep& step);

/// Steps available in a loopless graph: a vertex with exactly two neighbours
/// joined to one of them by a single edge.
std::vector<ExtrusionStep> reverse_extrusion_steps(const Graph& g);
bool is_extrusion_irreducible(const Graph& g);

struct ExtrusionReduction {
  Graph irreducible;
  /// Forward steps turning `irreducible` back into the input.
  std::vector<ExtrusionStep> steps;
};

/// Exhaustive search over reverse extrusions. Returns a result whose
/// irreducible graph satisfies `prefer` when one is reachable, else the first
/// irreducible graph found.
ExtrusionReduction reverse_extrusion_reduce(const Graph& g,
                                            const std::function<bool(const Graph&)>& prefer = {});

/// Twists `side` (a union of some but not all non-edge bridges of {u, v})
/// across {u, v}, inverting its gains. Abelian gain groups only.
GainGraph whitney_twist(const GainGraph& gg, VertexId u, VertexId v, const EdgeSet& side);

enum class BridgeKind { edge, type_one, type_two };

struct Bridge {
  EdgeSet edges;
  std::vector<VertexId> inner;  // vertices other than u and v
  BridgeKind kind = BridgeKind::edge;
  /// For type I bridges: a vertex whose removal disconnects the bridge.
  std::optional<VertexId> separating_vertex;
};

struct BridgeReport {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Bridge> bridges;

  std::size_t non_edge_count() const;
};

BridgeReport bridges_of_pair(const Graph& g, VertexId u, VertexId v);
/// Some pair {u, v} has two or more non-edge bridges.
std::optional<std::pair<VertexId, VertexId>> find_two_separation(const Graph& g);
inline bool has_two_separation(const Graph& g) { return find_two_separation(g).has_value(); }

}  // namespace gainbalance
