#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gainbalance/graph.hpp"

namespace gainbalance {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the binary cycle space: an edge set with even degree everywhere.
struct BinaryCycle {
  EdgeSet support;

  bool operator==(const BinaryCycle&) const = default;
};

bool is_binary_cycle(const Graph& g, const EdgeSet& support);

/// A circle together with its canonical simple closed walk: it starts at the
/// least-index vertex and takes the direction whose edge sequence is smaller.
struct Circle {
  BinaryCycle cycle;
  ClosedWalk walk;

  const EdgeSet& support() const { return cycle.support; }
  std::size_t length() const { return cycle.support.count(); }
  bool operator==(const Circle& o) const { return cycle == o.cycle; }
};

/// Nullopt unless `support` is connected and 2-regular (a loop counts twice).
std::optional<Circle> make_circle(const Graph& g, const EdgeSet& support);
Circle make_circle_or_throw(const Graph& g, const EdgeSet& support);
bool is_circle(const Graph& g, const EdgeSet& support);
/// Canonical circle from edge ids.
Circle circle_from_ids(const Graph& g, const std::vector<std::string>& ids);

/// Mod-2 edge counts of a walk.
EdgeSet walk_projection(const Graph& g, const ClosedWalk& w);

struct OrientedMember {
  BinaryCycle cycle;
  ClosedWalk walk;
};
using OrientedBasis = std::vector<OrientedMember>;

/// Members of an oriented basis, as binary cycles.
std::vector<BinaryCycle> basis_cycles(const OrientedBasis& b);
/// Circles oriented by their canonical walks.
OrientedBasis orient_circles(const std::vector<Circle>& circles);
OrientedBasis orient_circles(const Graph& g, const std::vector<BinaryCycle>& circles);

std::size_t gf2_rank(std::vector<EdgeSet> vectors);
/// Binary cycles, independent, spanning the cycle space.
bool is_cycle_basis(const Graph& g, std::span<const BinaryCycle> members);
/// As is_cycle_basis, with every member a circle.
bool is_circle_basis(const Graph& g, std::span<const BinaryCycle> members);
/// Throws GraphError unless every walk projects onto its cycle and the cycles
/// form a basis.
void validate_oriented_basis(const Graph& g, const OrientedBasis& b);

/// One circle per non-forest edge, in edge-index order. Throws GraphError if
/// `forest` is not a maximal forest.
std::vector<Circle> fundamental_circles(const Graph& g, const EdgeSet& forest);

/// All circles, each once, sorted by length and then by support. Throws
/// BudgetExceeded when |E| exceeds `max_edges`.
std::vector<Circle> enumerate_circles(const Graph& g, std::size_t max_edges = 24);

/// Closed walks projecting onto `b`. The first is canonical: an Euler circuit
/// per support component (least edges first), the components linked through
/// a spanning forest by out-and-back paths. Alternatives follow: reversal,
/// other Euler circuits, then odd repetitions. At most `budget` walks.
std::vector<ClosedWalk> cyclic_orientations(const Graph& g, const BinaryCycle& b, std::size_t budget);

/// The circle c1 + c2 when c1 u c2 is a theta graph.
std::optional<Circle> theta_sum(const Graph& g, const Circle& c1, const Circle& c2);

/// Edges lying in exactly one member.
EdgeSet improper_edges(std::size_t edge_count, std::span<const BinaryCycle> members);

/// True iff no member equals the digon `d` and no two members sum to it.
/// Throws GraphError when `d` is not a digon.
bool digon_condition(const Graph& g, std::span<const BinaryCycle> members, const Circle& d);

}  // namespace gainbalance
