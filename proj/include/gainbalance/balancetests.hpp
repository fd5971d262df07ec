#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gainbalance/cyclespace.hpp"
#include "gainbalance/gaingraph.hpp"
#include "gainbalance/smith.hpp"

namespace gainbalance {

/// Net signed traversal count per edge: +1 per forward step, -1 per reverse.
std::vector<BigInt> traversal_vector(const Graph& g, const ClosedWalk& w);

/// True iff every attached walk has identity gain. Throws GraphError when the
/// walks are not cyclic orientations of a basis.
bool binary_cycle_test(const GainGraph& gg, const OrientedBasis& ob);

/// True iff the canonical walk of every member has identity gain. Throws
/// GraphError unless the members form a circle basis.
bool circle_test(const GainGraph& gg, std::span<const BinaryCycle> basis);

/// Searches up to `budget` cyclic orientations per member for an identity-gain
/// one. A result means the test passes under the searched orientations; nullopt
/// is not a proof that none exists.
std::optional<OrientedBasis> search_binary_cycle_orientations(const GainGraph& gg,
                                                              std::span<const BinaryCycle> basis,
                                                              std::size_t budget);

/// Image of Z^E / L, where L is spanned by the traversal vectors of the basis
/// walks. Orders are nullopt when infinite.
struct UniversalAbelianReport {
  std::size_t edge_count = 0;
  SmithForm smith;
  std::vector<BigInt> torsion;  // invariant factors > 1
  std::size_t free_rank = 0;
  std::vector<std::optional<BigInt>> orders;

  std::size_t lattice_rank() const { return smith.rank(); }
  /// Coordinates of a vector in the diagonal basis: z * V.
  std::vector<BigInt> coordinates(const std::vector<BigInt>& z) const;
  std::optional<BigInt> order_of(const std::vector<BigInt>& z) const;
};

UniversalAbelianReport implies_balance_abelian(const Graph& g, const OrientedBasis& b,
                                               std::span<const Circle> queries);

/// Gains over Z_d that vanish on every basis walk but not on `z`. Verified
/// before return. Throws GraphError when no such assignment exists.
GainAssignment abelian_witness(const Graph& g, const OrientedBasis& b, const UniversalAbelianReport& report,
                               const Circle& z, std::int64_t d);

}  // namespace gainbalance
