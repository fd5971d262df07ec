#include "gainbalance/balancetests.hpp"

#include <boost/integer/common_factor.hpp>

namespace gainbalance {

std::vector<BigInt> traversal_vector(const Graph& g, const ClosedWalk& w) {
  validate_walk(g, w);
  std::vector<BigInt> v(g.edge_count(), 0);
  for (const auto& step : w.steps) v[step.edge] += step.is_forward() ? 1 : -1;
  return v;
}

bool binary_cycle_test(const GainGraph& gg, const OrientedBasis& ob) {
  validate_oriented_basis(gg.graph, ob);
  for (const auto& m : ob)
    if (!gg.group().is_identity(walk_gain(gg, m.walk))) return false;
  return true;
}

bool circle_test(const GainGraph& gg, std::span<const BinaryCycle> basis) {
  if (!is_circle_basis(gg.graph, basis)) throw GraphError("members do not form a circle basis");
  for (const auto& m : basis)
    if (!is_balanced_circle(gg, make_circle_or_throw(gg.graph, m.support))) return false;
  return true;
}

std::optional<OrientedBasis> search_binary_cycle_orientations(const GainGraph& gg,
                                                              std::span<const BinaryCycle> basis,
                                                              std::size_t budget) {
  if (!is_cycle_basis(gg.graph, basis)) throw GraphError("members do not form a basis of the binary cycle space");
  OrientedBasis out;
  for (const auto& m : basis) {
    bool found = false;
    for (auto& w : cyclic_orientations(gg.graph, m, budget)) {
      if (gg.group().is_identity(walk_gain(gg, w))) {
        out.push_back({m, std::move(w)});
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

std::vector<BigInt> UniversalAbelianReport::coordinates(const std::vector<BigInt>& z) const {
  if (z.size() != edge_count) throw GraphError("vector length does not match the edge count");
  std::vector<BigInt> y(edge_count, 0);
  for (std::size_t j = 0; j < edge_count; ++j)
    for (std::size_t k = 0; k < edge_count; ++k)
      if (z[k] != 0) y[j] += z[k] * smith.right[k][j];
  return y;
}

std::optional<BigInt> UniversalAbelianReport::order_of(const std::vector<BigInt>& z) const {
  auto y = coordinates(z);
  BigInt order = 1;
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (y[i] == 0) continue;
    if (i >= smith.rank()) return std::nullopt;
    const BigInt& d = smith.invariants[i];
    BigInt part = d / boost::integer::gcd(d, abs(y[i]));
    order = boost::integer::lcm(order, part);
  }
  return order;
}

// Closed walks have zero boundary, so switching (a coboundary) never changes
// their traversal-vector pairing; the analysis can ignore it.
UniversalAbelianReport implies_balance_abelian(const Graph& g, const OrientedBasis& b,
                                               std::span<const Circle> queries) {
  validate_oriented_basis(g, b);
  IntMatrix a;
  for (const auto& m : b) a.push_back(traversal_vector(g, m.walk));
  UniversalAbelianReport r;
  r.edge_count = g.edge_count();
  r.smith = smith_normal_form(a, g.edge_count());
  for (const auto& d : r.smith.invariants)
    if (d > 1) r.torsion.push_back(d);
  r.free_rank = g.edge_count() - r.smith.rank();
  for (const auto& q : queries) r.orders.push_back(r.order_of(traversal_vector(g, q.walk)));
  return r;
}

GainAssignment abelian_witness(const Graph& g, const OrientedBasis& b, const UniversalAbelianReport& report,
                               const Circle& z, std::int64_t d) {
  if (d < 2) throw GraphError("witness modulus must be at least 2");
  if (report.edge_count != g.edge_count()) throw GraphError("report does not belong to this graph");
  auto y = report.coordinates(traversal_vector(g, z.walk));
  const BigInt D = d;
  // A homomorphism Z^E/L -> Z_d is x -> sum_i c_i (xV)_i with c_i d_i = 0 mod d.
  // One coordinate suffices: if no single c_i y_i is nonzero, no sum is.
  std::optional<std::pair<std::size_t, BigInt>> choice;
  for (std::size_t i = 0; i < report.edge_count && !choice; ++i) {
    BigInt step = 1;
    if (i < report.smith.rank()) step = D / boost::integer::gcd(D, report.smith.invariants[i]);
    for (BigInt c = step; c < D; c += step) {
      BigInt t = (c * y[i]) % D;
      if (t != 0) {
        choice = {i, c};
        break;
      }
    }
  }
  if (!choice) throw GraphError("no Z_" + std::to_string(d) + " assignment separates the query from the basis");
  Group G = Group::cyclic(d);
  GainAssignment a = identity_gains(g, G);
  const auto [i, c] = *choice;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    BigInt v = (c * report.smith.right[e][i]) % D;
    if (v < 0) v += D;
    a.gains[e] = G.from_int(static_cast<std::int64_t>(v));
  }
  GainGraph gg{g, a};
  if (!binary_cycle_test(gg, b) || gg.group().is_identity(walk_gain(gg, z.walk)) || is_balanced(gg).balanced)
    throw std::logic_error("abelian witness failed verification");
  return a;
}

}  // namespace gainbalance
