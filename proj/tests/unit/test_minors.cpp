#include <doctest.h>

#include "gainbalance/canon.hpp"
#include "gainbalance/io.hpp"
#include "gainbalance/minors.hpp"
#include "gainbalance/named.hpp"
#include "gainbalance/random.hpp"
#include "support.hpp"
#include "oracles.hpp"

using namespace gainbalance;

namespace {

Graph named(const char* tag) { return build_named(*parse_named(tag)); }

// u and v joined by three paths of length two, plus an edge u-v
Graph theta_with_chord() {
  return parse_graph(
      "edge a1 u a\nedge a2 a v\n"
      "edge b1 u b\nedge b2 b v\n"
      "edge c1 u c\nedge c2 c v\n"
      "edge uv u v\n");
}

}  // namespace

TEST_CASE("deletion and contraction bookkeeping") {
  Graph g = named("W4");
  auto d = delete_edges(g, g.edge_set({"s1", "r2"}));
  CHECK(d.graph.edge_count() == 6);
  CHECK(d.edge_map[g.edge_index("s1")] == kNoIndex);
  CHECK(d.graph.edge(d.edge_map[g.edge_index("s2")]).id == "s2");
  for (EdgeIndex e = 0; e < d.graph.edge_count(); ++e) CHECK(d.edge_map[d.origin[e]] == e);

  auto c = contract_edges(g, g.edge_set({"s1"}));
  CHECK(c.graph.vertex_count() == 4);
  CHECK(c.graph.edge_count() == 7);
  CHECK(c.vertex_map[g.vertex("v1")] == c.vertex_map[g.vertex("w")]);
  CHECK(c.graph.vertex_name(c.vertex_map[g.vertex("v1")]) == "w");

  // contracting one edge of a digon leaves a loop
  Graph dig = named("mK2(2)");
  auto l = contract_edges(dig, dig.edge_set({"e12"}));
  CHECK(l.graph.edge_count() == 1);
  CHECK(l.graph.edge(0).is_loop());
}

TEST_CASE("minor search agrees with exhaustive delete/contract") {
  Rng rng(51);
  std::vector<Graph> targets{named("K1loop"), named("mK2(2)"), named("mK2(3)"), named("C3(1,1,1)"),
                             named("C3(2,1,1)"), named("P2P2")};
  for (int t = 0; t < 40; ++t) {
    Graph g = sample_graph(rng, 1 + rng.below(5), 2 + rng.below(5), true);
    CAPTURE(format_graph(g));
    for (const auto& target : targets) {
      CAPTURE(format_graph(target));
      auto mw = has_minor(g, target);
      CHECK(mw.has_value() == oracle::has_minor(g, target));
      if (mw) CHECK(verify_minor_witness(g, target, *mw));
    }
  }
}

TEST_CASE("named minor relations") {
  CHECK(has_minor(named("W5"), named("W4")).has_value());
  CHECK_FALSE(has_minor(named("W4"), named("2C4")).has_value());
  CHECK(has_minor(named("2C5"), named("2C4")).has_value());
  CHECK(has_minor(named("K4(2,1)"), named("K1loop")).has_value());
  CHECK_FALSE(has_minor(build_named(NamedGraphSpec::doubled_path(3)), named("C3(1,1,1)")).has_value());

  // self-minor: identity branch sets
  Graph g = named("2C4");
  auto mw = has_minor(g, g);
  REQUIRE(mw.has_value());
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(mw->branch_sets[v].size() == 1);
  std::set<EdgeIndex> image(mw->edge_map.begin(), mw->edge_map.end());
  CHECK(image.size() == g.edge_count());

  auto real = realize_minor(named("W5"), named("W4"), *has_minor(named("W5"), named("W4")));
  REQUIRE(real.has_value());
  CHECK(real->tree.count() == 1);
  CHECK(real->deleted.count() == 1);
}

TEST_CASE("minor search budget") {
  MinorSearchLimits tight;
  tight.max_states = 3;
  CHECK_THROWS_AS(has_minor(named("W6"), named("2C4"), tight), BudgetExceeded);
  Graph with_isolated = named("W4");
  with_isolated.add_vertex("lonely");
  CHECK_THROWS_AS(has_minor(named("W5"), with_isolated), GraphError);
}

TEST_CASE("lifting a basis through a deletion") {
  Graph g = named("W4");
  EdgeSet s = g.edge_set({"s2", "s4"});
  auto d = delete_edges(g, s);
  Group z5 = Group::cyclic(5);
  Rng rng(52);
  GainAssignment small = random_gains(rng, d.graph, z5);
  auto b = orient_circles(fundamental_circles(d.graph, spanning_forest(d.graph)));
  auto [lb, lg] = lift_basis_deletion(g, s, b, small);
  CHECK(lb.size() == g.cycle_rank());
  validate_oriented_basis(g, lb);
  GainGraph big = make_gain_graph(g, lg);
  GainGraph little = make_gain_graph(d.graph, small);
  // old members keep their gains, new members are balanced
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(walk_gain(big, lb[i].walk) == walk_gain(little, b[i].walk));
  }
  for (std::size_t i = b.size(); i < lb.size(); ++i) CHECK(z5.is_identity(walk_gain(big, lb[i].walk)));
  CHECK(is_balanced(big).balanced == is_balanced(little).balanced);
}

TEST_CASE("lifting a basis through a contraction") {
  Graph g = named("W5");
  EdgeSet t = g.edge_set({"r5"});
  auto c = contract_edges(g, t);
  Group z3 = Group::cyclic(3);
  Rng rng(53);
  GainAssignment small = random_gains(rng, c.graph, z3);
  auto b = orient_circles(fundamental_circles(c.graph, spanning_forest(c.graph)));
  auto [lb, lg] = lift_basis_contraction(g, t, b, small);
  validate_oriented_basis(g, lb);
  GainGraph big = make_gain_graph(g, lg);
  GainGraph little = make_gain_graph(c.graph, small);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(walk_gain(big, lb[i].walk) == walk_gain(little, b[i].walk));
  CHECK(is_balanced(big).balanced == is_balanced(little).balanced);
}

TEST_CASE("extrusion and its reverse") {
  Graph g = named("K4(2,1)");
  VertexId v1 = g.vertex("v1"), v2 = g.vertex("v2");
  std::vector<EdgeIndex> moved{g.edge_index("e12"), g.edge_index("e12#2")};
  Graph x = extrude(g, v1, v2, moved);
  CHECK(x.vertex_count() == 5);
  CHECK(x.edge_count() == 8);
  CHECK(x.find_vertex("v1'").has_value());
  auto steps = reverse_extrusion_steps(x);
  REQUIRE_FALSE(steps.empty());
  bool back = false;
  for (const auto& s : steps) back |= isomorphic(undo_extrusion(x, s), g);
  CHECK(back);
  for (const auto& s : steps) CHECK(isomorphic(apply_extrusion(undo_extrusion(x, s), s), x));

  auto red = reverse_extrusion_reduce(x);
  CHECK(is_extrusion_irreducible(red.irreducible));
  Graph replay = red.irreducible;
  for (const auto& s : red.steps) replay = apply_extrusion(replay, s);
  CHECK(isomorphic(replay, x));
  CHECK(is_extrusion_irreducible(named("W4")));
}

TEST_CASE("bridges of a pair") {
  Graph g = theta_with_chord();
  auto r = bridges_of_pair(g, g.vertex("u"), g.vertex("v"));
  CHECK(r.bridges.size() == 4);
  CHECK(r.non_edge_count() == 3);
  for (const auto& b : r.bridges) {
    if (b.kind == BridgeKind::edge) continue;
    CHECK(b.kind == BridgeKind::type_one);
    REQUIRE(b.separating_vertex.has_value());
    CHECK(b.inner == std::vector<VertexId>{*b.separating_vertex});
  }
  auto sep = find_two_separation(g);
  REQUIRE(sep.has_value());

  // a 2P2 bridge between u and v is of type II
  Graph h = parse_graph("edge p1 u m\nedge p2 u m\nedge q1 m v\nedge q2 m v\nedge a1 u a\nedge a2 a v\n");
  auto rh = bridges_of_pair(h, h.vertex("u"), h.vertex("v"));
  int two = 0;
  for (const auto& b : rh.bridges) two += b.kind == BridgeKind::type_two;
  CHECK(two == 1);
  CHECK_FALSE(has_two_separation(named("W4")));
  CHECK_FALSE(has_two_separation(named("K4dd")));
  CHECK(has_two_separation(named("2C4")));
}

TEST_CASE("Whitney twists preserve balance") {
  Graph g = theta_with_chord();
  VertexId u = g.vertex("u"), v = g.vertex("v");
  EdgeSet side = g.edge_set({"a1", "a2"});
  Rng rng(54);
  for (int t = 0; t < 100; ++t) {
    Group grp = t % 2 ? Group::cyclic(3) : parse_group("Z2xZ4");
    GainGraph gg = make_gain_graph(g, random_gains(rng, g, grp));
    if (t % 3 == 0) gg = apply_switching(make_gain_graph(g, identity_gains(g, grp)), random_switching(rng, g, grp));
    GainGraph tw = whitney_twist(gg, u, v, side);
    CHECK(is_balanced(tw).balanced == is_balanced(gg).balanced);
    CHECK(tw.graph.edge_count() == g.edge_count());
  }
  GainGraph s3 = make_gain_graph(g, identity_gains(g, Group::symmetric3()));
  CHECK_THROWS_AS(whitney_twist(s3, u, v, side), GraphError);
  GainGraph z3 = make_gain_graph(g, identity_gains(g, Group::cyclic(3)));
  CHECK_THROWS_AS(whitney_twist(z3, u, v, g.edge_set({"a1"})), GraphError);
}
