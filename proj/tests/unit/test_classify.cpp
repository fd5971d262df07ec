#include <doctest.h>

#include "gainbalance/balancetests.hpp"
#include "gainbalance/canon.hpp"
#include "gainbalance/classify.hpp"
#include "gainbalance/named.hpp"
#include "oracles.hpp"

using namespace gainbalance;

namespace {

Graph named(const char* tag) { return build_named(*parse_named(tag)); }

// all multigraphs with exactly m edges and no isolated vertices, by brute
// force over endpoint lists on 2m labelled vertices, deduplicated by the
// permutation oracle
std::size_t count_multigraphs(std::size_t m) {
  std::vector<Graph> reps;
  std::size_t n = 2 * m;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) pairs.push_back({a, b});
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    if (std::is_sorted(pick.begin(), pick.end())) {
      Graph g;
      for (std::size_t v = 0; v < n; ++v) g.add_vertex("x" + std::to_string(v));
      for (std::size_t i = 0; i < m; ++i)
        g.add_edge("e" + std::to_string(i), static_cast<VertexId>(pairs[pick[i]].first),
                   static_cast<VertexId>(pairs[pick[i]].second));
      bool fresh = true;
      for (const auto& r : reps)
        if (oracle::isomorphic(r, g)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(g);
    }
    std::size_t k = 0;
    while (k < m && ++pick[k] == pairs.size()) pick[k++] = 0;
    if (k == m) break;
  }
  return reps.size();
}

}  // namespace

TEST_CASE("enumeration counts match brute force") {
  auto all = enumerate_multigraphs(3);
  std::vector<std::size_t> by_size(4, 0);
  for (const auto& g : all) {
    CHECK(g.isolated_count() == 0);
    ++by_size[g.edge_count()];
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    CHECK(by_size[m] == count_multigraphs(m));
  }
  // no two outputs isomorphic
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(isomorphic(all[i], all[j]));
}

TEST_CASE("known witnesses verify") {
  for (const char* tag : {"K1loop", "C3(3,3,2)", "2C4", "K4dd", "W4", "W6", "2C6", "W8", "2C8"}) {
    CAPTURE(tag);
    auto w = bad_witness(*parse_named(tag));
    CHECK(verify_bad_witness(w));
    CHECK_FALSE(is_balanced(w.gain_graph).balanced);
    if (w.test == TestKind::circle) {
      CHECK(is_circle_basis(w.gain_graph.graph, basis_cycles(w.basis)));
      CHECK(circle_test(w.gain_graph, basis_cycles(w.basis)));
    }
  }
  CHECK(bad_witness(NamedGraphSpec::wheel(6)).gain_graph.group() == Group::cyclic(5));
  CHECK(bad_witness(NamedGraphSpec::loop_vertex(), 5).gain_graph.group() == Group::cyclic(5));
  CHECK_THROWS_AS(bad_witness(NamedGraphSpec::loop_vertex(), 4), GraphError);
  CHECK_THROWS_AS(bad_witness(NamedGraphSpec::wheel(5)), GraphError);
  // a tampered witness is rejected
  auto w = bad_witness(NamedGraphSpec::wheel(4));
  w.gain_graph.gains.gains[w.gain_graph.graph.edge_index("r1")] = Group::cyclic(3).from_int(2);
  CHECK_FALSE(verify_bad_witness(w));
}

TEST_CASE("binary cycle goodness") {
  auto z3 = parse_group_class("groups:Z3");
  auto tri = binary_cycle_goodness(named("C3(1,1,1)"), z3);
  CHECK(tri.status == Status::bad);
  REQUIRE(tri.witness.has_value());
  CHECK(verify_bad_witness(*tri.witness));
  CHECK(tri.minor == "K1loop");
  CHECK(binary_cycle_goodness(named("W4"), parse_group_class("groups:Z2")).status == Status::good);
  CHECK(binary_cycle_goodness(named("P2P2"), parse_group_class("abelian")).status == Status::bad);
  Graph path;
  path.add_edge("a", "x", "y");
  path.add_edge("b", "y", "z");
  CHECK(binary_cycle_goodness(path, z3).status == Status::good);
  CHECK(binary_cycle_goodness(named("W4"), parse_group_class("groups:S3")).status == Status::bad);
}

TEST_CASE("circle goodness on the quartet and its neighbours") {
  auto c = parse_group_class("contains-z3");
  for (const char* tag : {"C3(3,3,2)", "2C4", "K4dd", "W4"}) {
    CAPTURE(tag);
    auto v = circle_goodness(named(tag), c);
    CHECK(v.status == Status::bad);
    CHECK(v.rule == "Thm Validity of the Circle Test");
    REQUIRE(v.witness.has_value());
    CHECK(verify_bad_witness(*v.witness));
  }
  auto good = circle_goodness(named("K4(2,1)"), c);
  CHECK(good.status == Status::good);
  REQUIRE(good.decomposition.has_value());
  for (const auto& b : good.decomposition->blocks) CHECK(replay_block(b));

  auto w6 = circle_goodness(named("W6"), parse_group_class("groups:Z5"));
  CHECK(w6.status == Status::bad);
  CHECK(w6.minor == "W6");
  CHECK(circle_goodness(named("W6"), parse_group_class("groups:Z2")).status == Status::unknown);
}

TEST_CASE("lifted witnesses stay bad") {
  Graph host = named("W5");
  Graph minor = named("W4");
  auto mw = has_minor(host, minor);
  REQUIRE(mw.has_value());
  auto lifted = lift_witness(host, minor, bad_witness(NamedGraphSpec::wheel(4)), *mw);
  CHECK(verify_bad_witness(lifted));
  CHECK(lifted.gain_graph.graph.edge_count() == host.edge_count());
}

TEST_CASE("oracle instances") {
  Group z3 = Group::cyclic(3);
  CHECK(oracle_circle_goodness(named("2C3"), z3).good);
  auto bad = oracle_circle_goodness(named("2C4"), z3);
  CHECK_FALSE(bad.good);
  REQUIRE(bad.counterexample.has_value());
  CHECK(verify_bad_witness(*bad.counterexample));
  CHECK(oracle_circle_goodness(named("C3(3,3,2)"), Group::cyclic(2)).good);
  CHECK_FALSE(oracle_circle_goodness(named("C3(3,3,2)"), z3).good);
  OracleOptions tiny;
  tiny.max_assignments = 2;
  CHECK_THROWS_AS(oracle_circle_goodness(named("W4"), z3, tiny), BudgetExceeded);
}

TEST_CASE("classifier never contradicts the oracle on small inseparable graphs") {
  // includes the 8-edge quartet, where Bad verdicts occur
  EnumerationOptions opts;
  opts.connected = true;
  int bad_checked = 0;
  for (const auto& g : enumerate_multigraphs(8, opts)) {
    if (!is_inseparable(g) || g.cycle_rank() > 6) continue;
    auto v = circle_goodness(g, parse_group_class("groups:Z3"));
    if (v.status == Status::unknown) continue;
    auto r = oracle_circle_goodness(g, Group::cyclic(3));
    CHECK(r.good == (v.status == Status::good));
    bad_checked += v.status == Status::bad;
  }
  CHECK(bad_checked >= 4);
}
