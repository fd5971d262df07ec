#include <doctest.h>

#include "gainbalance/cyclespace.hpp"
#include "gainbalance/io.hpp"
#include "gainbalance/named.hpp"
#include "gainbalance/random.hpp"
#include "support.hpp"
#include "oracles.hpp"

using namespace gainbalance;

namespace {

Graph named(const char* tag) { return build_named(*parse_named(tag)); }

std::uint64_t mask_of(const EdgeSet& s) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) m |= 1ULL << i;
  return m;
}

}  // namespace

TEST_CASE("circle enumeration matches subset brute force") {
  Rng rng(21);
  for (int t = 0; t < 80; ++t) {
    Graph g = sample_graph(rng, 1 + rng.below(5), 3 + rng.below(8), true);
    CAPTURE(format_graph(g));
    std::vector<std::uint64_t> got;
    for (const auto& c : enumerate_circles(g)) {
      got.push_back(mask_of(c.support()));
      CHECK(walk_projection(g, c.walk) == c.support());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::circles(g));
  }
  CHECK(enumerate_circles(named("W4")).size() == 13);
  CHECK(enumerate_circles(named("K4dd")).size() == oracle::circles(named("K4dd")).size());
}

TEST_CASE("canonical circle walks start at the least vertex") {
  Graph g = named("W4");
  for (const auto& c : enumerate_circles(g)) {
    VertexId least = g.vertex_count();
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (c.support().test(e)) least = std::min({least, g.edge(e).tail, g.edge(e).head});
    CHECK(c.walk.start == least);
    CHECK(c.walk.steps.size() == c.length());
  }
  Circle rim = circle_from_ids(g, {"r1", "r2", "r3", "r4"});
  CHECK(format_walk(g, rim.walk) == "r1 r2 r3 r4");
}

TEST_CASE("fundamental circles form a circle basis") {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    Graph g = sample_graph(rng, 1 + rng.below(6), 4 + rng.below(8), true);
    auto fc = fundamental_circles(g, spanning_forest(g));
    CHECK(fc.size() == g.cycle_rank());
    std::vector<BinaryCycle> cycles;
    std::vector<std::uint64_t> masks;
    for (const auto& c : fc) {
      cycles.push_back(c.cycle);
      masks.push_back(mask_of(c.support()));
      CHECK(oracle::is_circle(g, masks.back()));
    }
    CHECK(oracle::rank_gf2(masks) == g.cycle_rank());
    CHECK(is_circle_basis(g, cycles));
  }
  Graph tri = named("C3(1,1,1)");
  EdgeSet not_forest = tri.edge_set({"e12", "e23", "e31"});
  CHECK_THROWS_AS(fundamental_circles(tri, not_forest), GraphError);
}

TEST_CASE("basis checks reject dependent or non-cycle families") {
  Graph g = named("2C3");
  auto c = [&](std::vector<std::string> ids) { return BinaryCycle{g.edge_set(ids)}; };
  std::vector<BinaryCycle> good{c({"e1", "f1"}), c({"e2", "f2"}), c({"e3", "f3"}), c({"e1", "e2", "e3"})};
  CHECK(is_circle_basis(g, good));
  auto dependent = good;
  dependent[3] = c({"f1", "f2", "f3"});
  CHECK(gf2_rank({good[0].support, good[1].support, good[2].support, dependent[3].support}) == 4);
  dependent[3] = BinaryCycle{good[0].support ^ good[1].support};
  CHECK_FALSE(is_cycle_basis(g, dependent));
  auto odd = good;
  odd[3] = c({"e1", "e2"});
  CHECK_FALSE(is_cycle_basis(g, odd));
  // a figure eight of two digons at v2
  auto eight = good;
  eight[0] = BinaryCycle{good[0].support ^ good[1].support};
  CHECK(is_cycle_basis(g, eight));
  CHECK_FALSE(is_circle_basis(g, eight));
}

TEST_CASE("cyclic orientations project onto their binary cycle") {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    Graph g = sample_graph(rng, 2 + rng.below(5), 5 + rng.below(6), true);
    auto circles = enumerate_circles(g);
    if (circles.size() < 2) continue;
    // sum of two circles, usually not a circle
    EdgeSet s = circles[rng.below(circles.size())].support() ^ circles[rng.below(circles.size())].support();
    if (s.none()) continue;
    CHECK(is_binary_cycle(g, s));
    auto walks = cyclic_orientations(g, BinaryCycle{s}, 12);
    REQUIRE_FALSE(walks.empty());
    CHECK(walks.size() <= 12);
    for (const auto& w : walks) {
      CHECK(is_valid_walk(g, w));
      CHECK(walk_projection(g, w) == s);
    }
  }
  Graph loop = named("K1loop");
  auto walks = cyclic_orientations(loop, BinaryCycle{loop.edge_set({"e"})}, 8);
  bool triple = false;
  for (const auto& w : walks) triple |= format_walk(loop, w) == "e e e";
  CHECK(triple);
}

TEST_CASE("theta sums, improper edges and the digon condition") {
  Graph g = named("W4");
  Circle a = circle_from_ids(g, {"s1", "r1", "s2"});
  Circle b = circle_from_ids(g, {"s2", "r2", "s3"});
  auto sum = theta_sum(g, a, b);
  REQUIRE(sum.has_value());
  CHECK(sum->support() == g.edge_set({"s1", "r1", "r2", "s3"}));
  Circle far = circle_from_ids(g, {"s3", "r3", "s4"});
  CHECK_FALSE(theta_sum(g, a, far).has_value());

  std::vector<BinaryCycle> members{a.cycle, b.cycle};
  CHECK(improper_edges(g.edge_count(), members) == g.edge_set({"s1", "r1", "r2", "s3"}));

  Graph d = named("2C3");
  Circle digon = circle_from_ids(d, {"e1", "f1"});
  auto c = [&](std::vector<std::string> ids) { return BinaryCycle{d.edge_set(ids)}; };
  std::vector<BinaryCycle> fails{c({"e1", "e2", "e3"}), c({"f1", "e2", "e3"})};
  CHECK_FALSE(digon_condition(d, fails, digon));
  std::vector<BinaryCycle> holds{c({"e1", "e2", "e3"}), c({"e2", "f2"})};
  CHECK(digon_condition(d, holds, digon));
  CHECK_THROWS_AS(digon_condition(d, holds, circle_from_ids(d, {"e1", "e2", "e3"})), GraphError);
}

TEST_CASE("basis text format with walks") {
  Graph g = named("K1loop");
  auto b = parse_basis("e\nwalk: e e e\n", g);
  REQUIRE(b.fully_oriented());
  CHECK(format_walk(g, *b.walks[0]) == "e e e");
  CHECK(format_basis(g, b.oriented(g)) == "e\nwalk: e e e\n");
  Graph w = named("W4");
  auto plain = parse_basis("s1 r1 s2\ns2 r2 s3\n", w);
  CHECK_FALSE(plain.fully_oriented());
  CHECK(plain.oriented(w).size() == 2);
  try {
    parse_basis("s1 r1 s2\nwalk: s1 r2 -s2\n", w);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_basis("s1 zz\n", w), ParseError);
  CHECK_THROWS_AS(parse_basis("walk: s1\n", w), ParseError);
}
