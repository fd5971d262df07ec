#include <doctest.h>

#include "gainbalance/balancetests.hpp"
#include "gainbalance/classify.hpp"
#include "gainbalance/io.hpp"
#include "gainbalance/named.hpp"
#include "gainbalance/random.hpp"
#include "support.hpp"
#include "oracles.hpp"

using namespace gainbalance;

namespace {

Graph named(const char* tag) { return build_named(*parse_named(tag)); }

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int span) {
  IntMatrix a(r, std::vector<BigInt>(c));
  for (auto& row : a)
    for (auto& x : row) x = static_cast<int>(rng.below(2 * span + 1)) - span;
  return a;
}

BigInt det(const IntMatrix& a) { return oracle::det(a); }

// random circle basis: circles in shuffled order, kept while independent
std::vector<BinaryCycle> random_circle_basis(Rng& rng, const Graph& g) {
  auto cs = enumerate_circles(g);
  for (std::size_t i = cs.size(); i > 1; --i) std::swap(cs[i - 1], cs[rng.below(i)]);
  std::vector<BinaryCycle> out;
  std::vector<EdgeSet> sets;
  for (const auto& c : cs) {
    sets.push_back(c.support());
    if (gf2_rank(sets) == sets.size()) out.push_back(c.cycle);
    else sets.pop_back();
  }
  return out;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  auto snf = smith_normal_form(identity_matrix(3), 3);
  CHECK(snf.invariants == std::vector<BigInt>{1, 1, 1});
  snf = smith_normal_form({{4, 6}, {2, 2}}, 2);
  CHECK(snf.invariants == std::vector<BigInt>{2, 2});
  snf = smith_normal_form({{3}}, 1);
  CHECK(snf.invariants == std::vector<BigInt>{3});
  snf = smith_normal_form({}, 4);
  CHECK(snf.rank() == 0);
  CHECK(snf.right.size() == 4);
}

TEST_CASE("Smith normal form against determinantal divisors") {
  Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    IntMatrix a = random_matrix(rng, r, c, t % 3 == 0 ? 1 : 9);
    auto snf = smith_normal_form(a, c);
    CAPTURE(t);
    CHECK(snf.invariants == oracle::invariant_factors(a, c));
    // U A V = D with unimodular transforms
    CHECK(multiply(multiply(snf.left, a, r), snf.right, c) == snf.diagonal);
    CHECK(abs(det(snf.left)) == 1);
    CHECK(abs(det(snf.right)) == 1);
    for (std::size_t i = 0; i + 1 < snf.invariants.size(); ++i)
      CHECK(snf.invariants[i + 1] % snf.invariants[i] == 0);
  }
}

TEST_CASE("Smith invariants survive unimodular changes of basis") {
  Rng rng(42);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng.below(3);
    IntMatrix a = random_matrix(rng, n, n, 6);
    // elementary row and column operations
    IntMatrix u = identity_matrix(n), v = identity_matrix(n);
    for (int k = 0; k < 6; ++k) {
      std::size_t i = rng.below(n), j = rng.below(n);
      if (i == j) continue;
      int s = static_cast<int>(rng.below(5)) - 2;
      for (std::size_t c = 0; c < n; ++c) u[i][c] += s * u[j][c];
      for (std::size_t r = 0; r < n; ++r) v[r][i] += s * v[r][j];
    }
    IntMatrix b = multiply(multiply(u, a, n), v, n);
    CHECK(smith_normal_form(a, n).invariants == smith_normal_form(b, n).invariants);
  }
}

TEST_CASE("binary cycle test on the loop") {
  Graph g = named("K1loop");
  auto b = parse_basis("e\nwalk: e e e\n", g).oriented(g);
  Group z3 = Group::cyclic(3), z2 = Group::cyclic(2);
  GainGraph g3 = make_gain_graph(g, gains_by_id(g, z3, {{"e", z3.from_int(1)}}));
  CHECK(binary_cycle_test(g3, b));
  CHECK_FALSE(is_balanced(g3).balanced);
  GainGraph g2 = make_gain_graph(g, gains_by_id(g, z2, {{"e", z2.from_int(1)}}));
  CHECK_FALSE(binary_cycle_test(g2, b));
  auto found = search_binary_cycle_orientations(g3, basis_cycles(b), 8);
  REQUIRE(found.has_value());
  CHECK(z3.is_identity(walk_gain(g3, (*found)[0].walk)));
}

TEST_CASE("balanced gain graphs pass every test") {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    Graph g = sample_graph(rng, 2 + rng.below(4), 4 + rng.below(5), true);
    Group s3 = Group::symmetric3();
    GainGraph gg = apply_switching(make_gain_graph(g, identity_gains(g, s3)), random_switching(rng, g, s3));
    auto basis = random_circle_basis(rng, g);
    CHECK(circle_test(gg, basis));
    auto fc = fundamental_circles(g, spanning_forest(g));
    CHECK(binary_cycle_test(gg, orient_circles(fc)));
  }
}

TEST_CASE("fundamental system with natural orientations implies balance") {
  Rng rng(44);
  for (int t = 0; t < 80; ++t) {
    Graph g = sample_graph(rng, 2 + rng.below(4), 3 + rng.below(6), true);
    Group grp = t % 2 ? Group::symmetric3() : Group::cyclic(4);
    GainGraph gg = make_gain_graph(g, random_gains(rng, g, grp));
    auto fc = fundamental_circles(g, spanning_forest(g));
    if (binary_cycle_test(gg, orient_circles(fc))) CHECK(is_balanced(gg).balanced);
    else CHECK_FALSE(is_balanced(gg).balanced);
  }
}

TEST_CASE("circle test rejects non-circle members") {
  Graph g = named("2C3");
  Group z3 = Group::cyclic(3);
  GainGraph gg = make_gain_graph(g, identity_gains(g, z3));
  std::vector<BinaryCycle> b{{g.edge_set({"e1", "f1", "e2", "f2"})}, {g.edge_set({"e2", "f2"})},
                             {g.edge_set({"e3", "f3"})}, {g.edge_set({"e1", "e2", "e3"})}};
  CHECK_THROWS_AS(circle_test(gg, b), GraphError);
}

TEST_CASE("abelian orders of the known bad bases") {
  auto order_of_query = [](const BadWitness& w, std::vector<std::string> ids) {
    const Graph& g = w.gain_graph.graph;
    std::vector<Circle> q{circle_from_ids(g, ids)};
    return implies_balance_abelian(g, w.basis, q).orders[0];
  };
  CHECK(order_of_query(bad_witness(NamedGraphSpec::wheel(4)), {"r1", "r2", "r3", "r4"}) == BigInt(3));
  CHECK(order_of_query(bad_witness(NamedGraphSpec::circle_multi({3, 3, 2})), {"e31", "e31#2"}) == BigInt(3));
  CHECK(order_of_query(bad_witness(NamedGraphSpec::doubled_circle(4)), {"f1", "f2", "f3", "f4"}) == BigInt(3));

  // the 2C4 witness over Z3: f1 = f2 = f3 = 1, f4 = 2 up to switching
  auto w = bad_witness(NamedGraphSpec::doubled_circle(4));
  const Graph& g = w.gain_graph.graph;
  std::vector<Circle> q{circle_from_ids(g, {"f1", "f2", "f3", "f4"})};
  auto report = implies_balance_abelian(g, w.basis, q);
  auto gains = abelian_witness(g, w.basis, report, q[0], 3);
  GainGraph gg = make_gain_graph(g, gains);
  CHECK(circle_test(gg, basis_cycles(w.basis)));
  CHECK_FALSE(is_balanced(gg).balanced);
  // switching-invariant content, each digon read as f_i forward then e_i back:
  // digons 1..3 share a nonzero gain, digon 4 carries its inverse
  auto digon = [&](int i) {
    auto n = std::to_string(i);
    return walk_gain(gg, parse_walk(g, "f" + n + " -e" + n));
  };
  Group z3 = Group::cyclic(3);
  CHECK_FALSE(z3.is_identity(digon(1)));
  CHECK(digon(2) == digon(1));
  CHECK(digon(3) == digon(1));
  CHECK(digon(4) == z3.inverse(digon(1)));
}

TEST_CASE("fundamental bases give order one everywhere") {
  Rng rng(45);
  for (int t = 0; t < 30; ++t) {
    Graph g = sample_graph(rng, 2 + rng.below(4), 4 + rng.below(5), true);
    auto b = orient_circles(fundamental_circles(g, spanning_forest(g)));
    auto cs = enumerate_circles(g);
    auto r = implies_balance_abelian(g, b, cs);
    CHECK(r.torsion.empty());
    for (const auto& o : r.orders) CHECK(o == BigInt(1));
    if (!cs.empty()) CHECK_THROWS_AS(abelian_witness(g, b, r, cs[0], 3), GraphError);
  }
}

TEST_CASE("abelian orders agree with brute force over Z_d, d = 2..5") {
  Rng rng(46);
  int compared = 0;
  for (int t = 0; t < 120; ++t) {
    Graph g = sample_graph(rng, 1 + rng.below(4), 3 + rng.below(4), true);
    if (g.cycle_rank() == 0 || g.cycle_rank() > 4) continue;
    auto basis = random_circle_basis(rng, g);
    auto ob = orient_circles(g, basis);
    auto cs = enumerate_circles(g);
    auto r = implies_balance_abelian(g, ob, cs);
    EdgeSet forest = spanning_forest(g);
    std::vector<EdgeIndex> free;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      if (!forest.test(e)) free.push_back(e);
    for (std::int64_t d = 2; d <= 5; ++d) {
      Group zd = Group::cyclic(d);
      bool brute = false;
      std::vector<std::int64_t> digits(free.size(), 0);
      while (!brute) {
        GainAssignment a = identity_gains(g, zd);
        for (std::size_t i = 0; i < free.size(); ++i) a.gains[free[i]] = zd.from_int(digits[i]);
        GainGraph gg = make_gain_graph(g, a);
        bool basis_ok = true;
        for (const auto& m : ob) basis_ok = basis_ok && zd.is_identity(walk_gain(gg, m.walk));
        if (basis_ok)
          for (const auto& c : cs) brute = brute || !zd.is_identity(walk_gain(gg, c.walk));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == d) digits[k++] = 0;
        if (k == digits.size()) break;
      }
      bool lattice = false;
      for (const auto& o : r.orders) lattice = lattice || !o || oracle::gcd(*o, d) > 1;
      CHECK(brute == lattice);
      ++compared;
    }
  }
  CHECK(compared > 100);
}
