#include "gainbalance/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "gainbalance/balancetests.hpp"
#include "gainbalance/canon.hpp"

namespace gainbalance {

std::string to_string(Status s) {
  switch (s) {
    case Status::good:
      return "Good";
    case Status::bad:
      return "Bad";
    case Status::unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string to_string(TestKind t) { return t == TestKind::circle ? "circle" : "binary-cycle"; }

bool verify_bad_witness(const BadWitness& w) {
  try {
    const auto& gg = w.gain_graph;
    validate_gain_graph(gg);
    if (is_balanced(gg).balanced) return false;
    if (w.test == TestKind::circle) {
      auto cycles = basis_cycles(w.basis);
      return circle_test(gg, cycles);
    }
    return binary_cycle_test(gg, w.basis);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

OrientedBasis circles_by_ids(const Graph& g, const std::vector<std::vector<std::string>>& members) {
  std::vector<Circle> circles;
  for (const auto& ids : members) circles.push_back(circle_from_ids(g, ids));
  return orient_circles(circles);
}

std::string id(char c, int i) { return std::string(1, c) + std::to_string(i); }

BadWitness finish(BadWitness w) {
  if (!verify_bad_witness(w)) throw std::logic_error("bad witness construction failed verification");
  return w;
}

}  // namespace

BadWitness bad_witness(const NamedGraphSpec& spec, std::optional<std::int64_t> modulus) {
  Graph g = build_named(spec);
  switch (spec.family) {
    case Family::loop_vertex: {
      std::int64_t k = modulus.value_or(3);
      if (k < 3 || k % 2 == 0) throw GraphError("the loop witness needs an odd modulus k >= 3");
      Group G = Group::cyclic(k);
      auto gains = identity_gains(g, G);
      gains.gains[0] = G.generator();
      ClosedWalk once{0, {{0, Direction::forward}}};
      OrientedBasis b{{BinaryCycle{g.edge_set({"e"})}, repeated_walk(once, static_cast<std::size_t>(k))}};
      return finish({GainGraph{g, gains}, b, TestKind::binary_cycle});
    }
    case Family::circle_multi: {
      if (spec.params != std::vector<int>{3, 3, 2}) break;
      Group G = Group::cyclic(3);
      auto gains = gains_by_id(g, G,
                               {{"e12#2", G.from_int(1)},
                                {"e12#3", G.from_int(2)},
                                {"e23#2", G.from_int(1)},
                                {"e23#3", G.from_int(2)},
                                {"e31#2", G.from_int(1)}});
      auto b = circles_by_ids(g, {{"e12", "e23", "e31"},
                                  {"e12#2", "e23#3", "e31"},
                                  {"e12#3", "e23#2", "e31"},
                                  {"e12#2", "e23#2", "e31#2"},
                                  {"e12", "e23#3", "e31#2"},
                                  {"e12#3", "e23", "e31#2"}});
      return finish({GainGraph{g, gains}, b, TestKind::circle});
    }
    case Family::k4_adjacent_doubled: {
      Group G = Group::cyclic(3);
      auto gains = gains_by_id(g, G,
                               {{"e31", G.from_int(1)},
                                {"e2#2", G.from_int(1)},
                                {"e23", G.from_int(1)},
                                {"e1#2", G.from_int(2)}});
      auto b = circles_by_ids(g, {{"e31", "e12", "e2#2", "e3"},
                                  {"e23", "e12", "e1#2", "e3"},
                                  {"e12", "e1", "e2"},
                                  {"e1#2", "e2", "e23", "e31"},
                                  {"e1", "e2#2", "e23", "e31"}});
      return finish({GainGraph{g, gains}, b, TestKind::circle});
    }
    case Family::doubled_circle: {
      const int n = spec.params.at(0);
      if (n < 4 || n % 2) break;
      if (n == 4) {
        // Odd-sequence basis: position i uses f_i where the sequence has a 1.
        Group G = Group::cyclic(3);
        auto gains = gains_by_id(g, G,
                                 {{"f1", G.from_int(1)}, {"f2", G.from_int(1)}, {"f3", G.from_int(1)},
                                  {"f4", G.from_int(2)}});
        std::vector<std::vector<std::string>> members;
        for (const char* seq : {"0000", "1110", "1001", "0101", "0011"}) {
          std::vector<std::string> ids;
          for (int i = 1; i <= 4; ++i) ids.push_back(id(seq[i - 1] == '1' ? 'f' : 'e', i));
          members.push_back(ids);
        }
        return finish({GainGraph{g, gains}, circles_by_ids(g, members), TestKind::circle});
      }
      Group G = Group::cyclic(n - 1);
      std::map<std::string, GroupElement> by_id;
      for (int i = 1; i <= n; ++i) by_id[id('f', i)] = G.from_int(1);
      std::vector<std::vector<std::string>> members;
      std::vector<std::string> c;
      for (int i = 1; i <= n; ++i) c.push_back(id('e', i));
      members.push_back(c);
      for (int j = 1; j <= n; ++j) {
        std::vector<std::string> d;
        for (int i = 1; i <= n; ++i) d.push_back(id(i == j ? 'e' : 'f', i));
        members.push_back(d);
      }
      return finish({GainGraph{g, gains_by_id(g, G, by_id)}, circles_by_ids(g, members), TestKind::circle});
    }
    case Family::wheel: {
      const int n = spec.params.at(0);
      if (n % 2) break;
      Group G = Group::cyclic(n - 1);
      std::map<std::string, GroupElement> by_id;
      for (int i = 1; i <= n; ++i) by_id[id('r', i)] = G.from_int(1);
      // H_j skips rim r_j and uses the spokes at its ends.
      std::vector<std::vector<std::string>> members;
      for (int j = 1; j <= n; ++j) {
        std::vector<std::string> h{id('s', j), id('s', j % n + 1)};
        for (int i = 1; i <= n; ++i)
          if (i != j) h.push_back(id('r', i));
        members.push_back(h);
      }
      return finish({GainGraph{g, gains_by_id(g, G, by_id)}, circles_by_ids(g, members), TestKind::circle});
    }
    default:
      break;
  }
  throw GraphError("no bad witness is known for " + to_string(spec));
}

BadWitness lift_witness(const Graph& host, const Graph& minor, const BadWitness& w, const MinorWitness& mw) {
  auto real = realize_minor(host, minor, mw);
  if (!real) throw GraphError("minor witness does not realise");
  auto del = delete_edges(host, real->deleted);
  EdgeSet tree(del.graph.edge_count());
  for (auto e = real->tree.find_first(); e != EdgeSet::npos; e = real->tree.find_next(e)) tree.set(del.edge_map[e]);
  auto con = contract_edges(del.graph, tree);

  // Transport the witness onto the contracted graph.
  const Group& G = w.gain_graph.group();
  const auto& mg = w.gain_graph.graph;
  std::vector<VertexId> vmap(mg.vertex_count());
  for (VertexId t = 0; t < mg.vertex_count(); ++t) vmap[t] = con.vertex_map[mw.branch_sets.at(t).front()];
  std::vector<EdgeIndex> emap(mg.edge_count());
  std::vector<bool> flip(mg.edge_count(), false);
  GainAssignment cg = identity_gains(con.graph, G);
  for (EdgeIndex e = 0; e < mg.edge_count(); ++e) {
    emap[e] = con.edge_map[del.edge_map[mw.edge_map[e]]];
    const auto& a = mg.edge(e);
    const auto& b = con.graph.edge(emap[e]);
    flip[e] = !a.is_loop() && !(vmap[a.tail] == b.tail && vmap[a.head] == b.head);
    cg.gains[emap[e]] = flip[e] ? G.inverse(w.gain_graph.gain(e)) : w.gain_graph.gain(e);
  }
  OrientedBasis cb;
  for (const auto& m : w.basis) {
    OrientedMember x;
    x.cycle.support = EdgeSet(con.graph.edge_count());
    for (auto e = m.cycle.support.find_first(); e != EdgeSet::npos; e = m.cycle.support.find_next(e))
      x.cycle.support.set(emap[e]);
    x.walk.start = vmap[m.walk.start];
    for (const auto& s : m.walk.steps) {
      DirectedEdge step{emap[s.edge], s.direction};
      x.walk.steps.push_back(flip[s.edge] ? step.reversed() : step);
    }
    cb.push_back(std::move(x));
  }
  auto [b1, g1] = lift_basis_contraction(del.graph, tree, cb, cg);
  auto [b2, g2] = lift_basis_deletion(host, real->deleted, b1, g1);
  BadWitness out{GainGraph{host, std::move(g2)}, std::move(b2), w.test};
  if (!verify_bad_witness(out)) throw std::logic_error("lifted witness failed verification");
  return out;
}

std::optional<Decomposition> structural_decomposition(const Graph& g) {
  Decomposition d;
  for (auto& block : blocks(g)) {
    auto is_base = [](const Graph& h) { return match_base_family(h).has_value(); };
    auto red = reverse_extrusion_reduce(block, is_base);
    auto base = match_base_family(red.irreducible);
    if (!base) return std::nullopt;
    d.blocks.push_back({std::move(block), *base, std::move(red.irreducible), std::move(red.steps)});
  }
  return d;
}

bool replay_block(const BlockDecomposition& b) {
  if (!isomorphic(strip_isolated(b.irreducible), build_named(b.base))) return false;
  Graph h = b.irreducible;
  for (const auto& s : b.steps) h = apply_extrusion(h, s);
  return isomorphic(strip_isolated(h), strip_isolated(b.block));
}

namespace {

std::optional<Verdict> bad_by_minor(const Graph& g, const NamedGraphSpec& spec, const std::string& rule) {
  Graph target = build_named(spec);
  if (target.edge_count() > g.edge_count()) return std::nullopt;
  std::optional<MinorWitness> mw;
  try {
    mw = has_minor(g, target);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  if (!mw) return std::nullopt;
  Verdict v;
  v.status = Status::bad;
  v.rule = rule;
  v.minor = to_string(spec);
  v.witness = lift_witness(g, target, bad_witness(spec), *mw);
  return v;
}

}  // namespace

Verdict binary_cycle_goodness(const Graph& g, const GroupClass& c) {
  Verdict v;
  if (g.is_forest()) {
    v.status = Status::good;
    v.rule = "forests are balanced";
    return v;
  }
  auto flags = c.flags();
  if (flags.contains_nontrivial_odd_order) {
    auto p = c.least_odd_prime().value_or(3);
    auto spec = NamedGraphSpec::loop_vertex();
    Graph target = build_named(spec);
    auto mw = has_minor(g, target);
    if (!mw) throw std::logic_error("a graph with a circle must have a loop minor");
    v.status = Status::bad;
    v.rule = "Thm FM2 = {K1loop}";
    v.minor = to_string(spec);
    v.witness = lift_witness(g, target, bad_witness(spec, static_cast<std::int64_t>(p)), *mw);
    return v;
  }
  if (c.kind == ClassKind::explicit_list && c.all_abelian() && !flags.has_odd_torsion) {
    v.status = Status::good;
    v.rule = "Thm Abelian groups without odd torsion";
    return v;
  }
  v.rule = "no rule applies";
  return v;
}

Verdict circle_goodness(const Graph& g, const GroupClass& c) {
  if (auto d = structural_decomposition(g)) {
    Verdict v;
    v.status = Status::good;
    v.rule = "Thm Validity of the Circle Test: blocks extrude from base graphs";
    v.decomposition = std::move(d);
    return v;
  }
  if (c.flags().contains_z3) {
    for (const auto& spec : {NamedGraphSpec::circle_multi({3, 3, 2}), NamedGraphSpec::doubled_circle(4),
                             NamedGraphSpec::k4_adjacent_doubled(), NamedGraphSpec::wheel(4)})
      if (auto v = bad_by_minor(g, spec, "Thm Validity of the Circle Test")) return *v;
    Verdict v;
    v.rule = "no forbidden minor found";
    return v;
  }
  for (int m = 5; 2 * (m + 1) <= static_cast<int>(g.edge_count()); m += 2) {
    if (!c.contains_cyclic(static_cast<std::uint64_t>(m))) continue;
    for (const auto& spec : {NamedGraphSpec::wheel(m + 1), NamedGraphSpec::doubled_circle(m + 1)})
      if (auto v = bad_by_minor(g, spec, "Thm Hamiltonian bases of W2k and 2C2k")) return *v;
  }
  Verdict v;
  v.rule = "no rule applies";
  return v;
}

namespace {

struct OracleSetup {
  GroupTable table;
  std::vector<Circle> circles;
  std::vector<std::vector<std::pair<EdgeIndex, bool>>> steps;  // (edge, forward)
  std::vector<std::uint64_t> masks;                             // circle supports
  EdgeSet forest;
  std::vector<EdgeIndex> free_edges;
  std::size_t beta = 0;
};

OracleSetup setup_oracle(const Graph& g, const Group& grp, const OracleOptions& opts) {
  if (g.edge_count() > opts.max_edges || g.edge_count() > 64)
    throw BudgetExceeded("oracle edge bound exceeded");
  auto order = grp.order();
  if (!order || *order > opts.max_group_order) throw BudgetExceeded("oracle group order bound exceeded");
  OracleSetup s{make_table(grp), enumerate_circles(g), {}, {}, spanning_forest(g), {}, g.cycle_rank()};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.beta; ++i) {
    total *= *order;
    if (total > opts.max_assignments) throw BudgetExceeded("oracle assignment budget exceeded");
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!s.forest.test(e)) s.free_edges.push_back(e);
  for (const auto& c : s.circles) {
    std::vector<std::pair<EdgeIndex, bool>> st;
    for (const auto& step : c.walk.steps) st.emplace_back(step.edge, step.is_forward());
    s.steps.push_back(std::move(st));
    std::uint64_t m = 0;
    for (auto e = c.support().find_first(); e != EdgeSet::npos; e = c.support().find_next(e)) m |= 1ULL << e;
    s.masks.push_back(m);
  }
  return s;
}

// Odometer over switching-reduced assignments; calls f(gains) for every
// unbalanced one until f returns false.
template <typename F>
std::uint64_t for_each_unbalanced(const Graph& g, const OracleSetup& s, F&& f) {
  std::vector<std::uint32_t> gains(g.edge_count(), 0);
  const auto n = static_cast<std::uint32_t>(s.table.size());
  std::uint64_t count = 0;
  while (true) {
    std::size_t i = 0;
    for (; i < s.free_edges.size(); ++i) {
      auto& x = gains[s.free_edges[i]];
      if (++x < n) break;
      x = 0;
    }
    if (i == s.free_edges.size()) return count;
    ++count;
    if (!f(gains)) return count;
  }
}

std::uint32_t circle_gain(const OracleSetup& s, std::size_t c, const std::vector<std::uint32_t>& gains) {
  std::uint32_t acc = 0;
  for (auto [e, fwd] : s.steps[c]) acc = s.table.op(acc, fwd ? gains[e] : s.table.inv[gains[e]]);
  return acc;
}

std::size_t rank64(std::vector<std::uint64_t> v) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    ++r;
    std::uint64_t low = v[i] & (~v[i] + 1);
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] & low) v[j] ^= v[i];
  }
  return r;
}

}  // namespace

OracleResult oracle_circle_goodness(const Graph& g, const Group& grp, const OracleOptions& opts) {
  OracleResult r;
  if (g.cycle_rank() == 0) return r;
  auto s = setup_oracle(g, grp, opts);
  r.assignments = for_each_unbalanced(g, s, [&](const std::vector<std::uint32_t>& gains) {
    std::vector<std::uint64_t> balanced;
    std::vector<std::size_t> which;
    for (std::size_t c = 0; c < s.circles.size(); ++c)
      if (circle_gain(s, c, gains) == 0) {
        balanced.push_back(s.masks[c]);
        which.push_back(c);
      }
    if (rank64(balanced) < s.beta) return true;
    // Greedy basis among the balanced circles.
    std::vector<Circle> chosen;
    std::vector<std::uint64_t> kept;
    for (std::size_t k = 0; k < which.size() && chosen.size() < s.beta; ++k) {
      kept.push_back(balanced[k]);
      if (rank64(kept) == kept.size()) chosen.push_back(s.circles[which[k]]);
      else kept.pop_back();
    }
    GainAssignment a = identity_gains(g, grp);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) a.gains[e] = s.table.elements[gains[e]];
    BadWitness w{GainGraph{g, a}, orient_circles(chosen), TestKind::circle};
    if (!verify_bad_witness(w)) throw std::logic_error("oracle counterexample failed verification");
    r.good = false;
    r.counterexample = std::move(w);
    return false;
  });
  return r;
}

std::vector<std::vector<BinaryCycle>> oracle_bad_circle_bases(const Graph& g, const Group& grp,
                                                              const OracleOptions& opts) {
  std::vector<std::vector<BinaryCycle>> out;
  if (g.cycle_rank() == 0) return out;
  auto s = setup_oracle(g, grp, opts);
  if (s.circles.size() > 64) throw BudgetExceeded("too many circles for basis enumeration");
  std::unordered_set<std::uint64_t> balanced_sets;
  for_each_unbalanced(g, s, [&](const std::vector<std::uint32_t>& gains) {
    std::uint64_t m = 0;
    for (std::size_t c = 0; c < s.circles.size(); ++c)
      if (circle_gain(s, c, gains) == 0) m |= 1ULL << c;
    balanced_sets.insert(m);
    return true;
  });
  // Keep the maximal sets; a basis is bad iff it lies inside one.
  std::vector<std::uint64_t> maximal;
  for (auto m : balanced_sets) {
    bool dominated = false;
    for (auto o : balanced_sets)
      if (o != m && (m & o) == m) dominated = true;
    if (!dominated) maximal.push_back(m);
  }
  std::vector<std::size_t> pick;
  std::vector<std::uint64_t> vecs;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == s.beta) {
      std::uint64_t m = 0;
      for (auto c : pick) m |= 1ULL << c;
      if (std::any_of(maximal.begin(), maximal.end(), [&](std::uint64_t o) { return (m & o) == m; })) {
        std::vector<BinaryCycle> b;
        for (auto c : pick) b.push_back(s.circles[c].cycle);
        out.push_back(std::move(b));
      }
      return;
    }
    for (std::size_t c = from; c < s.circles.size(); ++c) {
      vecs.push_back(s.masks[c]);
      if (rank64(vecs) == vecs.size()) {
        pick.push_back(c);
        rec(c + 1);
        pick.pop_back();
      }
      vecs.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Graph> enumerate_multigraphs(std::size_t max_edges, const EnumerationOptions& opts) {
  std::vector<Graph> out;
  std::vector<Graph> level;
  {
    Graph seed;
    if (opts.connected) seed.add_vertex("v0");
    level.push_back(seed);
  }
  for (std::size_t k = 1; k <= max_edges; ++k) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<Graph> next;
    auto offer = [&](const Graph& h, std::size_t u, std::size_t v) {
      Graph c = h;
      while (c.vertex_count() <= std::max(u, v)) c.add_vertex("v" + std::to_string(c.vertex_count()));
      c.add_edge("e" + std::to_string(c.edge_count()), u, v);
      if (seen.insert(canonical_form(c)).second) next.push_back(std::move(c));
    };
    for (const auto& h : level) {
      const std::size_t n = h.vertex_count();
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v)
          if (u != v || opts.loops) offer(h, u, v);
        offer(h, u, n);
      }
      if (!opts.connected || n == 0) {
        offer(h, n, n + 1);
        if (opts.loops) offer(h, n, n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace gainbalance
