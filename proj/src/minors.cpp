#include "gainbalance/minors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gainbalance/canon.hpp"

namespace gainbalance {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Greedy maximal forest of g using only `allowed` edges.
EdgeSet forest_within(const Graph& g, const EdgeSet& allowed) {
  Dsu d(g.vertex_count());
  EdgeSet f(g.edge_count());
  for (auto e = allowed.find_first(); e != EdgeSet::npos; e = allowed.find_next(e))
    if (d.unite(g.edge(e).tail, g.edge(e).head)) f.set(e);
  return f;
}

CanonicalForm live_form(const Graph& g) {
  auto f = canonical_form(g);
  f.isolated = 0;
  return f;
}

std::size_t live_vertices(const Graph& g) { return g.vertex_count() - g.isolated_count(); }

std::string unique_vertex_name(const Graph& g, std::string base) {
  while (g.find_vertex(base)) base += "'";
  return base;
}

std::string unique_edge_id(const Graph& g, std::string base) {
  std::string id = base;
  for (int k = 2; g.find_edge(id); ++k) id = base + "#" + std::to_string(k);
  return id;
}

}  // namespace

DeletionResult delete_edges(const Graph& g, const EdgeSet& s) {
  if (s.size() != g.edge_count()) throw GraphError("edge set does not belong to this graph");
  DeletionResult r;
  for (const auto& name : g.vertex_names()) r.graph.add_vertex(name);
  r.edge_map.assign(g.edge_count(), kNoIndex);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (s.test(e)) continue;
    const auto& rec = g.edge(e);
    r.edge_map[e] = r.graph.add_edge(rec.id, rec.tail, rec.head);
    r.origin.push_back(e);
  }
  return r;
}

ContractionResult contract_edges(const Graph& g, const EdgeSet& s) {
  if (s.size() != g.edge_count()) throw GraphError("edge set does not belong to this graph");
  Dsu d(g.vertex_count());
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e)) d.unite(g.edge(e).tail, g.edge(e).head);
  ContractionResult r;
  r.vertex_map.assign(g.vertex_count(), kNoIndex);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId root = d.find(v);  // the least member, by the union rule
    if (root == v) r.vertex_map[v] = r.graph.add_vertex(g.vertex_name(v));
    else r.vertex_map[v] = r.vertex_map[root];
  }
  r.edge_map.assign(g.edge_count(), kNoIndex);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (s.test(e)) continue;
    const auto& rec = g.edge(e);
    r.edge_map[e] = r.graph.add_edge(rec.id, r.vertex_map[rec.tail], r.vertex_map[rec.head]);
    r.origin.push_back(e);
  }
  return r;
}

std::optional<MinorRealization> realize_minor(const Graph& g, const Graph& target, const MinorWitness& w) {
  if (w.branch_sets.size() != target.vertex_count() || w.edge_map.size() != target.edge_count()) return std::nullopt;
  std::vector<std::size_t> owner(g.vertex_count(), kNoIndex);
  for (std::size_t t = 0; t < w.branch_sets.size(); ++t) {
    if (w.branch_sets[t].empty()) return std::nullopt;
    for (VertexId v : w.branch_sets[t]) {
      if (v >= g.vertex_count() || owner[v] != kNoIndex) return std::nullopt;
      owner[v] = t;
    }
  }
  EdgeSet image(g.edge_count());
  for (EdgeIndex te = 0; te < target.edge_count(); ++te) {
    EdgeIndex he = w.edge_map[te];
    if (he >= g.edge_count() || image.test(he)) return std::nullopt;
    image.set(he);
    const auto& trec = target.edge(te);
    const auto& hrec = g.edge(he);
    auto a = owner[hrec.tail], b = owner[hrec.head];
    bool ok = (a == trec.tail && b == trec.head) || (a == trec.head && b == trec.tail);
    if (!ok) return std::nullopt;
  }
  // Spanning trees of the branch sets from edges outside the image.
  MinorRealization r{EdgeSet(g.edge_count()), EdgeSet(g.edge_count())};
  Dsu d(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (image.test(e)) continue;
    const auto& rec = g.edge(e);
    auto a = owner[rec.tail];
    if (a != kNoIndex && a == owner[rec.head] && d.unite(rec.tail, rec.head)) r.tree.set(e);
  }
  for (const auto& bs : w.branch_sets)
    for (VertexId v : bs)
      if (d.find(v) != d.find(bs.front())) return std::nullopt;
  r.deleted = ~(image | r.tree);
  return r;
}

bool verify_minor_witness(const Graph& g, const Graph& target, const MinorWitness& w) {
  auto r = realize_minor(g, target, w);
  if (!r) return false;
  auto del = delete_edges(g, r->deleted);
  EdgeSet tree(del.graph.edge_count());
  for (auto e = r->tree.find_first(); e != EdgeSet::npos; e = r->tree.find_next(e)) tree.set(del.edge_map[e]);
  auto con = contract_edges(del.graph, tree);
  return isomorphic(strip_isolated(con.graph), strip_isolated(target));
}

std::optional<MinorWitness> has_minor(const Graph& g, const Graph& target, const MinorSearchLimits& limits) {
  if (target.isolated_count() > 0) throw GraphError("minor targets must not have isolated vertices");
  if (target.vertex_count() > limits.max_target_vertices || target.edge_count() > limits.max_target_edges)
    throw BudgetExceeded("minor target exceeds the search bound");

  struct State {
    Graph h;
    std::vector<VertexId> vmap;    // host vertex -> vertex of h
    std::vector<EdgeIndex> origin;  // edge of h -> host edge
  };
  const auto target_form = live_form(target);
  const auto te = target.edge_count();
  const auto tv = live_vertices(target);
  const auto tb = target.cycle_rank();
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::size_t states = 0;

  auto witness_from = [&](const State& s) -> std::optional<MinorWitness> {
    // Map the target onto the live part of h.
    Graph live;
    std::vector<VertexId> back;
    std::vector<VertexId> to_live(s.h.vertex_count(), kNoIndex);
    auto deg = s.h.degrees();
    for (VertexId x = 0; x < s.h.vertex_count(); ++x)
      if (deg[x] > 0) {
        to_live[x] = live.add_vertex(s.h.vertex_name(x));
        back.push_back(x);
      }
    for (const auto& rec : s.h.edges()) live.add_edge(rec.id, to_live[rec.tail], to_live[rec.head]);
    auto iso = find_isomorphism(target, live);
    if (!iso) return std::nullopt;
    MinorWitness w;
    w.branch_sets.resize(target.vertex_count());
    for (VertexId t = 0; t < target.vertex_count(); ++t) {
      VertexId x = back[iso->vertex_map[t]];
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (s.vmap[v] == x) w.branch_sets[t].push_back(v);
    }
    w.edge_map.resize(te);
    for (EdgeIndex e = 0; e < te; ++e) w.edge_map[e] = s.origin[iso->edge_map[e]];
    return w;
  };

  std::function<std::optional<MinorWitness>(const State&)> search = [&](const State& s) -> std::optional<MinorWitness> {
    if (++states > limits.max_states) throw BudgetExceeded("minor search exceeded its state budget");
    if (s.h.edge_count() == te) {
      if (live_form(s.h) == target_form) return witness_from(s);
      return std::nullopt;
    }
    for (EdgeIndex e = 0; e < s.h.edge_count(); ++e) {
      for (int op = 0; op < 2; ++op) {
        bool contract = op == 0;
        if (contract && s.h.edge(e).is_loop()) continue;
        EdgeSet one(s.h.edge_count());
        one.set(e);
        State child;
        if (contract) {
          auto c = contract_edges(s.h, one);
          child.h = std::move(c.graph);
          child.vmap.resize(g.vertex_count());
          for (VertexId v = 0; v < g.vertex_count(); ++v)
            child.vmap[v] = s.vmap[v] == kNoIndex ? kNoIndex : c.vertex_map[s.vmap[v]];
          for (EdgeIndex k : c.origin) child.origin.push_back(s.origin[k]);
        } else {
          auto dres = delete_edges(s.h, one);
          child.h = std::move(dres.graph);
          child.vmap = s.vmap;
          for (EdgeIndex k : dres.origin) child.origin.push_back(s.origin[k]);
        }
        if (child.h.edge_count() < te || child.h.cycle_rank() < tb || live_vertices(child.h) < tv) continue;
        if (!seen.insert(live_form(child.h)).second) continue;
        if (auto w = search(child)) return w;
      }
    }
    return std::nullopt;
  };

  if (g.edge_count() < te || g.cycle_rank() < tb || live_vertices(g) < tv) return std::nullopt;

  // A loop minor only needs some circle.
  if (target.vertex_count() == 1 && te == 1) {
    if (g.is_forest()) return std::nullopt;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).is_loop()) return MinorWitness{{{g.edge(e).tail}}, {e}};
    EdgeSet forest = spanning_forest(g);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (forest.test(e)) continue;
      MinorWitness w;
      w.branch_sets.emplace_back();
      w.branch_sets[0].push_back(g.edge(e).tail);
      for (const auto& step : forest_path(g, forest, g.edge(e).tail, g.edge(e).head))
        w.branch_sets[0].push_back(step_target(g, step));
      w.edge_map = {e};
      return w;
    }
  }

  State root{g, {}, {}};
  root.vmap.resize(g.vertex_count());
  std::iota(root.vmap.begin(), root.vmap.end(), 0);
  root.origin.resize(g.edge_count());
  std::iota(root.origin.begin(), root.origin.end(), 0);
  seen.insert(live_form(g));
  auto w = search(root);
  if (w && !verify_minor_witness(g, target, *w)) throw std::logic_error("minor witness failed verification");
  return w;
}

std::pair<OrientedBasis, GainAssignment> lift_basis_deletion(const Graph& g, const EdgeSet& s,
                                                             const OrientedBasis& b, const GainAssignment& gains) {
  auto del = delete_edges(g, s);
  validate_oriented_basis(del.graph, b);
  validate_gain_graph(GainGraph{del.graph, gains});
  const Group& G = gains.group;

  // Forest of deleted edges joining components of the deletion.
  Dsu d(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!s.test(e)) d.unite(g.edge(e).tail, g.edge(e).head);
  EdgeSet t(g.edge_count());
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e))
    if (d.unite(g.edge(e).tail, g.edge(e).head)) t.set(e);
  EdgeSet rest = s & ~t;

  GainAssignment out = identity_gains(g, G);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!s.test(e)) out.gains[e] = gains.gains[del.edge_map[e]];

  OrientedBasis lifted;
  for (const auto& m : b) {
    OrientedMember x;
    x.cycle.support = EdgeSet(g.edge_count());
    for (auto e = m.cycle.support.find_first(); e != EdgeSet::npos; e = m.cycle.support.find_next(e))
      x.cycle.support.set(del.origin[e]);
    x.walk.start = m.walk.start;
    for (const auto& step : m.walk.steps) x.walk.steps.push_back({del.origin[step.edge], step.direction});
    lifted.push_back(std::move(x));
  }
  EdgeSet forest = forest_within(g, ~rest);
  GainGraph partial{g, out};
  for (auto e = rest.find_first(); e != EdgeSet::npos; e = rest.find_next(e)) {
    const auto& rec = g.edge(e);
    auto path = forest_path(g, forest, rec.head, rec.tail);
    GroupElement pg = G.identity();
    for (const auto& step : path) pg = G.op(pg, step_gain(partial, step));
    out.gains[e] = G.inverse(pg);
    OrientedMember c;
    c.cycle.support = EdgeSet(g.edge_count());
    c.cycle.support.set(e);
    c.walk.start = rec.tail;
    c.walk.steps.push_back({e, Direction::forward});
    for (const auto& step : path) {
      c.cycle.support.set(step.edge);
      c.walk.steps.push_back(step);
    }
    lifted.push_back(std::move(c));
  }
  validate_oriented_basis(g, lifted);
  return {std::move(lifted), std::move(out)};
}

std::pair<OrientedBasis, GainAssignment> lift_basis_contraction(const Graph& g, const EdgeSet& t,
                                                                const OrientedBasis& b, const GainAssignment& gains) {
  if (t.size() != g.edge_count()) throw GraphError("edge set does not belong to this graph");
  {
    Dsu d(g.vertex_count());
    for (auto e = t.find_first(); e != EdgeSet::npos; e = t.find_next(e))
      if (!d.unite(g.edge(e).tail, g.edge(e).head)) throw GraphError("contracted edge set contains a circle");
  }
  auto con = contract_edges(g, t);
  validate_oriented_basis(con.graph, b);
  validate_gain_graph(GainGraph{con.graph, gains});

  GainAssignment out = identity_gains(g, gains.group);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!t.test(e)) out.gains[e] = gains.gains[con.edge_map[e]];

  OrientedBasis lifted;
  for (const auto& m : b) {
    OrientedMember x;
    if (m.walk.steps.empty()) {
      VertexId start = 0;
      while (con.vertex_map[start] != m.walk.start) ++start;
      x.walk.start = start;
    } else {
      std::vector<DirectedEdge> steps;
      for (const auto& s : m.walk.steps) steps.push_back({con.origin[s.edge], s.direction});
      x.walk.start = step_source(g, steps.front());
      for (std::size_t i = 0; i < steps.size(); ++i) {
        x.walk.steps.push_back(steps[i]);
        VertexId from = step_target(g, steps[i]);
        VertexId to = step_source(g, steps[(i + 1) % steps.size()]);
        for (const auto& p : forest_path(g, t, from, to)) x.walk.steps.push_back(p);
      }
    }
    x.cycle.support = walk_projection(g, x.walk);
    lifted.push_back(std::move(x));
  }
  validate_oriented_basis(g, lifted);
  return {std::move(lifted), std::move(out)};
}

Graph extrude(const Graph& g, VertexId v, VertexId w, const std::vector<EdgeIndex>& moved, std::string new_vertex,
              std::string new_edge) {
  if (v >= g.vertex_count() || w >= g.vertex_count() || v == w) throw GraphError("extrusion needs two distinct vertices");
  if (moved.empty()) throw GraphError("extrusion needs at least one edge to move");
  std::vector<bool> move(g.edge_count(), false);
  for (EdgeIndex e : moved) {
    if (e >= g.edge_count()) throw GraphError("unknown edge in extrusion");
    const auto& rec = g.edge(e);
    if (!((rec.tail == v && rec.head == w) || (rec.tail == w && rec.head == v)))
      throw GraphError("edge " + rec.id + " does not join the extrusion vertices");
    move[e] = true;
  }
  if (new_vertex.empty()) new_vertex = unique_vertex_name(g, g.vertex_name(v) + "'");
  if (g.find_vertex(new_vertex)) throw GraphError("vertex " + new_vertex + " already exists");
  if (new_edge.empty()) new_edge = unique_edge_id(g, "x_" + new_vertex);
  if (g.find_edge(new_edge)) throw GraphError("edge " + new_edge + " already exists");
  Graph out;
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  VertexId vp = out.add_vertex(new_vertex);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto rec = g.edge(e);
    if (move[e]) {
      if (rec.tail == v) rec.tail = vp;
      else rec.head = vp;
    }
    out.add_edge(rec.id, rec.tail, rec.head);
  }
  out.add_edge(new_edge, v, vp);
  return out;
}

Graph apply_extrusion(const Graph& g, const ExtrusionStep& step) {
  std::vector<EdgeIndex> moved;
  for (const auto& id : step.moved) moved.push_back(g.edge_index(id));
  return extrude(g, g.vertex(step.from), g.vertex(step.neighbor), moved, step.vertex, step.edge);
}

Graph undo_extrusion(const Graph& g, const ExtrusionStep& step) {
  VertexId x = g.vertex(step.vertex);
  VertexId v = g.vertex(step.from);
  EdgeIndex ev = g.edge_index(step.edge);
  Graph out;
  std::vector<VertexId> map(g.vertex_count(), kNoIndex);
  for (VertexId y = 0; y < g.vertex_count(); ++y)
    if (y != x) map[y] = out.add_vertex(g.vertex_name(y));
  map[x] = map[v];
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (e == ev) continue;
    const auto& rec = g.edge(e);
    out.add_edge(rec.id, map[rec.tail], map[rec.head]);
  }
  return out;
}

std::vector<ExtrusionStep> reverse_extrusion_steps(const Graph& g) {
  std::vector<ExtrusionStep> out;
  auto inc = g.incidence();
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    std::vector<VertexId> nbrs;
    bool loop = false;
    for (EdgeIndex e : inc[x]) {
      if (g.edge(e).is_loop()) loop = true;
      VertexId y = g.edge(e).other(x);
      if (std::find(nbrs.begin(), nbrs.end(), y) == nbrs.end()) nbrs.push_back(y);
    }
    if (loop || nbrs.size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      VertexId v = nbrs[side], w = nbrs[1 - side];
      if (g.multiplicity(x, v) != 1) continue;
      ExtrusionStep s;
      s.from = g.vertex_name(v);
      s.neighbor = g.vertex_name(w);
      s.vertex = g.vertex_name(x);
      for (EdgeIndex e : inc[x]) {
        if (g.edge(e).other(x) == v) s.edge = g.edge(e).id;
        else s.moved.push_back(g.edge(e).id);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool is_extrusion_irreducible(const Graph& g) { return reverse_extrusion_steps(g).empty(); }

ExtrusionReduction reverse_extrusion_reduce(const Graph& g, const std::function<bool(const Graph&)>& prefer) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::optional<ExtrusionReduction> first;
  std::vector<ExtrusionStep> path;
  std::function<std::optional<ExtrusionReduction>(const Graph&)> dfs = [&](const Graph& h) -> std::optional<ExtrusionReduction> {
    auto steps = reverse_extrusion_steps(h);
    if (steps.empty()) {
      ExtrusionReduction r{h, {path.rbegin(), path.rend()}};
      if (prefer && prefer(h)) return r;
      if (!first) first = r;
      return std::nullopt;
    }
    for (const auto& s : steps) {
      Graph next = undo_extrusion(h, s);
      if (!seen.insert(canonical_form(next)).second) continue;
      path.push_back(s);
      auto r = dfs(next);
      path.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  };
  seen.insert(canonical_form(g));
  if (auto r = dfs(g)) return *r;
  return *first;
}

std::size_t BridgeReport::non_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(bridges.begin(), bridges.end(), [](const Bridge& b) { return b.kind != BridgeKind::edge; }));
}

namespace {

// Connectivity of the subgraph on `edges`, restricted to vertices in `keep`.
bool connected_on(const Graph& g, const EdgeSet& edges, const std::vector<VertexId>& keep) {
  if (keep.empty()) return true;
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : keep) in[v] = true;
  Dsu d(g.vertex_count());
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e)) {
    const auto& rec = g.edge(e);
    if (in[rec.tail] && in[rec.head]) d.unite(rec.tail, rec.head);
  }
  for (VertexId v : keep)
    if (d.find(v) != d.find(keep.front())) return false;
  return true;
}

// Whether the bridge has the doubled path u=x=v as a rooted minor. Inner
// vertices are labelled U, X or V; unlabelled vertices can always be absorbed
// into a neighbouring branch set, so full labellings suffice.
bool has_doubled_path(const Graph& g, const Bridge& b, VertexId u, VertexId v) {
  const std::size_t k = b.inner.size();
  if (k > 14) throw BudgetExceeded("bridge too large for the rooted minor search");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  std::vector<int> label(g.vertex_count(), -1);
  label[u] = 0;
  label[v] = 2;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<VertexId> sets[3] = {{u}, {}, {v}};
    for (VertexId x : b.inner) {
      label[x] = static_cast<int>(c % 3);
      sets[label[x]].push_back(x);
      c /= 3;
    }
    if (sets[1].empty()) continue;
    std::size_t ux = 0, xv = 0;
    for (auto e = b.edges.find_first(); e != EdgeSet::npos; e = b.edges.find_next(e)) {
      int a = label[g.edge(e).tail], z = label[g.edge(e).head];
      if ((a == 0 && z == 1) || (a == 1 && z == 0)) ++ux;
      if ((a == 1 && z == 2) || (a == 2 && z == 1)) ++xv;
    }
    if (ux < 2 || xv < 2) continue;
    if (connected_on(g, b.edges, sets[0]) && connected_on(g, b.edges, sets[1]) && connected_on(g, b.edges, sets[2]))
      return true;
  }
  return false;
}

}  // namespace

BridgeReport bridges_of_pair(const Graph& g, VertexId u, VertexId v) {
  if (u == v) throw GraphError("bridges need two distinct vertices");
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw GraphError("unknown vertex");
  BridgeReport r;
  r.u = u;
  r.v = v;
  auto is_pole = [&](VertexId x) { return x == u || x == v; };
  Dsu d(g.vertex_count());
  for (const auto& rec : g.edges())
    if (!is_pole(rec.tail) && !is_pole(rec.head)) d.unite(rec.tail, rec.head);
  std::map<std::size_t, std::size_t> by_root;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (is_pole(rec.tail) && is_pole(rec.head)) {
      Bridge b;
      b.edges = EdgeSet(g.edge_count());
      b.edges.set(e);
      r.bridges.push_back(std::move(b));
      continue;
    }
    VertexId inner = is_pole(rec.tail) ? rec.head : rec.tail;
    auto root = d.find(inner);
    auto [it, fresh] = by_root.try_emplace(root, r.bridges.size());
    if (fresh) {
      Bridge b;
      b.edges = EdgeSet(g.edge_count());
      b.kind = BridgeKind::type_one;
      r.bridges.push_back(std::move(b));
    }
    r.bridges[it->second].edges.set(e);
  }
  for (auto [root, idx] : by_root) {
    auto& b = r.bridges[idx];
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      if (!is_pole(x) && d.find(x) == root) b.inner.push_back(x);
    b.kind = has_doubled_path(g, b, u, v) ? BridgeKind::type_two : BridgeKind::type_one;
    if (b.kind == BridgeKind::type_one) {
      for (VertexId w : b.inner) {
        std::vector<VertexId> rest;
        for (VertexId x : b.inner)
          if (x != w) rest.push_back(x);
        // Only the poles actually touched by the bridge belong to it.
        for (VertexId p : {u, v})
          for (auto e = b.edges.find_first(); e != EdgeSet::npos; e = b.edges.find_next(e))
            if (g.edge(e).tail == p || g.edge(e).head == p) {
              rest.push_back(p);
              break;
            }
        EdgeSet without = b.edges;
        for (auto e = b.edges.find_first(); e != EdgeSet::npos; e = b.edges.find_next(e))
          if (g.edge(e).tail == w || g.edge(e).head == w) without.reset(e);
        if (!connected_on(g, without, rest)) {
          b.separating_vertex = w;
          break;
        }
      }
    }
  }
  return r;
}

std::optional<std::pair<VertexId, VertexId>> find_two_separation(const Graph& g) {
  auto deg = g.degrees();
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      Dsu d(g.vertex_count());
      for (const auto& rec : g.edges())
        if (rec.tail != u && rec.tail != v && rec.head != u && rec.head != v) d.unite(rec.tail, rec.head);
      std::set<std::size_t> roots;
      for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v && deg[x] > 0) roots.insert(d.find(x));
      if (roots.size() >= 2) return std::make_pair(u, v);
    }
  return std::nullopt;
}

GainGraph whitney_twist(const GainGraph& gg, VertexId u, VertexId v, const EdgeSet& side) {
  if (!gg.group().is_abelian())
    throw GraphError("whitney twist with gain inversion preserves balance only for abelian gain groups");
  const Graph& g = gg.graph;
  if (side.size() != g.edge_count()) throw GraphError("edge set does not belong to this graph");
  auto report = bridges_of_pair(g, u, v);
  std::size_t chosen = 0, available = 0;
  EdgeSet covered(g.edge_count());
  for (const auto& b : report.bridges) {
    if (b.kind == BridgeKind::edge) continue;
    ++available;
    if ((b.edges & side) == b.edges) {
      ++chosen;
      covered |= b.edges;
    } else if ((b.edges & side).any()) {
      throw GraphError("twist side must be a union of bridges");
    }
  }
  if (covered != side) throw GraphError("twist side must be a union of non-edge bridges");
  if (available < 2) throw GraphError("vertex pair does not separate the graph");
  if (chosen == 0 || chosen == available) throw GraphError("twist side must be some but not all bridges");
  GainGraph out;
  for (const auto& name : g.vertex_names()) out.graph.add_vertex(name);
  out.gains = gg.gains;
  auto swap = [&](VertexId x) { return x == u ? v : (x == v ? u : x); };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (side.test(e)) {
      out.graph.add_edge(rec.id, swap(rec.tail), swap(rec.head));
      out.gains.gains[e] = gg.group().inverse(gg.gain(e));
    } else {
      out.graph.add_edge(rec.id, rec.tail, rec.head);
    }
  }
  return out;
}

}  // namespace gainbalance
