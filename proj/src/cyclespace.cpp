#include "gainbalance/cyclespace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gainbalance {

namespace {

std::vector<EdgeIndex> indices(const EdgeSet& s) {
  std::vector<EdgeIndex> out;
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e)) out.push_back(e);
  return out;
}

bool less_support(const EdgeSet& a, const EdgeSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return indices(a) < indices(b);
}

// Support degrees and the set of touched vertices.
std::vector<std::size_t> support_degrees(const Graph& g, const EdgeSet& s) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e)) {
    ++deg[g.edge(e).tail];
    ++deg[g.edge(e).head];
  }
  return deg;
}

// Hierholzer circuit over `edges` starting at `start`, least edge index first.
std::vector<DirectedEdge> euler_circuit(const Graph& g, const std::vector<std::vector<EdgeIndex>>& inc,
                                        const EdgeSet& edges, VertexId start) {
  EdgeSet used(g.edge_count());
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<std::pair<VertexId, std::optional<DirectedEdge>>> stack{{start, std::nullopt}};
  std::vector<DirectedEdge> circuit;
  while (!stack.empty()) {
    VertexId x = stack.back().first;
    auto& cur = cursor[x];
    while (cur < inc[x].size() && (!edges.test(inc[x][cur]) || used.test(inc[x][cur]))) ++cur;
    if (cur == inc[x].size()) {
      if (stack.back().second) circuit.push_back(*stack.back().second);
      stack.pop_back();
      continue;
    }
    EdgeIndex e = inc[x][cur];
    used.set(e);
    const auto& rec = g.edge(e);
    DirectedEdge step{e, rec.tail == x ? Direction::forward : Direction::reverse};
    stack.emplace_back(step_target(g, step), step);
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

// All Euler circuits from `start`, up to `limit` of them.
void all_euler_circuits(const Graph& g, const std::vector<std::vector<EdgeIndex>>& inc,
                        const EdgeSet& edges, VertexId start, std::size_t limit,
                        std::vector<std::vector<DirectedEdge>>& out) {
  const std::size_t total = edges.count();
  EdgeSet used(g.edge_count());
  std::vector<DirectedEdge> path;
  std::function<void(VertexId)> rec = [&](VertexId x) {
    if (out.size() >= limit) return;
    if (path.size() == total) {
      if (x == start) out.push_back(path);
      return;
    }
    for (EdgeIndex e : inc[x]) {
      if (!edges.test(e) || used.test(e)) continue;
      const auto& r = g.edge(e);
      DirectedEdge step{e, r.tail == x ? Direction::forward : Direction::reverse};
      used.set(e);
      path.push_back(step);
      rec(step_target(g, step));
      path.pop_back();
      used.reset(e);
      if (out.size() >= limit) return;
    }
  };
  rec(start);
}

}  // namespace

bool is_binary_cycle(const Graph& g, const EdgeSet& support) {
  if (support.size() != g.edge_count()) return false;
  auto deg = support_degrees(g, support);
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 0; });
}

std::optional<Circle> make_circle(const Graph& g, const EdgeSet& support) {
  if (support.size() != g.edge_count() || support.none()) return std::nullopt;
  auto deg = support_degrees(g, support);
  VertexId start = g.vertex_count();
  std::size_t touched = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    if (deg[v] != 2) return std::nullopt;
    if (start == g.vertex_count()) start = v;
    ++touched;
  }
  auto inc = g.incidence();
  Circle c{BinaryCycle{support}, ClosedWalk{start, {}}};
  EdgeSet used(g.edge_count());
  VertexId at = start;
  while (true) {
    std::optional<EdgeIndex> next;
    for (EdgeIndex e : inc[at])
      if (support.test(e) && !used.test(e)) {
        next = e;
        break;
      }
    if (!next) break;
    used.set(*next);
    const auto& rec = g.edge(*next);
    DirectedEdge step{*next, rec.tail == at ? Direction::forward : Direction::reverse};
    c.walk.steps.push_back(step);
    at = step_target(g, step);
    if (at == start) break;
  }
  if (at != start || used != support) return std::nullopt;
  (void)touched;
  return c;
}

Circle make_circle_or_throw(const Graph& g, const EdgeSet& support) {
  auto c = make_circle(g, support);
  if (!c) throw GraphError("edge set {" + [&] {
                             std::string s;
                             for (const auto& id : g.edge_ids(support)) s += (s.empty() ? "" : " ") + id;
                             return s;
                           }() + "} is not a circle");
  return *c;
}

bool is_circle(const Graph& g, const EdgeSet& support) { return make_circle(g, support).has_value(); }

Circle circle_from_ids(const Graph& g, const std::vector<std::string>& ids) {
  return make_circle_or_throw(g, g.edge_set(ids));
}

EdgeSet walk_projection(const Graph& g, const ClosedWalk& w) {
  EdgeSet s(g.edge_count());
  for (const auto& step : w.steps) s.flip(step.edge);
  return s;
}

std::vector<BinaryCycle> basis_cycles(const OrientedBasis& b) {
  std::vector<BinaryCycle> out;
  out.reserve(b.size());
  for (const auto& m : b) out.push_back(m.cycle);
  return out;
}

OrientedBasis orient_circles(const std::vector<Circle>& circles) {
  OrientedBasis b;
  for (const auto& c : circles) b.push_back({c.cycle, c.walk});
  return b;
}

OrientedBasis orient_circles(const Graph& g, const std::vector<BinaryCycle>& circles) {
  OrientedBasis b;
  for (const auto& c : circles) {
    auto circle = make_circle_or_throw(g, c.support);
    b.push_back({circle.cycle, circle.walk});
  }
  return b;
}

std::size_t gf2_rank(std::vector<EdgeSet> vectors) {
  std::map<std::size_t, EdgeSet> pivots;
  std::size_t rank = 0;
  for (auto& v : vectors) {
    while (v.any()) {
      auto p = v.find_first();
      auto it = pivots.find(p);
      if (it == pivots.end()) {
        pivots.emplace(p, v);
        ++rank;
        break;
      }
      v ^= it->second;
    }
  }
  return rank;
}

bool is_cycle_basis(const Graph& g, std::span<const BinaryCycle> members) {
  if (members.size() != g.cycle_rank()) return false;
  std::vector<EdgeSet> vs;
  for (const auto& m : members) {
    if (!is_binary_cycle(g, m.support)) return false;
    vs.push_back(m.support);
  }
  return gf2_rank(std::move(vs)) == members.size();
}

bool is_circle_basis(const Graph& g, std::span<const BinaryCycle> members) {
  for (const auto& m : members)
    if (!is_circle(g, m.support)) return false;
  return is_cycle_basis(g, members);
}

void validate_oriented_basis(const Graph& g, const OrientedBasis& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    validate_walk(g, b[i].walk);
    if (walk_projection(g, b[i].walk) != b[i].cycle.support)
      throw GraphError("walk of basis member " + std::to_string(i + 1) + " does not project onto its cycle");
  }
  auto cycles = basis_cycles(b);
  if (!is_cycle_basis(g, cycles)) throw GraphError("members do not form a basis of the binary cycle space");
}

std::vector<Circle> fundamental_circles(const Graph& g, const EdgeSet& forest) {
  if (!is_maximal_forest(g, forest)) throw GraphError("edge set is not a maximal forest");
  std::vector<Circle> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (forest.test(e)) continue;
    EdgeSet s(g.edge_count());
    s.set(e);
    for (const auto& step : forest_path(g, forest, g.edge(e).head, g.edge(e).tail)) s.set(step.edge);
    out.push_back(make_circle_or_throw(g, s));
  }
  return out;
}

std::vector<Circle> enumerate_circles(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges)
    throw BudgetExceeded("circle enumeration bound exceeded: " + std::to_string(g.edge_count()) +
                         " edges > " + std::to_string(max_edges));
  auto inc = g.incidence();
  std::set<std::vector<EdgeIndex>> seen;
  std::vector<EdgeSet> found;
  auto record = [&](const EdgeSet& s) {
    auto key = indices(s);
    if (seen.insert(key).second) found.push_back(s);
  };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).is_loop()) continue;
    EdgeSet s(g.edge_count());
    s.set(e);
    record(s);
  }
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  EdgeSet path(g.edge_count());
  for (VertexId s = 0; s < n; ++s) {
    std::function<void(VertexId)> extend = [&](VertexId x) {
      for (EdgeIndex e : inc[x]) {
        const auto& rec = g.edge(e);
        if (rec.is_loop() || path.test(e)) continue;
        VertexId y = rec.other(x);
        if (y == s) {
          if (path.any()) {
            path.set(e);
            record(path);
            path.reset(e);
          }
          continue;
        }
        if (y < s || on_path[y]) continue;
        on_path[y] = true;
        path.set(e);
        extend(y);
        path.reset(e);
        on_path[y] = false;
      }
    };
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  std::sort(found.begin(), found.end(), less_support);
  std::vector<Circle> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(make_circle_or_throw(g, s));
  return out;
}

std::vector<ClosedWalk> cyclic_orientations(const Graph& g, const BinaryCycle& b, std::size_t budget) {
  std::vector<ClosedWalk> out;
  if (budget == 0) return out;
  if (b.support.none()) {
    out.push_back(ClosedWalk{0, {}});
    return out;
  }
  if (!is_binary_cycle(g, b.support)) throw GraphError("edge set is not a binary cycle");
  auto inc = g.incidence();
  Graph support_graph = edge_subgraph(g, b.support, true);
  auto labels = support_graph.component_labels();
  auto deg = support_degrees(g, b.support);
  // Components of the support, each with its least vertex and edge set.
  std::map<std::size_t, std::pair<VertexId, EdgeSet>> comps;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    auto [it, inserted] = comps.try_emplace(labels[v], v, EdgeSet(g.edge_count()));
    (void)inserted;
  }
  for (auto e = b.support.find_first(); e != EdgeSet::npos; e = b.support.find_next(e))
    comps.at(labels[g.edge(e).tail]).second.set(e);
  std::vector<std::pair<VertexId, EdgeSet>> parts;
  for (auto& [label, part] : comps) parts.push_back(part);
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  auto host_labels = g.component_labels();
  for (const auto& p : parts)
    if (host_labels[p.first] != host_labels[parts.front().first])
      throw GraphError("binary cycle spans several components of the host; no cyclic orientation exists");
  EdgeSet forest = spanning_forest(g);
  const VertexId base = parts.front().first;

  auto assemble = [&](const std::vector<std::vector<DirectedEdge>>& circuits) {
    ClosedWalk w{base, circuits.front()};
    for (std::size_t k = 1; k < parts.size(); ++k) {
      auto path = forest_path(g, forest, base, parts[k].first);
      w.steps.insert(w.steps.end(), path.begin(), path.end());
      w.steps.insert(w.steps.end(), circuits[k].begin(), circuits[k].end());
      for (auto it = path.rbegin(); it != path.rend(); ++it) w.steps.push_back(it->reversed());
    }
    return w;
  };
  auto push = [&](ClosedWalk w) {
    if (out.size() >= budget) return;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  };

  std::vector<std::vector<DirectedEdge>> canonical;
  for (const auto& p : parts) canonical.push_back(euler_circuit(g, inc, p.second, p.first));
  ClosedWalk first = assemble(canonical);
  push(first);
  push(reversed_walk(g, first));

  for (std::size_t k = 0; k < parts.size() && out.size() < budget; ++k) {
    std::vector<std::vector<DirectedEdge>> alternatives;
    all_euler_circuits(g, inc, parts[k].second, parts[k].first, budget, alternatives);
    for (const auto& alt : alternatives) {
      auto circuits = canonical;
      circuits[k] = alt;
      push(assemble(circuits));
      if (out.size() >= budget) break;
    }
  }
  for (std::size_t times = 3; out.size() < budget; times += 2) {
    std::size_t before = out.size();
    push(repeated_walk(first, times));
    push(repeated_walk(reversed_walk(g, first), times));
    if (out.size() == before) break;
  }
  return out;
}

std::optional<Circle> theta_sum(const Graph& g, const Circle& c1, const Circle& c2) {
  if (c1.support() == c2.support()) return std::nullopt;
  EdgeSet uni = c1.support() | c2.support();
  for (auto e = uni.find_first(); e != EdgeSet::npos; e = uni.find_next(e))
    if (g.edge(e).is_loop()) return std::nullopt;
  auto deg = support_degrees(g, uni);
  std::size_t three = 0;
  for (auto d : deg) {
    if (d == 3) ++three;
    else if (d != 0 && d != 2) return std::nullopt;
  }
  if (three != 2) return std::nullopt;
  if (edge_subgraph(g, uni).component_count() != 1) return std::nullopt;
  return make_circle(g, c1.support() ^ c2.support());
}

EdgeSet improper_edges(std::size_t edge_count, std::span<const BinaryCycle> members) {
  std::vector<std::size_t> count(edge_count, 0);
  for (const auto& m : members)
    for (auto e = m.support.find_first(); e != EdgeSet::npos; e = m.support.find_next(e)) ++count[e];
  EdgeSet out(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e)
    if (count[e] == 1) out.set(e);
  return out;
}

bool digon_condition(const Graph& g, std::span<const BinaryCycle> members, const Circle& d) {
  auto edges = indices(d.support());
  if (edges.size() != 2) throw GraphError("digon condition needs a 2-edge circle");
  const auto& a = g.edge(edges[0]);
  const auto& b = g.edge(edges[1]);
  if (a.is_loop() || b.is_loop() ||
      std::minmax(a.tail, a.head) != std::minmax(b.tail, b.head))
    throw GraphError("digon condition needs a 2-edge circle");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].support == d.support()) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if ((members[i].support ^ members[j].support) == d.support()) return false;
  }
  return true;
}

}  // namespace gainbalance
