#include "gainbalance/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace gainbalance {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VertexId Graph::add_vertex(std::string name) {
  if (name.empty()) throw GraphError("vertex name must be non-empty");
  if (vertex_lookup_.count(name)) throw GraphError("duplicate vertex '" + name + "'");
  VertexId id = names_.size();
  vertex_lookup_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

VertexId Graph::ensure_vertex(std::string_view name) {
  if (auto v = find_vertex(name)) return *v;
  return add_vertex(std::string(name));
}

EdgeIndex Graph::add_edge(std::string id, VertexId tail, VertexId head) {
  if (id.empty()) throw GraphError("edge id must be non-empty");
  if (tail >= names_.size() || head >= names_.size())
    throw GraphError("edge '" + id + "' has an undeclared endpoint");
  if (edge_lookup_.count(id)) throw GraphError("duplicate edge '" + id + "'");
  EdgeIndex e = edges_.size();
  edge_lookup_.emplace(id, e);
  edges_.push_back({std::move(id), tail, head});
  return e;
}

EdgeIndex Graph::add_edge(std::string id, std::string_view tail, std::string_view head) {
  VertexId t = ensure_vertex(tail);
  return add_edge(std::move(id), t, ensure_vertex(head));
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

EdgeIndex Graph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge '" + std::string(id) + "'");
}

std::vector<std::vector<EdgeIndex>> Graph::incidence() const {
  std::vector<std::vector<EdgeIndex>> inc(names_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].tail].push_back(e);
    if (!edges_[e].is_loop()) inc[edges_[e].head].push_back(e);
  }
  return inc;
}

std::size_t Graph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(names_.size(), 0);
  for (const auto& e : edges_) {
    ++d[e.tail];
    ++d[e.head];
  }
  return d;
}

std::size_t Graph::multiplicity(VertexId u, VertexId v) const {
  std::size_t m = 0;
  for (const auto& e : edges_)
    if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) ++m;
  return m;
}

std::vector<std::size_t> Graph::component_labels() const {
  DisjointSets sets(names_.size());
  for (const auto& e : edges_) sets.unite(e.tail, e.head);
  std::vector<std::size_t> label(names_.size());
  std::vector<std::size_t> root_label(names_.size(), SIZE_MAX);
  std::size_t next = 0;
  for (VertexId v = 0; v < names_.size(); ++v) {
    auto r = sets.find(v);
    if (root_label[r] == SIZE_MAX) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

std::size_t Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::size_t Graph::cycle_rank() const {
  return edges_.size() + component_count() - names_.size();
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const EdgeRecord& e) { return e.is_loop(); });
}

bool Graph::is_forest() const { return cycle_rank() == 0; }

std::size_t Graph::isolated_count() const {
  auto d = degrees();
  return static_cast<std::size_t>(std::count(d.begin(), d.end(), 0));
}

EdgeSet Graph::edge_set(const std::vector<std::string>& ids) const {
  EdgeSet s(edges_.size());
  for (const auto& id : ids) s.set(edge_index(id));
  return s;
}

std::vector<std::string> Graph::edge_ids(const EdgeSet& s) const {
  std::vector<std::string> out;
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e)) out.push_back(edges_.at(e).id);
  return out;
}

VertexId step_source(const Graph& g, DirectedEdge step) {
  const auto& e = g.edge(step.edge);
  return step.is_forward() ? e.tail : e.head;
}

VertexId step_target(const Graph& g, DirectedEdge step) {
  const auto& e = g.edge(step.edge);
  return step.is_forward() ? e.head : e.tail;
}

void validate_walk(const Graph& g, const ClosedWalk& w) {
  if (w.start >= g.vertex_count()) throw GraphError("walk starts at an unknown vertex");
  VertexId at = w.start;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& step = w.steps[i];
    if (step.edge >= g.edge_count()) throw GraphError("walk uses an unknown edge");
    if (step_source(g, step) != at) {
      throw GraphError("walk step " + std::to_string(i + 1) + " (edge '" + g.edge(step.edge).id +
                       "') does not start where the previous step ended");
    }
    at = step_target(g, step);
  }
  if (at != w.start) throw GraphError("walk does not return to its start vertex");
}

bool is_valid_walk(const Graph& g, const ClosedWalk& w) {
  try {
    validate_walk(g, w);
    return true;
  } catch (const GraphError&) {
    return false;
  }
}

ClosedWalk reversed_walk(const Graph& g, const ClosedWalk& w) {
  (void)g;
  ClosedWalk r{w.start, {}};
  r.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) r.steps.push_back(it->reversed());
  return r;
}

ClosedWalk repeated_walk(const ClosedWalk& w, std::size_t times) {
  ClosedWalk r{w.start, {}};
  r.steps.reserve(w.steps.size() * times);
  for (std::size_t k = 0; k < times; ++k) r.steps.insert(r.steps.end(), w.steps.begin(), w.steps.end());
  return r;
}

std::string format_walk(const Graph& g, const ClosedWalk& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    if (i) os << ' ';
    if (!w.steps[i].is_forward()) os << '-';
    os << g.edge(w.steps[i].edge).id;
  }
  return os.str();
}

EdgeSet spanning_forest(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  EdgeSet forest(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (sets.unite(rec.tail, rec.head)) forest.set(e);
  }
  return forest;
}

bool is_maximal_forest(const Graph& g, const EdgeSet& forest) {
  if (forest.size() != g.edge_count()) return false;
  DisjointSets sets(g.vertex_count());
  for (auto e = forest.find_first(); e != EdgeSet::npos; e = forest.find_next(e)) {
    const auto& rec = g.edge(e);
    if (!sets.unite(rec.tail, rec.head)) return false;
  }
  return forest.count() + g.component_count() == g.vertex_count();
}

std::vector<DirectedEdge> forest_path(const Graph& g, const EdgeSet& forest, VertexId from,
                                      VertexId to) {
  if (from == to) return {};
  auto inc = g.incidence();
  std::vector<std::optional<DirectedEdge>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (EdgeIndex e : inc[x]) {
      if (!forest.test(e)) continue;
      const auto& rec = g.edge(e);
      VertexId y = rec.other(x);
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = DirectedEdge{e, rec.tail == x ? Direction::forward : Direction::reverse};
      queue.push_back(y);
    }
  }
  if (!seen[to]) throw GraphError("no forest path between the requested vertices");
  std::vector<DirectedEdge> path;
  for (VertexId at = to; at != from; at = step_source(g, *via[at])) path.push_back(*via[at]);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph edge_subgraph(const Graph& g, const EdgeSet& edges, bool keep_vertices) {
  std::vector<bool> used(g.vertex_count(), keep_vertices);
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e)) {
    used[g.edge(e).tail] = true;
    used[g.edge(e).head] = true;
  }
  Graph sub;
  std::vector<VertexId> map(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (used[v]) map[v] = sub.add_vertex(g.vertex_name(v));
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e)) {
    const auto& rec = g.edge(e);
    sub.add_edge(rec.id, map[rec.tail], map[rec.head]);
  }
  return sub;
}

std::vector<Graph> blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto inc = g.incidence();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<EdgeIndex> stack;
  std::vector<EdgeSet> found;

  std::function<void(VertexId, std::optional<EdgeIndex>)> dfs = [&](VertexId v,
                                                                     std::optional<EdgeIndex> via) {
    disc[v] = low[v] = ++timer;
    for (EdgeIndex e : inc[v]) {
      const auto& rec = g.edge(e);
      if (rec.is_loop() || (via && *via == e)) continue;
      VertexId w = rec.other(v);
      if (!disc[w]) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          EdgeSet block(g.edge_count());
          while (true) {
            EdgeIndex top = stack.back();
            stack.pop_back();
            block.set(top);
            if (top == e) break;
          }
          found.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (!disc[v]) dfs(v, std::nullopt);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) {
      EdgeSet block(g.edge_count());
      block.set(e);
      found.push_back(std::move(block));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.find_first() < b.find_first(); });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(edge_subgraph(g, b));
  return out;
}

bool is_inseparable(const Graph& g) { return blocks(g).size() <= 1; }

Graph suppress_divalent(const Graph& g) {
  Graph current = g;
  while (true) {
    auto inc = current.incidence();
    std::optional<VertexId> target;
    for (VertexId v = 0; v < current.vertex_count() && !target; ++v) {
      if (inc[v].size() != 2) continue;
      const auto& a = current.edge(inc[v][0]);
      const auto& b = current.edge(inc[v][1]);
      if (a.is_loop() || b.is_loop()) continue;
      if (a.other(v) == b.other(v)) continue;
      target = v;
    }
    if (!target) return current;
    VertexId v = *target;
    EdgeIndex first = inc[v][0], second = inc[v][1];
    Graph next;
    for (VertexId u = 0; u < current.vertex_count(); ++u)
      if (u != v) next.add_vertex(current.vertex_name(u));
    for (EdgeIndex e = 0; e < current.edge_count(); ++e) {
      if (e == second) continue;
      const auto& rec = current.edge(e);
      if (e == first) {
        VertexId x = rec.other(v);
        VertexId y = current.edge(second).other(v);
        next.add_edge(rec.id, current.vertex_name(x), current.vertex_name(y));
      } else {
        next.add_edge(rec.id, current.vertex_name(rec.tail), current.vertex_name(rec.head));
      }
    }
    current = std::move(next);
  }
}

}  // namespace gainbalance
