#include "gainbalance/canon.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace gainbalance {

namespace {

struct Refiner {
  std::size_t n;
  std::vector<std::uint32_t> matrix;  // n x n multiplicities, loops on the diagonal
  std::vector<int> base_colors;

  std::uint32_t at(std::size_t i, std::size_t j) const { return matrix[i * n + j]; }

  // Ranks `keys` in place into dense colours; returns the number of colours.
  template <typename Key>
  static std::size_t rank(const std::vector<Key>& keys, std::vector<std::size_t>& colors) {
    std::vector<std::size_t> idx(keys.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::size_t next = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0 && keys[idx[k - 1]] < keys[idx[k]]) ++next;
      colors[idx[k]] = next;
    }
    return idx.empty() ? 0 : next + 1;
  }

  std::size_t refine(std::vector<std::size_t>& colors) const {
    using Sig = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::uint32_t>>>;
    std::size_t classes = 0;
    {
      std::vector<std::size_t> tmp = colors;
      classes = rank(tmp, colors);
    }
    while (true) {
      std::vector<Sig> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].first = colors[v];
        for (std::size_t u = 0; u < n; ++u)
          if (u != v && at(v, u)) sig[v].second.emplace_back(colors[u], at(v, u));
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::size_t next = rank(sig, colors);
      if (next == classes) return classes;
      classes = next;
    }
  }

  std::vector<std::uint32_t> leaf_code(const std::vector<std::size_t>& colors) const {
    std::vector<std::size_t> at_pos(n);
    for (std::size_t v = 0; v < n; ++v) at_pos[colors[v]] = v;
    std::vector<std::uint32_t> code;
    code.reserve(2 + 2 * n + n * (n + 1) / 2);
    code.push_back(static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) code.push_back(static_cast<std::uint32_t>(base_colors[at_pos[i]]));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) code.push_back(at(at_pos[i], at_pos[j]));
    return code;
  }

  void search(std::vector<std::size_t> colors, std::vector<std::uint32_t>& best,
              std::vector<std::size_t>& best_colors, bool& have_best) const {
    std::size_t classes = refine(colors);
    if (classes == n) {
      auto code = leaf_code(colors);
      if (!have_best || code < best) {
        best = std::move(code);
        best_colors = colors;
        have_best = true;
      }
      return;
    }
    std::vector<std::size_t> count(classes, 0);
    for (auto c : colors) ++count[c];
    std::size_t cell = 0;
    while (count[cell] < 2) ++cell;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != cell) continue;
      std::vector<std::size_t> next(n);
      for (std::size_t u = 0; u < n; ++u) next[u] = 2 * colors[u] + ((colors[u] == cell && u != v) ? 1 : 0);
      search(std::move(next), best, best_colors, have_best);
    }
  }
};

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = f.isolated * 0x9e3779b97f4a7c15ULL;
  for (auto x : f.code) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors) {
  if (!colors.empty() && colors.size() != g.vertex_count())
    throw GraphError("colour vector does not match the vertex count");
  auto deg = g.degrees();
  CanonicalLabeling out;
  std::vector<VertexId> live;
  std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool isolated = deg[v] == 0 && (colors.empty() || colors[v] == 0);
    if (isolated) {
      out.isolated.push_back(v);
    } else {
      pos[v] = live.size();
      live.push_back(v);
    }
  }
  out.form.isolated = out.isolated.size();
  Refiner r;
  r.n = live.size();
  r.matrix.assign(r.n * r.n, 0);
  r.base_colors.assign(r.n, 0);
  for (const auto& e : g.edges()) {
    auto a = pos[e.tail], b = pos[e.head];
    if (a == b) {
      ++r.matrix[a * r.n + a];
    } else {
      ++r.matrix[a * r.n + b];
      ++r.matrix[b * r.n + a];
    }
  }
  for (std::size_t i = 0; i < r.n; ++i) r.base_colors[i] = colors.empty() ? 0 : colors[live[i]];
  std::vector<std::tuple<int, std::uint32_t, std::size_t>> keys(r.n);
  for (std::size_t i = 0; i < r.n; ++i) keys[i] = {r.base_colors[i], r.at(i, i), deg[live[i]]};
  std::vector<std::size_t> initial(r.n);
  Refiner::rank(keys, initial);

  std::vector<std::uint32_t> best;
  std::vector<std::size_t> best_colors;
  bool have_best = false;
  if (r.n == 0) {
    best = {0};
  } else {
    r.search(initial, best, best_colors, have_best);
  }
  out.form.code = std::move(best);
  out.order.assign(r.n, 0);
  for (std::size_t i = 0; i < r.n; ++i) out.order[best_colors[i]] = live[i];
  return out;
}

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
  return canonical_labeling(g, colors).form;
}

std::optional<GraphIsomorphism> find_isomorphism(const Graph& from, const Graph& to) {
  if (from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count())
    return std::nullopt;
  auto a = canonical_labeling(from);
  auto b = canonical_labeling(to);
  if (a.form != b.form) return std::nullopt;
  GraphIsomorphism iso;
  iso.vertex_map.assign(from.vertex_count(), 0);
  for (std::size_t k = 0; k < a.order.size(); ++k) iso.vertex_map[a.order[k]] = b.order[k];
  for (std::size_t k = 0; k < a.isolated.size(); ++k) iso.vertex_map[a.isolated[k]] = b.isolated[k];
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeIndex>> buckets;
  for (EdgeIndex e = to.edge_count(); e-- > 0;) {
    const auto& rec = to.edge(e);
    buckets[{std::min(rec.tail, rec.head), std::max(rec.tail, rec.head)}].push_back(e);
  }
  iso.edge_map.assign(from.edge_count(), 0);
  for (EdgeIndex e = 0; e < from.edge_count(); ++e) {
    const auto& rec = from.edge(e);
    VertexId x = iso.vertex_map[rec.tail], y = iso.vertex_map[rec.head];
    auto& bucket = buckets[{std::min(x, y), std::max(x, y)}];
    if (bucket.empty()) return std::nullopt;
    iso.edge_map[e] = bucket.back();
    bucket.pop_back();
  }
  return iso;
}

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

Graph strip_isolated(const Graph& g) {
  EdgeSet all(g.edge_count());
  all.set();
  return edge_subgraph(g, all, false);
}

}  // namespace gainbalance
