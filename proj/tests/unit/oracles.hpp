#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "gainbalance/graph.hpp"
#include "gainbalance/smith.hpp"

namespace oracle {

using gainbalance::BigInt;
using gainbalance::Graph;
using Pair = std::pair<std::size_t, std::size_t>;

inline std::vector<Pair> ends(const Graph& g) {
  std::vector<Pair> out;
  for (const auto& e : g.edges()) out.push_back({e.tail, e.head});
  return out;
}

// connectivity of the vertices in `alive` using the edges in `mask`
inline bool connected(std::size_t n, const std::vector<Pair>& es, std::uint64_t mask, const std::vector<bool>& alive) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < es.size(); ++i)
    if (mask >> i & 1) parent[find(es[i].first)] = find(es[i].second);
  std::size_t root = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (root == n) root = find(v);
    else if (find(v) != root) return false;
  }
  return true;
}

inline bool inseparable(const Graph& g) {
  auto es = ends(g);
  std::size_t n = g.vertex_count();
  std::uint64_t all = es.size() == 64 ? ~0ULL : (1ULL << es.size()) - 1;
  if (es.empty() || !connected(n, es, all, std::vector<bool>(n, true))) return false;
  if (es.size() == 1) return true;
  for (auto [a, b] : es)
    if (a == b) return false;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> alive(n, true);
    alive[v] = false;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (es[i].first != v && es[i].second != v) mask |= 1ULL << i;
    if (!connected(n, es, mask, alive)) return false;
  }
  return true;
}

// connected and every touched vertex has degree 2 (a loop counts twice)
inline bool is_circle(const Graph& g, std::uint64_t mask) {
  if (!mask) return false;
  auto es = ends(g);
  std::vector<int> deg(g.vertex_count(), 0);
  for (std::size_t i = 0; i < es.size(); ++i)
    if (mask >> i & 1) ++deg[es[i].first], ++deg[es[i].second];
  std::vector<bool> alive(g.vertex_count());
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) return false;
    alive[v] = deg[v] > 0;
  }
  return connected(g.vertex_count(), es, mask, alive);
}

inline std::vector<std::uint64_t> circles(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (1ULL << g.edge_count()); ++m)
    if (is_circle(g, m)) out.push_back(m);
  return out;
}

inline bool is_even(const Graph& g, std::uint64_t mask) {
  auto es = ends(g);
  std::vector<int> deg(g.vertex_count(), 0);
  for (std::size_t i = 0; i < es.size(); ++i)
    if (mask >> i & 1) ++deg[es[i].first], ++deg[es[i].second];
  for (int d : deg)
    if (d % 2) return false;
  return true;
}

// dimension of the binary cycle space, by counting even subgraphs
inline std::size_t cycle_dimension(const Graph& g) {
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (1ULL << g.edge_count()); ++m) count += is_even(g, m);
  std::size_t d = 0;
  while ((1ULL << d) < count) ++d;
  return d;
}

inline std::size_t rank_gf2(std::vector<std::uint64_t> v) {
  std::size_t r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(v.begin() + static_cast<long>(r), v.end(), [&](std::uint64_t x) { return x >> bit & 1; });
    if (it == v.end()) continue;
    std::swap(*it, v[r]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != r && (v[i] >> bit & 1)) v[i] ^= v[r];
    ++r;
  }
  return r;
}

// multiset of unordered endpoint pairs after relabelling
inline std::vector<Pair> relabel(const std::vector<Pair>& es, const std::vector<std::size_t>& perm) {
  std::vector<Pair> out;
  for (auto [a, b] : es) {
    auto x = perm[a], y = perm[b];
    out.push_back({std::min(x, y), std::max(x, y)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ignores isolated vertices
inline bool isomorphic(const Graph& a, const Graph& b) {
  auto strip = [](const Graph& g) {
    std::vector<std::size_t> idx(g.vertex_count(), SIZE_MAX);
    std::size_t n = 0;
    for (const auto& e : g.edges())
      for (auto v : {e.tail, e.head})
        if (idx[v] == SIZE_MAX) idx[v] = n++;
    std::vector<Pair> es;
    for (const auto& e : g.edges()) es.push_back({idx[e.tail], idx[e.head]});
    return std::make_pair(n, es);
  };
  auto [na, ea] = strip(a);
  auto [nb, eb] = strip(b);
  if (na != nb || ea.size() != eb.size()) return false;
  auto degrees = [](std::size_t n, const std::vector<Pair>& es) {
    std::vector<std::size_t> d(n, 0);
    for (auto [x, y] : es) ++d[x], ++d[y];
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(na, ea) != degrees(nb, eb)) return false;
  std::vector<std::size_t> id(nb);
  std::iota(id.begin(), id.end(), 0);
  auto target = relabel(eb, id);
  std::vector<std::size_t> perm(na);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(ea, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// every keep/delete/contract assignment of the edges; contracting a loop acts
// as deleting it
inline bool has_minor(const Graph& g, const Graph& t) {
  const std::size_t m = g.edge_count();
  auto es = ends(g);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> op(m);  // 0 keep, 1 delete, 2 contract
    std::uint64_t c = code;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < m; ++i) {
      op[i] = static_cast<int>(c % 3);
      c /= 3;
      kept += op[i] == 0;
    }
    if (kept != t.edge_count()) continue;
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (std::size_t i = 0; i < m; ++i)
      if (op[i] == 2) parent[find(es[i].first)] = find(es[i].second);
    Graph h;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) h.add_vertex("x" + std::to_string(v));
    for (std::size_t i = 0; i < m; ++i)
      if (op[i] == 0)
        h.add_edge("k" + std::to_string(i), static_cast<gainbalance::VertexId>(find(es[i].first)),
                   static_cast<gainbalance::VertexId>(find(es[i].second)));
    if (oracle::isomorphic(h, t)) return true;
  }
  return false;
}

// determinant by cofactor expansion
inline BigInt det(const std::vector<std::vector<BigInt>>& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(row);
    }
    BigInt term = a[0][j] * det(sub);
    sum += (j % 2 ? -term : term);
  }
  return sum;
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// invariant factors from determinantal divisors: d_k = D_k / D_{k-1}
inline std::vector<BigInt> invariant_factors(const std::vector<std::vector<BigInt>>& a, std::size_t cols) {
  std::size_t rows = a.size();
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> m;
        for (auto i : r) {
          std::vector<BigInt> row;
          for (auto j : c) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = gcd(g, det(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
