#include "gainbalance/named.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace gainbalance {

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

std::string copy_id(const std::string& base, int copy) {
  return copy == 1 ? base : base + "#" + std::to_string(copy);
}

void add_class(Graph& g, const std::string& base, VertexId tail, VertexId head, int m) {
  for (int c = 1; c <= m; ++c) g.add_edge(copy_id(base, c), tail, head);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError("named graph parameter out of range: " + what);
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) return {};
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

Graph build_named(const NamedGraphSpec& spec) {
  const auto& p = spec.params;
  auto positive = [&](std::size_t from) {
    return std::all_of(p.begin() + static_cast<long>(from), p.end(), [](int x) { return x >= 1; });
  };
  Graph g;
  switch (spec.family) {
    case Family::wheel: {
      require(p.size() == 1 && p[0] >= 3, "wheel needs n >= 3");
      const int n = p[0];
      VertexId hub = g.add_vertex("w");
      for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
      for (int i = 1; i <= n; ++i) g.add_edge("s" + std::to_string(i), hub, static_cast<VertexId>(i));
      for (int i = 1; i <= n; ++i)
        g.add_edge("r" + std::to_string(i), static_cast<VertexId>(i), static_cast<VertexId>(i % n + 1));
      break;
    }
    case Family::multi_k2: {
      require(p.size() == 1 && positive(0), "mK2 needs m >= 1");
      g.add_vertex("v1");
      g.add_vertex("v2");
      add_class(g, "e12", 0, 1, p[0]);
      break;
    }
    case Family::circle_multi: {
      require(!p.empty() && positive(0), "C_l needs l >= 1 and multiplicities >= 1");
      const int l = static_cast<int>(p.size());
      for (int i = 1; i <= l; ++i) g.add_vertex(vname(i));
      for (int i = 1; i <= l; ++i) {
        int j = i % l + 1;
        std::string base = l >= 10 ? "e" + std::to_string(i) + "_" + std::to_string(j)
                                   : "e" + std::to_string(i) + std::to_string(j);
        add_class(g, base, static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1), p[i - 1]);
      }
      break;
    }
    case Family::k4_opposite: {
      require(p.size() == 2 && positive(0), "K4(m,m') needs m, m' >= 1");
      for (int i = 1; i <= 4; ++i) g.add_vertex(vname(i));
      add_class(g, "e12", 0, 1, p[0]);
      add_class(g, "e13", 0, 2, 1);
      add_class(g, "e14", 0, 3, 1);
      add_class(g, "e23", 1, 2, 1);
      add_class(g, "e24", 1, 3, 1);
      add_class(g, "e34", 2, 3, p[1]);
      break;
    }
    case Family::k4_adjacent_doubled: {
      require(p.empty(), "K4'' takes no parameters");
      VertexId w = g.add_vertex("w");
      for (int i = 1; i <= 3; ++i) g.add_vertex(vname(i));
      add_class(g, "e1", w, 1, 2);
      add_class(g, "e2", w, 2, 2);
      add_class(g, "e3", w, 3, 1);
      g.add_edge("e12", 1, 2);
      g.add_edge("e23", 2, 3);
      g.add_edge("e31", 3, 1);
      break;
    }
    case Family::loop_vertex: {
      require(p.empty(), "K1 loop takes no parameters");
      VertexId v = g.add_vertex("v");
      g.add_edge("e", v, v);
      break;
    }
    case Family::doubled_circle: {
      require(p.size() == 1 && p[0] >= 1, "2C_n needs n >= 1");
      const int n = p[0];
      for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
      for (char c : {'e', 'f'})
        for (int i = 1; i <= n; ++i)
          g.add_edge(std::string(1, c) + std::to_string(i), static_cast<VertexId>(i - 1),
                     static_cast<VertexId>(i % n));
      break;
    }
    case Family::doubled_path: {
      require(p.size() == 1 && p[0] >= 1, "2P_n needs n >= 1");
      const int n = p[0];
      for (int i = 0; i <= n; ++i) g.add_vertex(vname(i));
      for (char c : {'e', 'f'})
        for (int i = 1; i <= n; ++i)
          g.add_edge(std::string(1, c) + std::to_string(i), static_cast<VertexId>(i - 1),
                     static_cast<VertexId>(i));
      break;
    }
    case Family::grid: {
      require(p.size() == 2 && positive(0), "Grid(r,c) needs r, c >= 1");
      const int rows = p[0], cols = p[1];
      auto at = [&](int i, int j) { return "v" + std::to_string(i) + "_" + std::to_string(j); };
      for (int i = 0; i <= rows; ++i)
        for (int j = 0; j <= cols; ++j) g.add_vertex(at(i, j));
      for (int i = 0; i <= rows; ++i)
        for (int j = 0; j < cols; ++j)
          g.add_edge("h" + std::to_string(i) + "_" + std::to_string(j), at(i, j), at(i, j + 1));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= cols; ++j)
          g.add_edge("u" + std::to_string(i) + "_" + std::to_string(j), at(i, j), at(i + 1, j));
      break;
    }
    case Family::tripartite_fan: {
      require(p.size() >= 2 && positive(0), "K11p needs m, p >= 1 and m_i >= 1");
      VertexId v = g.add_vertex("v");
      VertexId w = g.add_vertex("w");
      add_class(g, "vw", v, w, p[0]);
      for (std::size_t i = 1; i < p.size(); ++i) {
        VertexId x = g.add_vertex("x" + std::to_string(i));
        add_class(g, "vx" + std::to_string(i), v, x, p[i]);
        g.add_edge("xw" + std::to_string(i), x, w);
      }
      break;
    }
  }
  return g;
}

std::optional<NamedGraphSpec> parse_named(std::string_view tag_view) {
  const std::string tag(tag_view);
  std::smatch m;
  static const std::regex wheel(R"(W(\d+))");
  static const std::regex dcircle(R"(2C(\d+))");
  static const std::regex dpath(R"(2P(\d+))");
  static const std::regex mk2(R"(mK2\((\d+)\))");
  static const std::regex nk2(R"((\d*)K2)");
  static const std::regex circle(R"(C(\d+)\(([\d,\s]+)\))");
  static const std::regex circle_dash(R"(C(\d+)-(\d+))");
  static const std::regex plain_circle(R"(C(\d+))");
  static const std::regex k4(R"(K4\((\d+)\s*,\s*(\d+)\))");
  static const std::regex grid(R"(Grid\((\d+)\s*,\s*(\d+)\))");
  static const std::regex fan(R"(K11p\((\d+)\s*;\s*([\d,\s]+)\))");
  try {
    if (tag == "K1loop" || tag == "K1o") return NamedGraphSpec::loop_vertex();
    if (tag == "K4dd") return NamedGraphSpec::k4_adjacent_doubled();
    if (tag == "K4") return NamedGraphSpec::k4_opposite(1, 1);
    if (tag == "P2P2") return NamedGraphSpec::doubled_path(2);
    if (std::regex_match(tag, m, wheel)) return NamedGraphSpec::wheel(std::stoi(m[1]));
    if (std::regex_match(tag, m, dcircle)) return NamedGraphSpec::doubled_circle(std::stoi(m[1]));
    if (std::regex_match(tag, m, dpath)) return NamedGraphSpec::doubled_path(std::stoi(m[1]));
    if (std::regex_match(tag, m, mk2)) return NamedGraphSpec::multi_k2(std::stoi(m[1]));
    if (std::regex_match(tag, m, nk2))
      return NamedGraphSpec::multi_k2(m[1].length() ? std::stoi(m[1]) : 1);
    if (std::regex_match(tag, m, circle)) {
      auto mult = parse_int_list(m[2], ',');
      if (mult.empty() || static_cast<int>(mult.size()) != std::stoi(m[1])) return std::nullopt;
      return NamedGraphSpec::circle_multi(mult);
    }
    if (std::regex_match(tag, m, circle_dash)) {
      const std::string digits = m[2];
      if (static_cast<int>(digits.size()) != std::stoi(m[1])) return std::nullopt;
      std::vector<int> mult;
      for (char c : digits) mult.push_back(c - '0');
      return NamedGraphSpec::circle_multi(mult);
    }
    if (std::regex_match(tag, m, plain_circle))
      return NamedGraphSpec::circle_multi(std::vector<int>(static_cast<std::size_t>(std::stoi(m[1])), 1));
    if (std::regex_match(tag, m, k4))
      return NamedGraphSpec::k4_opposite(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(tag, m, grid)) return NamedGraphSpec::grid(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(tag, m, fan)) {
      auto mult = parse_int_list(m[2], ',');
      if (mult.empty()) return std::nullopt;
      return NamedGraphSpec::tripartite_fan(std::stoi(m[1]), mult);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(const NamedGraphSpec& spec) {
  const auto& p = spec.params;
  auto join = [&](std::size_t from, char sep) {
    std::string s;
    for (std::size_t i = from; i < p.size(); ++i) {
      if (i > from) s += sep;
      s += std::to_string(p[i]);
    }
    return s;
  };
  switch (spec.family) {
    case Family::wheel: return "W" + std::to_string(p.at(0));
    case Family::multi_k2: return "mK2(" + std::to_string(p.at(0)) + ")";
    case Family::circle_multi: return "C" + std::to_string(p.size()) + "(" + join(0, ',') + ")";
    case Family::k4_opposite: return "K4(" + join(0, ',') + ")";
    case Family::k4_adjacent_doubled: return "K4dd";
    case Family::loop_vertex: return "K1loop";
    case Family::doubled_circle: return "2C" + std::to_string(p.at(0));
    case Family::doubled_path: return "2P" + std::to_string(p.at(0));
    case Family::grid: return "Grid(" + join(0, ',') + ")";
    case Family::tripartite_fan: return "K11p(" + std::to_string(p.at(0)) + ";" + join(1, ',') + ")";
  }
  return "?";
}

std::vector<std::vector<std::string>> grid_faces(int rows, int cols) {
  std::vector<std::vector<std::string>> faces;
  auto id = [](char c, int i, int j) { return std::string(1, c) + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      faces.push_back({id('h', i, j), id('u', i, j + 1), id('h', i + 1, j), id('u', i, j)});
  return faces;
}

std::optional<NamedGraphSpec> match_base_family(const Graph& g) {
  auto deg = g.degrees();
  std::vector<VertexId> live;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0) live.push_back(v);
  const std::size_t e = g.edge_count();
  if (live.size() == 1 && e == 1 && g.edge(0).is_loop()) return NamedGraphSpec::loop_vertex();
  if (g.has_loops()) return std::nullopt;
  if (live.size() == 2 && e >= 1) return NamedGraphSpec::multi_k2(static_cast<int>(e));
  if (live.size() == 3) {
    std::vector<int> m{static_cast<int>(g.multiplicity(live[0], live[1])),
                       static_cast<int>(g.multiplicity(live[1], live[2])),
                       static_cast<int>(g.multiplicity(live[0], live[2]))};
    std::sort(m.rbegin(), m.rend());
    if (m[0] >= 2 && m[1] == 2 && m[2] == 2) return NamedGraphSpec::circle_multi({m[0], 2, 2});
    return std::nullopt;
  }
  if (live.size() == 4) {
    struct PairMult {
      std::size_t a, b;
      int m;
    };
    std::vector<PairMult> pairs;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        pairs.push_back({i, j, static_cast<int>(g.multiplicity(live[i], live[j]))});
    if (std::any_of(pairs.begin(), pairs.end(), [](const PairMult& p) { return p.m == 0; }))
      return std::nullopt;
    std::vector<PairMult> multi;
    for (const auto& p : pairs)
      if (p.m > 1) multi.push_back(p);
    if (multi.empty()) return NamedGraphSpec::k4_opposite(1, 1);
    if (multi.size() == 1) return NamedGraphSpec::k4_opposite(multi[0].m, 1);
    if (multi.size() == 2) {
      const auto& x = multi[0];
      const auto& y = multi[1];
      bool disjoint = x.a != y.a && x.a != y.b && x.b != y.a && x.b != y.b;
      if (!disjoint) return std::nullopt;
      return NamedGraphSpec::k4_opposite(std::max(x.m, y.m), std::min(x.m, y.m));
    }
  }
  return std::nullopt;
}

}  // namespace gainbalance
