#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gainbalance/graph.hpp"

namespace gainbalance {

enum class Family {
  wheel,                // W(n): hub w, rim v1..vn, spokes s_i = w->v_i, rim r_i = v_i->v_{i+1}
  multi_k2,             // mK2: v1, v2 and edges e12, e12#2, ...
  circle_multi,         // C_l(m_1..m_l): class i joins v_i -> v_{i+1}
  k4_opposite,          // K4(m,m'): e12 has m copies, e34 has m' copies
  k4_adjacent_doubled,  // K4'': spokes e1, e2 doubled at the hub w
  loop_vertex,          // K1 with a loop: vertex v, edge e
  doubled_circle,       // 2C_n: e_i and f_i join v_i -> v_{i+1}
  doubled_path,         // 2P_n: e_i and f_i join v_{i-1} -> v_i, ends v0 and vn
  grid,                 // Grid(r,c): r x c cells
  tripartite_fan,       // K11p(m; m_1..m_p)
};

struct NamedGraphSpec {
  Family family = Family::loop_vertex;
  std::vector<int> params;

  static NamedGraphSpec wheel(int n) { return {Family::wheel, {n}}; }
  static NamedGraphSpec multi_k2(int m) { return {Family::multi_k2, {m}}; }
  static NamedGraphSpec circle_multi(std::vector<int> m) { return {Family::circle_multi, std::move(m)}; }
  static NamedGraphSpec k4_opposite(int m, int m2) { return {Family::k4_opposite, {m, m2}}; }
  static NamedGraphSpec k4_adjacent_doubled() { return {Family::k4_adjacent_doubled, {}}; }
  static NamedGraphSpec loop_vertex() { return {Family::loop_vertex, {}}; }
  static NamedGraphSpec doubled_circle(int n) { return {Family::doubled_circle, {n}}; }
  static NamedGraphSpec doubled_path(int n) { return {Family::doubled_path, {n}}; }
  static NamedGraphSpec grid(int rows, int cols) { return {Family::grid, {rows, cols}}; }
  /// params = {m, m_1, ..., m_p}
  static NamedGraphSpec tripartite_fan(int m, const std::vector<int>& fan) {
    std::vector<int> p{m};
    p.insert(p.end(), fan.begin(), fan.end());
    return {Family::tripartite_fan, std::move(p)};
  }

  bool operator==(const NamedGraphSpec&) const = default;
};

/// Throws GraphError when parameters are out of range.
Graph build_named(const NamedGraphSpec& spec);

/// Parses tags such as W4, 2C4, K4dd, C3(3,3,2), C3-332, K4(2,1), mK2(5), 5K2,
/// K1loop, P2P2, Grid(2,3), K11p(1;1,2). Returns nullopt for anything else.
std::optional<NamedGraphSpec> parse_named(std::string_view tag);
std::string to_string(const NamedGraphSpec& spec);

/// Face boundaries of Grid(rows, cols) as edge id lists, row-major.
std::vector<std::vector<std::string>> grid_faces(int rows, int cols);

/// Recognises the base graphs of the structural characterisation: a single
/// loop, mK2, C3(m,2,2) with m >= 2 and K4(m,m'). Matching is up to isomorphism.
std::optional<NamedGraphSpec> match_base_family(const Graph& g);

}  // namespace gainbalance
