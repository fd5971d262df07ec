#include "gainbalance/report.hpp"

#include "gainbalance/io.hpp"

namespace gainbalance {

std::string to_string(const BigInt& x) { return x.str(); }

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id}, {"tail", g.vertex_name(e.tail)}, {"head", g.vertex_name(e.head)}});
  return {{"vertices", g.vertex_names()}, {"edges", edges}};
}

Json circle_json(const Graph& g, const Circle& c) {
  return {{"edges", g.edge_ids(c.support())}, {"walk", format_walk(g, c.walk)}};
}

Json basis_json(const Graph& g, const OrientedBasis& b) {
  Json out = Json::array();
  for (const auto& m : b) out.push_back({{"edges", g.edge_ids(m.cycle.support)}, {"walk", format_walk(g, m.walk)}});
  return out;
}

Json gains_json(const Graph& g, const GainAssignment& a) {
  Json gains = Json::object();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) gains[g.edge(e).id] = a.group.format(a.gains[e]);
  return {{"group", a.group.to_string()}, {"gains", gains}};
}

Json balance_json(const Graph& g, const BalanceResult& r) {
  Json out{{"balanced", r.balanced}};
  out["certificate"] = r.certificate ? circle_json(g, *r.certificate) : Json(nullptr);
  return out;
}

Json witness_json(const BadWitness& w) {
  const Graph& g = w.gain_graph.graph;
  return {{"test", to_string(w.test)},
          {"graph", graph_json(g)},
          {"gains", gains_json(g, w.gain_graph.gains)},
          {"basis", basis_json(g, w.basis)},
          {"verified", verify_bad_witness(w)}};
}

Json decomposition_json(const Decomposition& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json steps = Json::array();
    for (const auto& s : b.steps)
      steps.push_back({{"from", s.from}, {"neighbor", s.neighbor}, {"vertex", s.vertex}, {"edge", s.edge}, {"moved", s.moved}});
    blocks.push_back({{"edges", b.block.edge_count()},
                      {"block", graph_json(b.block)},
                      {"base", to_string(b.base)},
                      {"extrusions", steps}});
  }
  return {{"blocks", blocks}};
}

Json verdict_json(const Verdict& v) {
  Json out{{"status", to_string(v.status)}, {"rule", v.rule}};
  Json evidence = nullptr;
  if (v.witness) evidence = witness_json(*v.witness);
  else if (v.decomposition) evidence = decomposition_json(*v.decomposition);
  out["evidence"] = evidence;
  if (!v.minor.empty()) out["minor"] = v.minor;
  return out;
}

Json minor_json(const Graph& host, const Graph& target, const MinorWitness& w) {
  Json branch = Json::object();
  for (VertexId v = 0; v < target.vertex_count(); ++v) {
    std::vector<std::string> names;
    for (auto h : w.branch_sets[v]) names.push_back(host.vertex_name(h));
    branch[target.vertex_name(v)] = names;
  }
  Json edges = Json::object();
  for (EdgeIndex e = 0; e < target.edge_count(); ++e) edges[target.edge(e).id] = host.edge(w.edge_map[e]).id;
  return {{"branch_sets", branch}, {"edge_map", edges}, {"verified", verify_minor_witness(host, target, w)}};
}

Json abelian_report_json(const Graph& g, const UniversalAbelianReport& r, std::span<const Circle> queries) {
  Json torsion = Json::array();
  for (const auto& d : r.torsion) torsion.push_back(to_string(d));
  Json invariants = Json::array();
  for (const auto& d : r.smith.invariants) invariants.push_back(to_string(d));
  Json q = Json::array();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    Json item = circle_json(g, queries[i]);
    item["order"] = r.orders[i] ? Json(to_string(*r.orders[i])) : Json("infinite");
    q.push_back(item);
  }
  return {{"lattice_rank", r.lattice_rank()},
          {"invariant_factors", invariants},
          {"torsion", torsion},
          {"free_rank", r.free_rank},
          {"queries", q}};
}

}  // namespace gainbalance
