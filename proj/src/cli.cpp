#include "gainbalance/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gainbalance/io.hpp"
#include "gainbalance/random.hpp"
#include "gainbalance/report.hpp"

namespace gainbalance {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write file '" + p.string() + "'");
  f << text;
}

std::string oneline_graph(const Graph& g) {
  std::string s;
  for (const auto& e : g.edges()) {
    if (!s.empty()) s += " ";
    s += g.vertex_name(e.tail) + "-" + g.vertex_name(e.head);
  }
  return s;
}

void print_witness(std::ostream& out, const BadWitness& w) {
  const Graph& g = w.gain_graph.graph;
  out << "witness (" << to_string(w.test) << " test, " << w.gain_graph.group().to_string() << "):\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    out << "  gain " << g.edge(e).id << " " << w.gain_graph.group().format(w.gain_graph.gain(e)) << "\n";
  for (const auto& m : w.basis) out << "  member " << format_walk(g, m.walk) << "\n";
  out << "  verified: " << yes_no(verify_bad_witness(w)) << "\n";
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "status: " << to_string(v.status) << "\nrule: " << v.rule << "\n";
  if (!v.minor.empty()) out << "minor: " << v.minor << "\n";
  if (v.witness) print_witness(out, *v.witness);
  if (v.decomposition)
    for (const auto& b : v.decomposition->blocks)
      out << "block with " << b.block.edge_count() << " edges: " << b.steps.size() << " extrusions from "
          << to_string(b.base) << "\n";
}

struct Common {
  bool json = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balance tests for gain graphs"};
  app.name("gainbalance");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  std::string graph_spec, gains_path, basis_path, class_spec = "contains-z3", test_kind = "circle";
  std::string family, target, group_spec, out_dir;
  std::vector<std::string> queries;
  std::size_t budget = 0;
  std::size_t max_edges = 6;
  std::size_t vertices = 4, edge_count = 6;
  std::uint64_t seed = 1;
  std::int64_t modulus = 0, witness_d = 0;
  bool all_bases = false, loops = false;

  auto with_json = [&](CLI::App* s) { s->add_flag("--json", common.json, "Emit a JSON report"); };

  auto* balance = app.add_subcommand("balance", "Decide balance of a gain graph");
  balance->add_option("graph", graph_spec, "Graph file or named tag")->required();
  balance->add_option("gains", gains_path, "Gain file")->required();
  with_json(balance);

  auto* circle = app.add_subcommand("circle-test", "Run the Circle Test on a basis of circles");
  circle->add_option("graph", graph_spec)->required();
  circle->add_option("gains", gains_path)->required();
  circle->add_option("basis", basis_path)->required();
  with_json(circle);

  auto* cycle = app.add_subcommand("cycle-test", "Run the Binary Cycle Test; members without walks are searched");
  cycle->add_option("graph", graph_spec)->required();
  cycle->add_option("gains", gains_path)->required();
  cycle->add_option("basis", basis_path)->required();
  cycle->add_option("--budget", budget, "Orientations tried per member")->default_val(64)->check(CLI::PositiveNumber);
  with_json(cycle);

  auto* classify = app.add_subcommand("classify", "Classify a graph as Good, Bad or Unknown for a group class");
  classify->add_option("graph", graph_spec)->required();
  classify->add_option("--class", class_spec, "all | abelian | contains-z3 | groups:Z3,Z5")->default_val("contains-z3");
  classify->add_option("--test", test_kind, "circle | cycle")->check(CLI::IsMember({"circle", "cycle"}))->default_val("circle");
  with_json(classify);

  auto* witness = app.add_subcommand("witness", "Build the known bad witness on a named graph");
  witness->add_option("--family", family, "W4, 2C4, K4dd, C3(3,3,2), K1loop, W6, 2C6, ...")->required();
  witness->add_option("--modulus", modulus, "Cyclic modulus where the family allows a choice");
  witness->add_option("--out-dir", out_dir, "Write graph.txt, gains.txt and basis.txt here");
  with_json(witness);

  auto* minor = app.add_subcommand("minor", "Search for a minor");
  minor->add_option("graph", graph_spec)->required();
  minor->add_option("--target", target, "W4 | 2C4 | K4dd | C3-332 | K1loop | P2P2 | file:<path>")->required();
  minor->add_option("--budget", budget, "Search states")->default_val(2'000'000)->check(CLI::PositiveNumber);
  with_json(minor);

  auto* oracle = app.add_subcommand("oracle", "Brute-force goodness over one finite group");
  oracle->add_option("graph", graph_spec)->required();
  oracle->add_option("--group", group_spec, "Z3, Z2xZ2, S3, ...")->required();
  oracle->add_flag("--bases", all_bases, "List every bad circle basis");
  oracle->add_option("--budget", budget, "Gain assignments")->default_val(20'000'000)->check(CLI::PositiveNumber);
  with_json(oracle);

  auto* atlas = app.add_subcommand("atlas", "Classifier and oracle over all small inseparable graphs");
  atlas->add_option("--max-edges", max_edges)->required()->check(CLI::Range(1, 9));
  atlas->add_option("--group", group_spec)->required();
  atlas->add_option("--budget", budget, "Gain assignments per graph")->default_val(2'000'000)->check(CLI::PositiveNumber);
  with_json(atlas);

  auto* abelian = app.add_subcommand("abelian", "Orders of circles in Z^E modulo the basis lattice");
  abelian->add_option("graph", graph_spec)->required();
  abelian->add_option("basis", basis_path)->required();
  abelian->add_option("--query", queries, "Circle as space-separated edge ids; default all circles");
  abelian->add_option("--witness", witness_d, "Also build Z_d gains for the first query of order divisible by d");
  with_json(abelian);

  auto* random = app.add_subcommand("random", "Seeded random gain graph");
  random->add_option("--seed", seed)->required();
  random->add_option("--vertices", vertices)->default_val(4)->check(CLI::PositiveNumber);
  random->add_option("--edges", edge_count)->default_val(6);
  random->add_option("--group", group_spec)->default_val("Z3");
  random->add_flag("--loops", loops);
  random->add_option("--out-dir", out_dir);
  with_json(random);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Json report;
    std::ostringstream text;

    if (balance->parsed()) {
      Graph g = load_graph(graph_spec);
      GainGraph gg = make_gain_graph(g, parse_gains(read_text_file(gains_path), g));
      auto r = is_balanced(gg);
      report = balance_json(g, r);
      text << (r.balanced ? "balanced" : "unbalanced") << "\n";
      if (r.certificate)
        text << "certificate: " << format_walk(g, r.certificate->walk) << " (gain "
             << gg.group().format(walk_gain(gg, r.certificate->walk)) << ")\n";
    } else if (circle->parsed()) {
      Graph g = load_graph(graph_spec);
      GainGraph gg = make_gain_graph(g, parse_gains(read_text_file(gains_path), g));
      auto b = parse_basis(read_text_file(basis_path), g);
      bool passes = circle_test(gg, b.members);
      bool balanced = is_balanced(gg).balanced;
      report = {{"test", "circle"}, {"passes", passes}, {"balanced", balanced}, {"bad_witness", passes && !balanced}};
      text << "passes: " << yes_no(passes) << "\nbalanced: " << yes_no(balanced) << "\n";
      if (passes && !balanced) text << "the basis and gains form a bad witness\n";
    } else if (cycle->parsed()) {
      Graph g = load_graph(graph_spec);
      GainGraph gg = make_gain_graph(g, parse_gains(read_text_file(gains_path), g));
      auto b = parse_basis(read_text_file(basis_path), g);
      bool balanced = is_balanced(gg).balanced;
      bool passes = false;
      bool complete = b.fully_oriented();
      std::optional<OrientedBasis> used;
      if (complete) {
        used = b.oriented(g);
        passes = binary_cycle_test(gg, *used);
      } else {
        used = search_binary_cycle_orientations(gg, b.members, budget);
        passes = used.has_value();
      }
      report = {{"test", "binary-cycle"}, {"passes", passes}, {"balanced", balanced},
                {"orientations", complete ? "given" : "searched"}};
      report["basis"] = passes ? basis_json(g, *used) : Json(nullptr);
      text << "passes: " << yes_no(passes) << (complete ? "" : " (under searched orientations)") << "\n";
      text << "balanced: " << yes_no(balanced) << "\n";
      if (passes && !complete)
        for (const auto& m : *used) text << "walk: " << format_walk(g, m.walk) << "\n";
    } else if (classify->parsed()) {
      Graph g = load_graph(graph_spec);
      GroupClass c = parse_group_class(class_spec);
      Verdict v = test_kind == "circle" ? circle_goodness(g, c) : binary_cycle_goodness(g, c);
      report = verdict_json(v);
      print_verdict(text, v);
    } else if (witness->parsed()) {
      auto spec = parse_named(family);
      if (!spec) throw std::invalid_argument("unknown family tag '" + family + "'");
      BadWitness w = bad_witness(*spec, modulus ? std::optional<std::int64_t>(modulus) : std::nullopt);
      report = witness_json(w);
      report["family"] = to_string(*spec);
      print_witness(text, w);
      if (!out_dir.empty()) {
        std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        const Graph& g = w.gain_graph.graph;
        write_file(dir / "graph.txt", format_graph(g));
        write_file(dir / "gains.txt", format_gains(g, w.gain_graph.gains));
        write_file(dir / "basis.txt", format_basis(g, w.basis));
        text << "wrote " << (dir / "graph.txt").string() << ", gains.txt, basis.txt\n";
      }
    } else if (minor->parsed()) {
      Graph g = load_graph(graph_spec);
      Graph t = load_graph(target);
      MinorSearchLimits limits;
      limits.max_states = budget;
      auto mw = has_minor(g, t, limits);
      report = {{"target", target}, {"found", mw.has_value()}};
      report["witness"] = mw ? minor_json(g, t, *mw) : Json(nullptr);
      text << "minor " << target << ": " << (mw ? "found" : "not found") << "\n";
      if (mw) {
        for (VertexId v = 0; v < t.vertex_count(); ++v) {
          text << "  " << t.vertex_name(v) << " <-";
          for (auto h : mw->branch_sets[v]) text << " " << g.vertex_name(h);
          text << "\n";
        }
        for (EdgeIndex e = 0; e < t.edge_count(); ++e)
          text << "  " << t.edge(e).id << " -> " << g.edge(mw->edge_map[e]).id << "\n";
      }
    } else if (oracle->parsed()) {
      Graph g = load_graph(graph_spec);
      Group grp = parse_group(group_spec);
      OracleOptions opts;
      opts.max_assignments = budget;
      auto r = oracle_circle_goodness(g, grp, opts);
      report = {{"group", grp.to_string()}, {"good", r.good}, {"assignments", r.assignments}};
      report["counterexample"] = r.counterexample ? witness_json(*r.counterexample) : Json(nullptr);
      text << (r.good ? "good" : "bad") << " over " << grp.to_string() << " (" << r.assignments << " assignments)\n";
      if (r.counterexample) print_witness(text, *r.counterexample);
      if (all_bases) {
        auto bases = oracle_bad_circle_bases(g, grp, opts);
        Json list = Json::array();
        text << bases.size() << " bad circle bases\n";
        for (const auto& b : bases) {
          Json members = Json::array();
          text << " ";
          for (const auto& m : b) {
            members.push_back(g.edge_ids(m.support));
            std::string ids;
            for (const auto& id : g.edge_ids(m.support)) ids += (ids.empty() ? "" : " ") + id;
            text << " {" << ids << "}";
          }
          text << "\n";
          list.push_back(members);
        }
        report["bad_bases"] = list;
      }
    } else if (atlas->parsed()) {
      Group grp = parse_group(group_spec);
      GroupClass c = GroupClass::of({grp}, "groups:" + group_spec);
      OracleOptions opts;
      opts.max_assignments = budget;
      EnumerationOptions eopts;
      eopts.connected = true;
      Json rows = Json::array();
      std::size_t agree = 0, disagree = 0, skipped = 0;
      for (const auto& g : enumerate_multigraphs(max_edges, eopts)) {
        if (!is_inseparable(g)) continue;
        Verdict v = circle_goodness(g, c);
        Json row{{"edges", g.edge_count()}, {"graph", oneline_graph(g)}, {"classifier", to_string(v.status)}};
        std::string oracle_status;
        try {
          oracle_status = oracle_circle_goodness(g, grp, opts).good ? "Good" : "Bad";
        } catch (const BudgetExceeded&) {
          oracle_status = "skipped";
          ++skipped;
        }
        row["oracle"] = oracle_status;
        if (!v.minor.empty()) row["minor"] = v.minor;
        if (v.status != Status::unknown && oracle_status != "skipped") {
          if (oracle_status == to_string(v.status)) ++agree;
          else ++disagree;
        }
        text << g.edge_count() << "  " << to_string(v.status) << "/" << oracle_status << "  " << oneline_graph(g) << "\n";
        rows.push_back(row);
      }
      report = {{"group", grp.to_string()}, {"max_edges", max_edges}, {"graphs", rows},
                {"agree", agree}, {"disagree", disagree}, {"skipped", skipped}};
      text << rows.size() << " inseparable graphs; classifier/oracle agree " << agree << ", disagree " << disagree
           << ", oracle skipped " << skipped << "\n";
    } else if (abelian->parsed()) {
      Graph g = load_graph(graph_spec);
      auto b = parse_basis(read_text_file(basis_path), g).oriented(g);
      std::vector<Circle> qs;
      if (queries.empty()) qs = enumerate_circles(g);
      for (const auto& q : queries) qs.push_back(circle_from_ids(g, split_ids(q)));
      auto r = implies_balance_abelian(g, b, qs);
      report = abelian_report_json(g, r, qs);
      text << "lattice rank " << r.lattice_rank() << ", torsion";
      if (r.torsion.empty()) text << " none";
      for (const auto& d : r.torsion) text << " " << to_string(d);
      text << ", free rank " << r.free_rank << "\n";
      for (std::size_t i = 0; i < qs.size(); ++i)
        text << "  " << format_walk(g, qs[i].walk) << ": order " << (r.orders[i] ? to_string(*r.orders[i]) : "infinite")
             << "\n";
      if (witness_d) {
        for (std::size_t i = 0; i < qs.size(); ++i) {
          const auto& o = r.orders[i];
          if (o && (*o % witness_d) != 0) continue;
          auto gains = abelian_witness(g, b, r, qs[i], witness_d);
          report["witness"] = {{"query", circle_json(g, qs[i])}, {"gains", gains_json(g, gains)}};
          text << "witness over Z" << witness_d << " for " << format_walk(g, qs[i].walk) << ":\n" << format_gains(g, gains);
          break;
        }
        if (!report.contains("witness")) throw std::invalid_argument("no query has order divisible by the witness modulus");
      }
    } else if (random->parsed()) {
      Rng rng(seed);
      Group grp = parse_group(group_spec);
      Graph g = random_multigraph(rng, vertices, edge_count, loops);
      GainAssignment a = random_gains(rng, g, grp);
      report = {{"seed", seed}, {"graph", graph_json(g)}, {"gains", gains_json(g, a)}};
      text << format_graph(g) << format_gains(g, a);
      if (!out_dir.empty()) {
        std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "graph.txt", format_graph(g));
        write_file(dir / "gains.txt", format_gains(g, a));
      }
    }

    if (common.json) out << report.dump(2) << "\n";
    else out << text.str();
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace gainbalance
