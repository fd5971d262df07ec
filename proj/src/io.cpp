#include "gainbalance/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gainbalance/named.hpp"

namespace gainbalance {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  std::string rest_after(std::size_t k) const {
    std::string s;
    for (std::size_t i = k; i < tokens.size(); ++i) s += (s.empty() ? "" : " ") + tokens[i].text;
    return s;
  }
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    // '#' opens a comment only at the start of a token; ids like e12#2 keep theirs
    std::size_t hash = 0;
    while (hash < raw.size() && !(raw[hash] == '#' && (hash == 0 || std::isspace(static_cast<unsigned char>(raw[hash - 1])))))
      ++hash;
    std::string_view body = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      std::size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(body.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  for (const auto& line : lex(text)) {
    const auto& t = line.tokens;
    if (t[0].text == "vertex") {
      if (t.size() != 2) throw ParseError("expected 'vertex <name>'", line.number, t[0].column);
      if (g.find_vertex(t[1].text)) throw ParseError("duplicate vertex '" + t[1].text + "'", line.number, t[1].column);
      g.add_vertex(t[1].text);
    } else if (t[0].text == "edge") {
      if (t.size() != 4) throw ParseError("expected 'edge <id> <tail> <head>'", line.number, t[0].column);
      if (g.find_edge(t[1].text)) throw ParseError("duplicate edge '" + t[1].text + "'", line.number, t[1].column);
      g.add_edge(t[1].text, t[2].text, t[3].text);
    } else {
      throw ParseError("unknown declaration '" + t[0].text + "'", line.number, t[0].column);
    }
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  for (const auto& name : g.vertex_names()) os << "vertex " << name << "\n";
  for (const auto& e : g.edges()) os << "edge " << e.id << " " << g.vertex_name(e.tail) << " " << g.vertex_name(e.head) << "\n";
  return os.str();
}

GainAssignment parse_gains(std::string_view text, const Graph& g) {
  auto lines = lex(text);
  if (lines.empty() || lines[0].tokens[0].text != "group")
    throw ParseError("gain file must start with a 'group' header", lines.empty() ? 1 : lines[0].number, 1);
  Group group;
  try {
    group = parse_group(lines[0].rest_after(1));
  } catch (const GroupError& e) {
    throw ParseError(e.what(), lines[0].number, lines[0].tokens.size() > 1 ? lines[0].tokens[1].column : 1);
  }
  GainAssignment a = identity_gains(g, group);
  std::vector<bool> seen(g.edge_count(), false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    if (t[0].text != "gain" || t.size() < 3)
      throw ParseError("expected 'gain <edge-id> <element>'", line.number, t[0].column);
    auto e = g.find_edge(t[1].text);
    if (!e) throw ParseError("unknown edge '" + t[1].text + "'", line.number, t[1].column);
    if (seen[*e]) throw ParseError("edge '" + t[1].text + "' has two gains", line.number, t[1].column);
    seen[*e] = true;
    try {
      a.gains[*e] = group.parse_element(line.rest_after(2));
    } catch (const GroupError& err) {
      throw ParseError(err.what(), line.number, t[2].column);
    }
  }
  return a;
}

std::string format_gains(const Graph& g, const GainAssignment& a) {
  std::ostringstream os;
  os << "group " << a.group.to_string() << "\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!a.group.is_identity(a.gains[e])) os << "gain " << g.edge(e).id << " " << a.group.format(a.gains[e]) << "\n";
  return os.str();
}

namespace {

ClosedWalk walk_from_tokens(const Graph& g, const std::vector<Token>& t, std::size_t from, std::size_t line) {
  ClosedWalk w;
  for (std::size_t i = from; i < t.size(); ++i) {
    std::string id = t[i].text;
    Direction d = Direction::forward;
    if (!id.empty() && id[0] == '-') {
      d = Direction::reverse;
      id = id.substr(1);
    }
    auto e = g.find_edge(id);
    if (!e) throw ParseError("unknown edge '" + id + "'", line, t[i].column);
    w.steps.push_back({*e, d});
  }
  if (w.steps.empty()) throw ParseError("empty walk", line, 1);
  w.start = step_source(g, w.steps.front());
  if (!is_valid_walk(g, w)) throw ParseError("steps do not form a closed walk", line, t[from].column);
  return w;
}

}  // namespace

ClosedWalk parse_walk(const Graph& g, std::string_view text) {
  auto lines = lex(text);
  if (lines.size() != 1) throw ParseError("expected a single walk", lines.empty() ? 1 : lines[1].number, 1);
  return walk_from_tokens(g, lines[0].tokens, 0, lines[0].number);
}

bool ParsedBasis::fully_oriented() const {
  for (const auto& w : walks)
    if (!w) return false;
  return true;
}

OrientedBasis ParsedBasis::oriented(const Graph& g) const {
  OrientedBasis out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (walks[i]) out.push_back({members[i], *walks[i]});
    else out.push_back({members[i], make_circle_or_throw(g, members[i].support).walk});
  }
  return out;
}

ParsedBasis parse_basis(std::string_view text, const Graph& g) {
  ParsedBasis b;
  for (const auto& line : lex(text)) {
    const auto& t = line.tokens;
    if (t[0].text == "walk:") {
      if (b.members.empty()) throw ParseError("'walk:' line before any member", line.number, t[0].column);
      if (b.walks.back()) throw ParseError("member already has a walk", line.number, t[0].column);
      if (t.size() < 2) throw ParseError("empty walk", line.number, t[0].column);
      auto w = walk_from_tokens(g, t, 1, line.number);
      if (walk_projection(g, w) != b.members.back().support)
        throw ParseError("walk does not project onto its member", line.number, t[1].column);
      b.walks.back() = w;
      continue;
    }
    EdgeSet s(g.edge_count());
    for (const auto& tok : t) {
      auto e = g.find_edge(tok.text);
      if (!e) throw ParseError("unknown edge '" + tok.text + "'", line.number, tok.column);
      if (s.test(*e)) throw ParseError("edge '" + tok.text + "' repeated", line.number, tok.column);
      s.set(*e);
    }
    b.members.push_back({s});
    b.walks.emplace_back();
  }
  return b;
}

std::string format_basis(const Graph& g, const OrientedBasis& b) {
  std::ostringstream os;
  for (const auto& m : b) {
    std::string ids;
    for (const auto& id : g.edge_ids(m.cycle.support)) ids += (ids.empty() ? "" : " ") + id;
    os << ids << "\n";
    if (!m.walk.trivial()) os << "walk: " << format_walk(g, m.walk) << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph load_graph(const std::string& spec) {
  const std::string prefix = "file:";
  if (spec.rfind(prefix, 0) == 0) return parse_graph(read_text_file(spec.substr(prefix.size())));
  if (auto named = parse_named(spec)) return build_named(*named);
  if (!std::filesystem::exists(spec)) throw std::invalid_argument("'" + spec + "' is neither a named graph tag nor a file");
  return parse_graph(read_text_file(spec));
}

}  // namespace gainbalance
