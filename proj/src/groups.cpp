#include "gainbalance/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace gainbalance {

namespace {

using Perm = std::array<int, 3>;
const std::array<Perm, 6> kS3 = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
const std::array<const char*, 6> kS3Names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};

std::int64_t s3_index(const Perm& p) {
  for (std::size_t i = 0; i < kS3.size(); ++i)
    if (kS3[i] == p) return static_cast<std::int64_t>(i);
  return -1;
}

std::int64_t mod(std::int64_t a, std::int64_t k) {
  std::int64_t r = a % k;
  return r < 0 ? r + k : r;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Free reduction of a signed-symbol word.
std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> out;
  for (auto x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

}  // namespace

Group Group::cyclic(std::int64_t k) {
  if (k < 1) throw GroupError("cyclic group order must be at least 1");
  Group g;
  g.kind_ = GroupKind::cyclic;
  g.factors_ = {k};
  g.symbols_.clear();
  return g;
}

Group Group::product(std::vector<std::int64_t> factors) {
  if (factors.empty()) throw GroupError("product needs at least one factor");
  for (auto k : factors)
    if (k < 1) throw GroupError("product factors must be at least 1");
  if (factors.size() == 1) return cyclic(factors[0]);
  Group g;
  g.kind_ = GroupKind::product;
  g.factors_ = std::move(factors);
  return g;
}

Group Group::free(std::vector<std::string> symbols) {
  std::vector<std::string> sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GroupError("free group symbols must be distinct");
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (const auto& s : symbols)
    if (!std::regex_match(s, ident)) throw GroupError("bad free group symbol '" + s + "'");
  Group g;
  g.kind_ = GroupKind::free;
  g.factors_.clear();
  g.symbols_ = std::move(symbols);
  return g;
}

Group Group::symmetric3() {
  Group g;
  g.kind_ = GroupKind::symmetric3;
  g.factors_.clear();
  return g;
}

bool Group::is_abelian() const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product:
      return true;
    case GroupKind::free:
      return symbols_.size() <= 1;
    case GroupKind::symmetric3:
      return false;
  }
  return false;
}

std::optional<std::uint64_t> Group::order() const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      std::uint64_t n = 1;
      for (auto k : factors_) n *= static_cast<std::uint64_t>(k);
      return n;
    }
    case GroupKind::free:
      if (symbols_.empty()) return 1;
      return std::nullopt;
    case GroupKind::symmetric3:
      return 6;
  }
  return std::nullopt;
}

GroupElement Group::identity() const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product:
      return {std::vector<std::int64_t>(factors_.size(), 0)};
    case GroupKind::free:
      return {};
    case GroupKind::symmetric3:
      return {{0}};
  }
  return {};
}

bool Group::contains(const GroupElement& x) const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product:
      if (x.values.size() != factors_.size()) return false;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (x.values[i] < 0 || x.values[i] >= factors_[i]) return false;
      return true;
    case GroupKind::free: {
      auto n = static_cast<std::int64_t>(symbols_.size());
      for (auto s : x.values)
        if (s == 0 || s > n || s < -n) return false;
      return reduce(x.values) == x.values;
    }
    case GroupKind::symmetric3:
      return x.values.size() == 1 && x.values[0] >= 0 && x.values[0] < 6;
  }
  return false;
}

void Group::check(const GroupElement& x) const {
  if (!contains(x)) throw GroupError("element does not belong to group " + to_string());
}

GroupElement Group::op(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      GroupElement r = x;
      for (std::size_t i = 0; i < factors_.size(); ++i) r.values[i] = (x.values[i] + y.values[i]) % factors_[i];
      return r;
    }
    case GroupKind::free: {
      std::vector<std::int64_t> w = x.values;
      w.insert(w.end(), y.values.begin(), y.values.end());
      return {reduce(w)};
    }
    case GroupKind::symmetric3: {
      const auto& a = kS3[x.values[0]];
      const auto& b = kS3[y.values[0]];
      Perm p{a[b[0]], a[b[1]], a[b[2]]};
      return {{s3_index(p)}};
    }
  }
  return x;
}

GroupElement Group::inverse(const GroupElement& x) const {
  check(x);
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      GroupElement r = x;
      for (std::size_t i = 0; i < factors_.size(); ++i) r.values[i] = mod(-x.values[i], factors_[i]);
      return r;
    }
    case GroupKind::free: {
      GroupElement r;
      for (auto it = x.values.rbegin(); it != x.values.rend(); ++it) r.values.push_back(-*it);
      return r;
    }
    case GroupKind::symmetric3: {
      const auto& a = kS3[x.values[0]];
      Perm p{};
      for (int i = 0; i < 3; ++i) p[a[i]] = i;
      return {{s3_index(p)}};
    }
  }
  return x;
}

GroupElement Group::power(const GroupElement& x, std::int64_t n) const {
  GroupElement base = n < 0 ? inverse(x) : x;
  std::uint64_t k = static_cast<std::uint64_t>(n < 0 ? -n : n);
  GroupElement acc = identity();
  while (k) {
    if (k & 1) acc = op(acc, base);
    base = op(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<std::uint64_t> Group::element_order(const GroupElement& x) const {
  check(x);
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      std::uint64_t o = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto k = static_cast<std::uint64_t>(factors_[i]);
        auto oi = k / std::gcd(k, static_cast<std::uint64_t>(x.values[i]));
        o = std::lcm(o, oi);
      }
      return o;
    }
    case GroupKind::free:
      if (x.values.empty()) return 1;
      return std::nullopt;
    case GroupKind::symmetric3: {
      std::uint64_t n = 1;
      for (GroupElement y = x; !is_identity(y); y = op(y, x)) ++n;
      return n;
    }
  }
  return std::nullopt;
}

bool Group::has_element_of_order(std::uint64_t n) const {
  if (n == 1) return true;
  if (n == 0) return false;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      // Z_n embeds iff every prime-power part of n divides some factor.
      std::uint64_t rest = n;
      for (std::uint64_t p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        std::uint64_t q = 1;
        while (rest % p == 0) {
          rest /= p;
          q *= p;
        }
        bool found = std::any_of(factors_.begin(), factors_.end(),
                                 [&](std::int64_t k) { return static_cast<std::uint64_t>(k) % q == 0; });
        if (!found) return false;
      }
      return true;
    }
    case GroupKind::free:
      return false;
    case GroupKind::symmetric3:
      return n == 2 || n == 3;
  }
  return false;
}

std::vector<GroupElement> Group::elements() const {
  auto n = order();
  if (!n) throw GroupError("cannot list the elements of an infinite group");
  std::vector<GroupElement> out;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      GroupElement x = identity();
      for (std::uint64_t k = 0; k < *n; ++k) {
        out.push_back(x);
        for (std::size_t i = factors_.size(); i-- > 0;) {
          if (++x.values[i] < factors_[i]) break;
          x.values[i] = 0;
        }
      }
      break;
    }
    case GroupKind::free:
      out.push_back(identity());
      break;
    case GroupKind::symmetric3:
      for (std::int64_t i = 0; i < 6; ++i) out.push_back({{i}});
      break;
  }
  return out;
}

GroupElement Group::generator() const {
  if (kind_ != GroupKind::cyclic) throw GroupError("generator() needs a cyclic group");
  return from_int(1);
}

GroupElement Group::from_int(std::int64_t r) const {
  if (kind_ != GroupKind::cyclic && kind_ != GroupKind::product)
    throw GroupError("integer residues need a cyclic or product group");
  GroupElement x = identity();
  for (std::size_t i = 0; i < factors_.size(); ++i) x.values[i] = mod(r, factors_[i]);
  return x;
}

GroupElement Group::parse_element(std::string_view text) const {
  auto tokens = split_ws(text);
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      std::string joined;
      for (auto& t : tokens) {
        std::string clean;
        for (char c : t)
          if (c != '(' && c != ')') clean += c;
        if (!clean.empty()) joined += (joined.empty() ? "" : " ") + clean;
      }
      auto parts = split_ws(joined);
      if (parts.size() != factors_.size())
        throw GroupError("expected " + std::to_string(factors_.size()) + " residue(s) for " + to_string());
      GroupElement x;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
          v = std::stoll(parts[i], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != parts[i].size()) throw GroupError("bad residue '" + parts[i] + "'");
        x.values.push_back(mod(v, factors_[i]));
      }
      return x;
    }
    case GroupKind::free: {
      GroupElement x;
      if (tokens.size() == 1 && (tokens[0] == "1" || tokens[0] == "e")) return x;
      static const std::regex tok(R"(([A-Za-z_][A-Za-z0-9_]*)(\^(-?[0-9]+))?)");
      std::vector<std::int64_t> w;
      for (const auto& t : tokens) {
        std::smatch m;
        if (!std::regex_match(t, m, tok)) throw GroupError("bad free word token '" + t + "'");
        auto it = std::find(symbols_.begin(), symbols_.end(), m[1].str());
        if (it == symbols_.end()) throw GroupError("unknown free symbol '" + m[1].str() + "'");
        auto s = static_cast<std::int64_t>(it - symbols_.begin()) + 1;
        std::int64_t e = m[3].matched ? std::stoll(m[3].str()) : 1;
        for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) w.push_back(e < 0 ? -s : s);
      }
      x.values = reduce(w);
      return x;
    }
    case GroupKind::symmetric3: {
      std::string s = strip_spaces(text);
      for (std::size_t i = 0; i < kS3Names.size(); ++i)
        if (s == kS3Names[i]) return {{static_cast<std::int64_t>(i)}};
      if (s == "()") return identity();
      throw GroupError("bad S3 element '" + s + "'");
    }
  }
  return identity();
}

std::string Group::format(const GroupElement& x) const {
  check(x);
  switch (kind_) {
    case GroupKind::cyclic:
      return std::to_string(x.values[0]);
    case GroupKind::product: {
      std::string s;
      for (auto v : x.values) s += (s.empty() ? "" : " ") + std::to_string(v);
      return s;
    }
    case GroupKind::free: {
      if (x.values.empty()) return "1";
      std::string s;
      std::size_t i = 0;
      while (i < x.values.size()) {
        std::size_t j = i;
        while (j < x.values.size() && x.values[j] == x.values[i]) ++j;
        auto sym = x.values[i];
        auto count = static_cast<std::int64_t>(j - i);
        s += (s.empty() ? "" : " ") + symbols_[static_cast<std::size_t>((sym < 0 ? -sym : sym) - 1)];
        if (sym < 0 || count > 1) s += "^" + std::to_string(sym < 0 ? -count : count);
        i = j;
      }
      return s;
    }
    case GroupKind::symmetric3:
      return kS3Names[x.values[0]];
  }
  return {};
}

std::string Group::to_string() const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::product: {
      std::string s;
      for (auto k : factors_) s += (s.empty() ? "Z " : " x Z ") + std::to_string(k);
      return s;
    }
    case GroupKind::free: {
      std::string s = "free";
      for (const auto& sym : symbols_) s += " " + sym;
      return s;
    }
    case GroupKind::symmetric3:
      return "S3";
  }
  return {};
}

Group parse_group(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw GroupError("empty group description");
  if (tokens[0] == "free") return Group::free({tokens.begin() + 1, tokens.end()});
  std::string s = strip_spaces(text);
  if (s == "S3") return Group::symmetric3();
  static const std::regex freeN("F([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, freeN)) {
    int n = std::stoi(m[1].str());
    if (n > 26) throw GroupError("free group rank too large");
    std::vector<std::string> syms;
    for (int i = 0; i < n; ++i) syms.emplace_back(1, static_cast<char>('a' + i));
    return Group::free(syms);
  }
  static const std::regex product("Z[0-9]+(xZ[0-9]+)*");
  if (!std::regex_match(s, product)) throw GroupError("unrecognised group '" + std::string(text) + "'");
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto next = s.find('x', pos);
    if (next == std::string::npos) next = s.size();
    factors.push_back(std::stoll(s.substr(pos + 1, next - pos - 1)));
    pos = next + 1;
  }
  return Group::product(factors);
}

std::uint32_t GroupTable::index_of(const GroupElement& x) const {
  auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) throw GroupError("element not in table");
  return static_cast<std::uint32_t>(it - elements.begin());
}

GroupTable make_table(const Group& g, std::size_t max_order) {
  auto n = g.order();
  if (!n || *n > max_order) throw GroupError("group too large for a multiplication table");
  GroupTable t;
  t.group = g;
  t.elements = g.elements();
  std::map<GroupElement, std::uint32_t> index;
  for (std::uint32_t i = 0; i < t.elements.size(); ++i) index[t.elements[i]] = i;
  const std::size_t size = t.elements.size();
  t.mul.resize(size * size);
  t.inv.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    t.inv[i] = index.at(g.inverse(t.elements[i]));
    for (std::size_t j = 0; j < size; ++j) t.mul[i * size + j] = index.at(g.op(t.elements[i], t.elements[j]));
  }
  return t;
}

GroupClass GroupClass::all() { return {ClassKind::all, {}, "all"}; }

GroupClass GroupClass::abelian() { return {ClassKind::abelian, {}, "abelian"}; }

GroupClass GroupClass::of(std::vector<Group> groups, std::string label) {
  if (label.empty()) {
    label = "groups:";
    for (std::size_t i = 0; i < groups.size(); ++i) label += (i ? "," : "") + strip_spaces(groups[i].to_string());
  }
  return {ClassKind::explicit_list, std::move(groups), std::move(label)};
}

bool GroupClass::contains_cyclic(std::uint64_t m) const {
  if (kind != ClassKind::explicit_list) return true;
  return std::any_of(groups.begin(), groups.end(), [&](const Group& g) { return g.has_element_of_order(m); });
}

bool GroupClass::all_abelian() const {
  if (kind == ClassKind::all) return false;
  if (kind == ClassKind::abelian) return true;
  return std::all_of(groups.begin(), groups.end(), [](const Group& g) { return g.is_abelian(); });
}

std::optional<std::uint64_t> GroupClass::least_odd_prime() const {
  if (kind != ClassKind::explicit_list) return 3;
  std::optional<std::uint64_t> best;
  for (const auto& g : groups) {
    auto n = g.order();
    if (!n) continue;
    for (std::uint64_t p = 3; p <= *n; p += 2) {
      if (is_prime(p) && *n % p == 0 && g.has_element_of_order(p)) {
        if (!best || p < *best) best = p;
        break;
      }
    }
  }
  return best;
}

ClassFlags GroupClass::flags() const {
  ClassFlags f;
  if (kind != ClassKind::explicit_list) {
    f.contains_z3 = f.contains_nontrivial_odd_order = f.has_odd_torsion = true;
    return f;
  }
  f.contains_z3 = contains_cyclic(3);
  // Any element of finite odd order > 1 generates a nontrivial odd-order subgroup.
  f.has_odd_torsion = least_odd_prime().has_value();
  f.contains_nontrivial_odd_order = f.has_odd_torsion;
  return f;
}

GroupClass parse_group_class(std::string_view spec) {
  std::string s = strip_spaces(spec);
  if (s == "all") return GroupClass::all();
  if (s == "abelian") return GroupClass::abelian();
  if (s == "contains-z3") return GroupClass::of({Group::cyclic(3)}, "contains-z3");
  const std::string prefix = "groups:";
  if (s.rfind(prefix, 0) == 0) {
    std::vector<Group> groups;
    std::stringstream ss(s.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      groups.push_back(parse_group(item));
    }
    if (groups.empty()) throw GroupError("empty group list in class spec");
    return GroupClass::of(std::move(groups), s);
  }
  throw GroupError("unrecognised class spec '" + std::string(spec) + "'");
}

}  // namespace gainbalance
