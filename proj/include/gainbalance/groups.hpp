#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gainbalance {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Residues for cyclic and product groups; signed symbol indices (+i+1 / -(i+1))
/// for free words; a single table index for S3.
struct GroupElement {
  std::vector<std::int64_t> values;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

enum class GroupKind { cyclic, product, free, symmetric3 };

class Group {
 public:
  /// The trivial group Z_1.
  Group() : factors_{1} {}

  static Group cyclic(std::int64_t k);
  static Group product(std::vector<std::int64_t> factors);
  static Group free(std::vector<std::string> symbols);
  /// Symmetric group on three letters, as a fixed multiplication table.
  static Group symmetric3();

  GroupKind kind() const { return kind_; }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool is_abelian() const;
  bool is_finite() const { return kind_ != GroupKind::free || symbols_.empty(); }
  /// Nullopt for nontrivial free groups.
  std::optional<std::uint64_t> order() const;

  GroupElement identity() const;
  GroupElement op(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(const GroupElement& x, std::int64_t n) const;
  bool is_identity(const GroupElement& x) const { return x == identity(); }
  bool contains(const GroupElement& x) const;
  /// Throws GroupError unless x belongs to this group.
  void check(const GroupElement& x) const;

  /// Least n >= 1 with x^n = 1; nullopt when infinite.
  std::optional<std::uint64_t> element_order(const GroupElement& x) const;
  /// Whether some element has order exactly n.
  bool has_element_of_order(std::uint64_t n) const;

  /// All elements, for finite groups; identity first.
  std::vector<GroupElement> elements() const;
  /// For cyclic groups: the residue 1.
  GroupElement generator() const;
  /// Cyclic residue (product groups: the same residue in every factor).
  GroupElement from_int(std::int64_t r) const;

  GroupElement parse_element(std::string_view text) const;
  std::string format(const GroupElement& x) const;
  /// Header syntax: "Z 3", "Z 2 x Z 3", "free a b", "S3".
  std::string to_string() const;

  bool operator==(const Group& o) const {
    return kind_ == o.kind_ && factors_ == o.factors_ && symbols_ == o.symbols_;
  }

 private:
  GroupKind kind_ = GroupKind::cyclic;
  std::vector<std::int64_t> factors_;
  std::vector<std::string> symbols_;
};

/// Accepts "Z 3", "Z3", "Z 2 x Z 3", "Z2xZ3", "free a b c", "F2", "S3".
Group parse_group(std::string_view text);

/// Dense multiplication table of a finite group, elements indexed from 0 with
/// the identity at 0.
struct GroupTable {
  Group group;
  std::vector<GroupElement> elements;
  std::vector<std::uint32_t> mul;  // mul[i * n + j] = elements[i] * elements[j]
  std::vector<std::uint32_t> inv;

  std::size_t size() const { return elements.size(); }
  std::uint32_t op(std::uint32_t i, std::uint32_t j) const { return mul[i * elements.size() + j]; }
  std::uint32_t index_of(const GroupElement& x) const;
};

GroupTable make_table(const Group& g, std::size_t max_order = 4096);

enum class ClassKind { all, abelian, explicit_list };

struct ClassFlags {
  bool contains_z3 = false;
  bool contains_nontrivial_odd_order = false;
  bool has_odd_torsion = false;
};

/// A subgroup-closed class of groups: the class of all groups, of all abelian
/// groups, or the subgroup closure of an explicit list.
struct GroupClass {
  ClassKind kind = ClassKind::all;
  std::vector<Group> groups;
  std::string label;

  static GroupClass all();
  static GroupClass abelian();
  static GroupClass of(std::vector<Group> groups, std::string label = {});

  ClassFlags flags() const;
  /// Whether Z_m lies in the class.
  bool contains_cyclic(std::uint64_t m) const;
  /// Every member abelian.
  bool all_abelian() const;
  /// Least odd prime p with Z_p in the class.
  std::optional<std::uint64_t> least_odd_prime() const;
};

/// "all", "abelian", "contains-z3", "groups:Z3,Z5", "groups:Z2xZ2".
GroupClass parse_group_class(std::string_view spec);

}  // namespace gainbalance
