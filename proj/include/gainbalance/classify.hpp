#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gainbalance/cyclespace.hpp"
#include "gainbalance/gaingraph.hpp"
#include "gainbalance/groups.hpp"
#include "gainbalance/minors.hpp"
#include "gainbalance/named.hpp"

namespace gainbalance {

enum class Status { good, bad, unknown };
enum class TestKind { binary_cycle, circle };

std::string to_string(Status s);
std::string to_string(TestKind t);

/// A gain graph with an oriented basis that passes the test while the gain
/// graph is unbalanced.
struct BadWitness {
  GainGraph gain_graph;
  OrientedBasis basis;
  TestKind test = TestKind::circle;
};

/// For circle witnesses the members must be circles and their canonical walks
/// are evaluated; for binary witnesses the attached walks are.
bool verify_bad_witness(const BadWitness& w);

struct BlockDecomposition {
  Graph block;
  NamedGraphSpec base;
  Graph irreducible;                 // isomorphic to build_named(base)
  std::vector<ExtrusionStep> steps;  // forward, from `irreducible` to `block`
};

struct Decomposition {
  std::vector<BlockDecomposition> blocks;
};

/// Every block reduced by reverse extrusion to a loop, mK2, C3(m,2,2) with
/// m >= 2 or K4(m,m'); nullopt when some block fails.
std::optional<Decomposition> structural_decomposition(const Graph& g);
/// Replays the steps and checks the block is reproduced up to isomorphism.
bool replay_block(const BlockDecomposition& b);

struct Verdict {
  Status status = Status::unknown;
  std::string rule;
  std::optional<BadWitness> witness;
  std::optional<Decomposition> decomposition;
  /// Tag of the forbidden minor behind a Bad verdict.
  std::string minor;
};

/// The known bad construction on a named graph: K1loop over Z_k (k odd, default
/// 3, binary cycle test); C3(3,3,2), 2C4 and K4dd over Z3; W2k and 2C2k over
/// Z_{2k-1}. Verified before return.
BadWitness bad_witness(const NamedGraphSpec& spec, std::optional<std::int64_t> modulus = {});

/// Carries a witness on `minor` up to `host` through a minor witness: lift the
/// contractions of the realisation, then its deletions.
BadWitness lift_witness(const Graph& host, const Graph& minor, const BadWitness& w, const MinorWitness& mw);

Verdict binary_cycle_goodness(const Graph& g, const GroupClass& c);
Verdict circle_goodness(const Graph& g, const GroupClass& c);

struct OracleOptions {
  std::size_t max_edges = 10;
  std::size_t max_group_order = 6;
  std::uint64_t max_assignments = 20'000'000;
};

struct OracleResult {
  bool good = true;
  std::optional<BadWitness> counterexample;
  std::uint64_t assignments = 0;
};

/// Brute force over all switching-reduced assignments (identity on the greedy
/// spanning forest). The graph is bad iff some unbalanced assignment leaves
/// balanced circles that span the cycle space, i.e. some circle basis passes.
OracleResult oracle_circle_goodness(const Graph& g, const Group& grp, const OracleOptions& opts = {});

/// Every circle basis that passes the Circle Test under some unbalanced
/// assignment over `grp`.
std::vector<std::vector<BinaryCycle>> oracle_bad_circle_bases(const Graph& g, const Group& grp,
                                                              const OracleOptions& opts = {});

struct EnumerationOptions {
  bool loops = true;
  bool connected = false;
};

/// All multigraphs with 1..max_edges edges and no isolated vertices, one per
/// isomorphism class, by increasing edge count.
std::vector<Graph> enumerate_multigraphs(std::size_t max_edges, const EnumerationOptions& opts = {});

}  // namespace gainbalance
