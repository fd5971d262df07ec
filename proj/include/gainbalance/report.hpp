#pragma once

#include <span>

#include <json.hpp>

#include "gainbalance/balancetests.hpp"
#include "gainbalance/classify.hpp"
#include "gainbalance/minors.hpp"

namespace gainbalance {

using Json = nlohmann::json;

Json graph_json(const Graph& g);
Json circle_json(const Graph& g, const Circle& c);
Json basis_json(const Graph& g, const OrientedBasis& b);
Json gains_json(const Graph& g, const GainAssignment& a);
Json balance_json(const Graph& g, const BalanceResult& r);
Json witness_json(const BadWitness& w);
Json decomposition_json(const Decomposition& d);
/// {status, rule, evidence} plus the minor tag for Bad verdicts.
Json verdict_json(const Verdict& v);
Json minor_json(const Graph& host, const Graph& target, const MinorWitness& w);
Json abelian_report_json(const Graph& g, const UniversalAbelianReport& r, std::span<const Circle> queries);

std::string to_string(const BigInt& x);

}  // namespace gainbalance
