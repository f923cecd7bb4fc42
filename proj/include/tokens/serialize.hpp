#pragma once

#include <string>

#include <json.hpp>

#include "tokens/multiset.hpp"
#include "tokens/theory.hpp"
#include "tokens/token_graph.hpp"

namespace tokens {

using nlohmann::json;

void to_json(json& j, const EigCluster& c);
void to_json(json& j, const EigMultiset& ms);
void to_json(json& j, const ContainmentReport& rep);
void to_json(json& j, const PairingCertificate::Entry& e);
void to_json(json& j, const PairingCertificate& cert);
void to_json(json& j, const LevelPartition::Level& lv);
void to_json(json& j, const LevelPartition& part);
void to_json(json& j, const ConjectureVerdict& v);
void to_json(json& j, const DegreeBoundsReport& rep);
void to_json(json& j, const FindResult& f);

// Sweep CSV schema: one row per (graph, level).
std::string csv_header();
std::string csv_row(const ConjectureVerdict& v, double wall_ms);

// Compact fixed formatting for floating cells ("%.10g").
std::string format_double(double x);

}  // namespace tokens
