#include "tokens/serialize.hpp"

#include <cstdio>

namespace tokens {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void to_json(json& j, const EigCluster& c) {
    j = json{{"value", c.value}, {"multiplicity", c.multiplicity}};
}

void to_json(json& j, const EigMultiset& ms) {
    j = json{{"clusters", ms.clusters}, {"total", ms.total()}};
}

void to_json(json& j, const ContainmentReport& rep) {
    j = json{{"n", rep.n},
             {"k", rep.k},
             {"source_spectrum", rep.source_spectrum},
             {"previous_spectrum", rep.previous_spectrum},
             {"token_spectrum", rep.token_spectrum},
             {"source_contained", rep.source_contained},
             {"chain_checked", rep.chain_checked},
             {"chain_contained", rep.chain_contained},
             {"new_values", rep.new_values},
             {"tol", rep.tol},
             {"ok", rep.ok()}};
}

void to_json(json& j, const PairingCertificate::Entry& e) {
    j = json{{"value", e.value},
             {"complement_value", e.complement_value},
             {"level", e.level},
             {"johnson_value", e.johnson_value},
             {"residual", e.residual}};
}

void to_json(json& j, const PairingCertificate& cert) {
    j = json{{"n", cert.n},
             {"k", cert.k},
             {"entries", cert.entries},
             {"level_counts", cert.level_counts},
             {"max_residual", cert.max_residual},
             {"max_invariance_ratio", cert.max_invariance_ratio},
             {"tol", cert.tol}};
}

void to_json(json& j, const LevelPartition::Level& lv) {
    j = json{{"level", lv.level},
             {"johnson_value", lv.johnson_value},
             {"pairs", lv.pairs},
             {"fresh_values", lv.fresh_values},
             {"fresh_complement_values", lv.fresh_complement_values},
             {"cross_check_ok", lv.cross_check_ok}};
}

void to_json(json& j, const LevelPartition& part) {
    const char* status = "pass";
    if (part.status == LevelPartition::Status::mismatch) status = "mismatch";
    if (part.status == LevelPartition::Status::hypothesis_unmet) status = "hypothesis_unmet";
    j = json{{"n", part.n},
             {"k", part.k},
             {"status", status},
             {"levels", part.levels},
             {"max_projection_ratio", part.max_projection_ratio},
             {"tol", part.tol},
             {"detail", part.detail}};
}

void to_json(json& j, const ConjectureVerdict& v) {
    j = json{{"graph6", v.graph6},
             {"n", v.n},
             {"k", v.k},
             {"alpha_source", v.alpha_source},
             {"alpha_token", v.alpha_token},
             {"gap", v.gap},
             {"holds", v.holds},
             {"transfer_applicable", v.transfer_applicable}};
}

void to_json(json& j, const DegreeBoundsReport& rep) {
    auto side = [](const DegreeBoundsReport::Side& s) {
        return json{{"max_degree", s.max_degree},
                    {"lambda_max", s.lambda_max},
                    {"has_edges", s.has_edges},
                    {"lower_ok", s.lower_ok},
                    {"upper_ok", s.upper_ok}};
    };
    j = json{{"n", rep.n},
             {"k", rep.k},
             {"source", side(rep.source)},
             {"token", side(rep.token)},
             {"degree_cap", rep.degree_cap},
             {"degree_cap_ok", rep.degree_cap_ok},
             {"tol", rep.tol},
             {"ok", rep.ok()}};
}

void to_json(json& j, const FindResult& f) {
    j = json{{"graph6", f.graph6}, {"index", f.index}, {"n", f.graph.vertex_count()},
             {"edges", f.graph.edge_count()}};
}

std::string csv_header() {
    return "graph6,n,k,alpha_G,alpha_FkG,gap,holds,transfer_applicable,wall_ms";
}

std::string csv_row(const ConjectureVerdict& v, double wall_ms) {
    std::string row = v.graph6;
    row += ',';
    row += std::to_string(v.n);
    row += ',';
    row += std::to_string(v.k);
    row += ',';
    row += format_double(v.alpha_source);
    row += ',';
    row += format_double(v.alpha_token);
    row += ',';
    row += format_double(v.gap);
    row += ',';
    row += v.holds ? '1' : '0';
    row += ',';
    row += v.transfer_applicable ? '1' : '0';
    row += ',';
    row += format_double(wall_ms);
    return row;
}

}  // namespace tokens
