#pragma once

#include <json.hpp>

#include "halin/generator.hpp"

namespace halin {

using Json = nlohmann::ordered_json;

inline std::string_view to_string(Verdict v) {
    return v == Verdict::Halin ? "halin" : "not-halin";
}

/// Structured text record, one "key: value" line per field. Carries exactly
/// the same information as report_to_json.
inline std::string report_to_text(const RecognitionReport& report) {
    std::string out;
    out += "verdict: " + std::string(to_string(report.verdict)) + "\n";
    if (report.verdict == Verdict::NotHalin) out += "reason: " + report.reason + "\n";
    if (report.certificate) {
        const HalinCertificate& cert = *report.certificate;
        out += "root: " + std::to_string(cert.tree.root) + "\n";
        out += "tree_edges:";
        for (const Edge& e : cert.tree.edges())
            out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
        out += "\n";
        out += "leaf_cycle:";
        for (Vertex v : cert.leaf_cycle) out += " " + std::to_string(v);
        out += "\n";
    }
    out += std::string("oracle_used: ") + (report.oracle_used ? "true" : "false") + "\n";
    out += "roots_tried: " + std::to_string(report.roots_tried.size()) + "\n";
    for (const RootTrace& t : report.roots_tried)
        out += "  root " + std::to_string(t.root) + ": " + std::string(to_string(t.defect)) + "\n";
    return out;
}

inline Json certificate_to_json(const HalinCertificate& cert) {
    Json j;
    j["root"] = cert.tree.root;
    Json edges = Json::array();
    for (const Edge& e : cert.tree.edges()) edges.push_back({e.u, e.v});
    j["tree_edges"] = std::move(edges);
    j["leaf_cycle"] = cert.leaf_cycle;
    return j;
}

inline Json report_to_json(const RecognitionReport& report) {
    Json j;
    j["verdict"] = to_string(report.verdict);
    if (report.verdict == Verdict::NotHalin) j["reason"] = report.reason;
    if (report.certificate) {
        Json cert = certificate_to_json(*report.certificate);
        j["root"] = cert["root"];
        j["tree_edges"] = cert["tree_edges"];
        j["leaf_cycle"] = cert["leaf_cycle"];
    }
    j["oracle_used"] = report.oracle_used;
    Json tried = Json::array();
    for (const RootTrace& t : report.roots_tried)
        tried.push_back({{"root", t.root}, {"defect", to_string(t.defect)}});
    j["roots_tried"] = std::move(tried);
    return j;
}

/// "hub h; rim v_1 v_2 ... v_n"
inline std::string witness_to_text(const WheelWitness& w) {
    std::string out = "hub " + std::to_string(w.hub) + "; rim";
    for (Vertex v : w.rim) out += " " + std::to_string(v);
    return out;
}

inline Json witness_to_json(const WheelWitness& w) {
    return Json{{"hub", w.hub}, {"rim", w.rim}};
}

inline Json coloring_to_json(const Coloring& c) {
    Json rows = Json::array();
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        rows.push_back({{"vertex", v}, {"color", c.assignment[v]}});
    return rows;
}

}  // namespace halin
