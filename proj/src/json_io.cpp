#include "cograph/json_io.hpp"

namespace cograph {

std::string label_name(const VertexLabel& label) {
    switch (label.kind) {
        case VertexLabel::Kind::forest:
            return "F" + std::to_string(label.index);
        case VertexLabel::Kind::independent:
            return "Q" + std::to_string(label.index);
        case VertexLabel::Kind::deleted:
            break;
    }
    return "R";
}

VertexLabel parse_label(const std::string& text) {
    if (text == "R") {
        return {VertexLabel::Kind::deleted, 0};
    }
    if (text.size() < 2 || (text[0] != 'F' && text[0] != 'Q') ||
        text.find_first_not_of("0123456789", 1) != std::string::npos || text.size() > 8) {
        throw InputError("bad class label \"" + text + "\"");
    }
    const auto kind = text[0] == 'F' ? VertexLabel::Kind::forest : VertexLabel::Kind::independent;
    return {kind, std::stoi(text.substr(1))};
}

Json to_json(Triple t) {
    return Json::array({t.p, t.q, t.r});
}

Json to_json(const TripleSet& set) {
    Json frontier = Json::array();
    for (const Triple& t : set.frontier()) {
        frontier.push_back(to_json(t));
    }
    const Box b = set.box();
    return {{"box", Json::array({b.p, b.q, b.r})}, {"frontier", frontier}};
}

Json to_json(const PartitionCertificate& cert) {
    Json labels = Json::array();
    for (std::size_t v = 0; v < cert.labels.size(); ++v) {
        labels.push_back({{"v", v}, {"class", label_name(cert.labels[v])}});
    }
    return {{"labels", labels}};
}

Json to_json(const StrengthProfile& profile) {
    return {{"omega", profile.omega}, {"tau", profile.tau}, {"strength", profile.strength}};
}

Json to_json(const ObstructionReport& report) {
    Json goal = Json::array();
    for (const Triple& t : report.goal.triples) {
        goal.push_back(to_json(t));
    }
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"vertex", w.vertex}, {"triple", to_json(w.triple)}, {"certificate", to_json(w.certificate)}});
    }
    return {{"graph6", report.graph6},  {"dsl", report.dsl},         {"goal", goal},
            {"obstruction", report.is_obstruction}, {"minimal", report.is_minimal}, {"witnesses", witnesses}};
}

PartitionCertificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
        throw InputError("certificate JSON needs a \"labels\" array");
    }
    const auto& arr = j["labels"];
    PartitionCertificate cert;
    cert.labels.resize(arr.size());
    std::vector<bool> seen(arr.size(), false);
    for (const auto& entry : arr) {
        if (!entry.is_object() || !entry.contains("v") || !entry.contains("class") || !entry["v"].is_number_integer() ||
            !entry["class"].is_string()) {
            throw InputError("certificate entries need integer \"v\" and string \"class\"");
        }
        const auto v = entry["v"].get<long long>();
        if (v < 0 || v >= static_cast<long long>(arr.size()) || seen[static_cast<std::size_t>(v)]) {
            throw InputError("certificate vertex ids must be a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(v)] = true;
        cert.labels[static_cast<std::size_t>(v)] = parse_label(entry["class"].get<std::string>());
    }
    return cert;
}

}  // namespace cograph
