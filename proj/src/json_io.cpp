#include "tribound/json_io.hpp"

#include <json.hpp>

namespace tribound {

namespace {

using json = nlohmann::ordered_json;

json triples_to_json(const std::vector<Triple>& triples) {
    json arr = json::array();
    for (const auto& t : triples) arr.push_back({t[0], t[1], t[2]});
    return arr;
}

std::vector<Triple> triples_from_json(const json& arr) {
    std::vector<Triple> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 3)
            throw ParamError("json: triple must be a 3-element array");
        out.push_back(make_triple(item[0].get<int>(), item[1].get<int>(),
                                  item[2].get<int>()));
    }
    return out;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParamError("json: malformed input");
    return j;
}

void require_format(const json& j, const std::string& fmt) {
    if (!j.is_object() || j.value("format", "") != fmt)
        throw ParamError("json: expected format \"" + fmt + "\"");
}

}  // namespace

std::string to_json(const Hypergraph3& h) {
    json j;
    j["format"] = "h3-v1";
    j["n"] = h.n();
    j["triples"] = triples_to_json(h.triples());
    return j.dump();
}

Hypergraph3 hypergraph_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "h3-v1");
    return Hypergraph3(j.at("n").get<int>(), triples_from_json(j.at("triples")));
}

std::string to_json(const TripleSystem& ts) {
    json j;
    j["format"] = "pts-v1";
    j["nu"] = ts.nu();
    j["lambda"] = ts.lambda();
    j["triples"] = triples_to_json(ts.triples());
    return j.dump();
}

TripleSystem triple_system_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "pts-v1");
    return TripleSystem(j.at("nu").get<int>(), j.at("lambda").get<int>(),
                        triples_from_json(j.at("triples")));
}

std::string to_json(const Certificate& cert) {
    json j;
    j["e"] = cert.edge_count;
    j["f"] = cert.bound;
    j["delta2"] = cert.codegree_cap;
    j["max_codegree"] = cert.max_codegree;
    j["nu"] = cert.matching_cap;
    j["matching"] = cert.matching_number;
    j["passed"] = cert.passed;
    if (!cert.notes.empty()) j["notes"] = cert.notes;
    return j.dump();
}

std::string to_json(const SearchReport& rep) {
    json j;
    j["optimum"] = rep.optimum;
    j["witness"] = json::parse(to_json(rep.witness));
    j["nodes"] = rep.nodes;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    j["exhausted"] = rep.exhausted;
    return j.dump();
}

std::string mpts_certificate_json(const MptsResult& res, int s, long long g) {
    json j;
    j["case_tag"] = to_string(res.case_tag);
    j["e"] = res.system.edge_count();
    j["g"] = g;
    j["s"] = s;
    json leave_edges = json::array();
    for (const auto& [e, mult] : res.leave_graph.edges())
        for (int r = 0; r < mult; ++r)
            leave_edges.push_back({e.first, e.second});
    j["leave"] = leave_edges;
    return j.dump();
}

}  // namespace tribound
