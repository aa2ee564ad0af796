#include "rnacd/report.hpp"

namespace rnacd {

Json to_json(const FoldReport& r) {
    Json j;
    j["max_pairs"] = r.max_pairs;
    j["optimal_count"] = r.optimal_count.str();
    if (r.structures) {
        Json list = Json::array();
        for (const ArcSet& s : *r.structures)
            list.push_back(to_dotbracket(s));
        j["structures"] = std::move(list);
    } else {
        j["structures"] = nullptr;
    }
    j["truncated"] = r.truncated;
    return j;
}

Json to_json(const DesignOutcome& o, const DottedTree& t) {
    Json j;
    j["verdict"] = std::string(to_string(o.verdict));
    j["reason"] = o.reason ? Json(std::string(to_string(*o.reason))) : Json(nullptr);
    j["design"] = o.design ? Json(o.design->str()) : Json(nullptr);
    if (o.colouring) {
        const DottedTree e = exterior_tree(t);
        Json c = Json::object();
        for (VertexId v : e.preorder())
            if (const auto col = o.colouring->at(v))
                c[e.path(v)] = std::string(1, to_char(*col));
        j["colouring"] = std::move(c);
    } else {
        j["colouring"] = nullptr;
    }
    return j;
}

Json to_json(const CertificateTrace& trace) {
    Json j;
    j["stop_height"] = trace.stop_height;
    Json its = Json::array();
    for (const TraceIteration& it : trace.iterations) {
        Json tags = Json::object();
        for (const auto& [p, tag] : it.tags)
            tags[std::to_string(p)] = tag;
        its.push_back(Json{{"balanced", it.balanced.positions},
                           {"kind", std::string(to_string(it.balanced.kind))},
                           {"tags", std::move(tags)},
                           {"coloured", it.coloured}});
    }
    j["iterations"] = std::move(its);
    j["forced_unpaired"] = trace.forced_unpaired;
    Json forced = Json::object();
    for (const auto& [h, f] : trace.forced_height_pairings)
        forced[std::to_string(h)] = f;
    j["forced_height_pairings"] = std::move(forced);
    return j;
}

} // namespace rnacd
