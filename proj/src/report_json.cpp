#include "rbook/report_json.hpp"

namespace rbook {

using nlohmann::json;

namespace {

const char* result_name(EngineResult r) {
    switch (r) {
        case EngineResult::BookFound: return "book_found";
        case EngineResult::ReservoirExhausted: return "reservoir_exhausted";
        case EngineResult::Aborted: return "aborted";
    }
    return "?";
}

const char* phase_name(DriverPhase p) {
    switch (p) {
        case DriverPhase::Trivial: return "trivial";
        case DriverPhase::Escape: return "escape";
        case DriverPhase::BookSkipped: return "book_skipped";
        case DriverPhase::BookPhase: return "book";
    }
    return "?";
}

}  // namespace

json to_json(const VertexSet& s) { return s.elements(); }

json to_json(const InequalityCheck& c) {
    return {{"name", c.name},       {"relation", c.relation}, {"lhs_log", c.lhs_log}, {"rhs_log", c.rhs_log},
            {"slack", c.slack},     {"pass", c.pass},         {"exact", c.exact}};
}

json to_json(const LogScalar& v) {
    json j;
    j["sign"] = v.sign();
    if (!v.is_zero()) {
        j["log_lo"] = v.log_magnitude().lo_double();
        j["log_hi"] = v.log_magnitude().hi_double();
    }
    return j;
}

json to_json(const BoundReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"name", r.name}, {"pass", r.pass()}, {"checks", checks}};
}

json to_json(const ChainReport& r) {
    json links = json::array();
    for (const auto& l : r.links) links.push_back(to_json(l));
    return {{"r", r.r}, {"pass", r.pass()}, {"links", links}, {"link_i_min_log2_k", r.link_i_min_log2_k}};
}

json to_json(const BookTargetBounds& b) {
    return {{"m_coefficient", to_json(b.m_coefficient)},
            {"es_bound", to_json(b.es_bound)},
            {"n_min", to_json(b.n_min)},
            {"relation", to_json(b.relation)}};
}

json to_json(const Lemma53Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"pass", r.pass}, {"checks", checks}};
}

json to_json(const RegularisationResult& r) {
    json s = json::array();
    for (const auto& set : r.s) s.push_back(to_json(set));
    return {{"eps", to_string(r.eps)}, {"s", s}, {"w", to_json(r.w)}, {"w_size", r.w.size()}, {"removed", r.removed()}};
}

json to_json(const EngineOutcome& o) {
    json j;
    j["result"] = result_name(o.result);
    j["steps"] = o.trace.steps.size();
    if (o.result == EngineResult::BookFound) {
        j["colour"] = o.colour;
        j["spine"] = to_json(o.spine);
        j["pages"] = to_json(o.pages);
        j["m"] = o.pages.size();
    }
    if (o.result == EngineResult::Aborted) j["reason"] = o.abort_reason;
    return j;
}

json to_json(const DriverReport& r) {
    json j;
    j["k"] = r.k;
    j["phase"] = phase_name(r.phase);
    j["clique_found"] = r.clique.has_value();
    if (r.clique) {
        j["clique"] = to_json(*r.clique);
        j["colour"] = *r.clique_colour;
    }
    if (r.phase != DriverPhase::Trivial) j["regularisation"] = to_json(r.regularisation);
    if (r.engine) {
        j["engine"] = to_json(*r.engine);
        j["params"] = {{"t", r.params.t}, {"lambda0", to_string(r.params.lambda0)}, {"delta", to_string(r.params.delta)}};
        j["page_clique_size"] = r.page_clique_size;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const MonitorSummary& s) {
    json reports = json::array();
    for (const auto& r : s.reports) {
        json e{{"monitor", r.lemma}, {"applicable", r.applicable}, {"checks", r.checks}};
        if (!r.applicable) e["skipped_because"] = r.skipped_because;
        reports.push_back(e);
    }
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back({{"monitor", f.lemma}, {"message", f.message}});
    return {{"pass", s.ok()}, {"reports", reports}, {"failures", failures}};
}

json to_json(const RamseyResult& r) {
    json j;
    j["verdict"] = r.verdict == RamseyVerdict::CounterexampleFound ? "counterexample_found" : "all_colourings_contain_mono";
    j["nodes"] = r.nodes;
    if (r.counterexample) j["counterexample"] = serialize(*r.counterexample);
    return j;
}

json to_json(const BookResult& r) {
    json j;
    j["found"] = r.found;
    j["nodes"] = r.nodes;
    if (r.found) {
        j["m_max"] = r.m_max;
        j["colour"] = r.colour;
        j["spine"] = to_json(r.spine);
        j["pages"] = to_json(r.pages);
    }
    return j;
}

}  // namespace rbook
