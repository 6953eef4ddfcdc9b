#include <sstream>

#include <json.hpp>

#include "rbook/book_engine.hpp"
#include "rbook/errors.hpp"

namespace rbook {

namespace {

using nlohmann::json;

json rationals(const std::vector<BigRational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

std::vector<BigRational> rationals_from(const json& j) {
    std::vector<BigRational> out;
    for (const auto& q : j) out.push_back(parse_rational(q.get<std::string>()));
    return out;
}

const char* kind_name(StepKind k) { return k == StepKind::Colour ? "colour" : "boost"; }

const char* result_name(EngineResult r) {
    switch (r) {
        case EngineResult::BookFound: return "book_found";
        case EngineResult::ReservoirExhausted: return "reservoir_exhausted";
        case EngineResult::Aborted: return "aborted";
    }
    return "?";
}

json header_json(const TraceHeader& h) {
    json p;
    p["t"] = h.params.t;
    p["lambda0"] = to_string(h.params.lambda0);
    p["delta"] = to_string(h.params.delta);
    p["beta"] = to_string(h.params.constants.beta);
    p["c_squared"] = to_string(h.params.constants.c_squared);
    json j;
    j["type"] = "header";
    j["n"] = h.n;
    j["r"] = h.r;
    j["fingerprint"] = h.colouring_fingerprint;
    j["params"] = p;
    j["p0"] = to_string(h.p0);
    j["x0"] = h.x0;
    j["y0"] = h.y0;
    j["p_initial"] = rationals(h.p_initial);
    return j;
}

json step_json(const StepRecord& rec) {
    json j;
    j["type"] = "step";
    j["s"] = rec.s;
    j["kind"] = kind_name(rec.kind);
    j["pivot"] = rec.pivot ? json(*rec.pivot) : json(nullptr);
    j["witness_colour"] = rec.witness_colour;
    j["chosen_colour"] = rec.chosen_colour ? json(*rec.chosen_colour) : json(nullptr);
    j["lambda"] = to_string(rec.lambda);
    j["q"] = to_string(rec.q);
    j["x_size"] = rec.x_size;
    j["y_sizes"] = rec.y_sizes;
    j["t_sizes"] = rec.t_sizes;
    j["densities"] = rec.densities ? rationals(*rec.densities) : json(nullptr);
    return j;
}

std::string lines(const Trace& trace) {
    std::string out = header_json(trace.header).dump() + "\n";
    for (const auto& rec : trace.steps) out += step_json(rec).dump() + "\n";
    return out;
}

}  // namespace

std::string trace_to_jsonl(const Trace& trace) { return lines(trace); }

std::string trace_to_jsonl(const EngineOutcome& outcome) {
    json j;
    j["type"] = "outcome";
    j["result"] = result_name(outcome.result);
    if (outcome.result == EngineResult::BookFound) {
        j["colour"] = outcome.colour;
        j["spine"] = outcome.spine.elements();
        j["pages"] = outcome.pages.elements();
    }
    if (outcome.result == EngineResult::Aborted) j["reason"] = outcome.abort_reason;
    j["steps"] = outcome.trace.steps.size();
    return lines(outcome.trace) + j.dump() + "\n";
}

Trace trace_from_jsonl(const std::string& text) {
    Trace trace;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json j = json::parse(line);
            const std::string type = j.at("type").get<std::string>();
            if (type == "header") {
                TraceHeader& h = trace.header;
                h.n = j.at("n").get<std::size_t>();
                h.r = j.at("r").get<std::size_t>();
                h.colouring_fingerprint = j.at("fingerprint").get<std::uint64_t>();
                const json& p = j.at("params");
                h.params.t = p.at("t").get<std::size_t>();
                h.params.lambda0 = parse_rational(p.at("lambda0").get<std::string>());
                h.params.delta = parse_rational(p.at("delta").get<std::string>());
                h.params.constants.beta = parse_rational(p.at("beta").get<std::string>());
                h.params.constants.c_squared = parse_rational(p.at("c_squared").get<std::string>());
                h.p0 = parse_rational(j.at("p0").get<std::string>());
                h.x0 = j.at("x0").get<std::size_t>();
                h.y0 = j.at("y0").get<std::vector<std::size_t>>();
                h.p_initial = rationals_from(j.at("p_initial"));
                if (h.y0.size() != h.r || h.p_initial.size() != h.r) throw InvalidInput("header arrays must have r entries");
                have_header = true;
            } else if (type == "step") {
                if (!have_header) throw InvalidInput("step before header");
                StepRecord rec;
                rec.s = j.at("s").get<std::size_t>();
                const std::string kind = j.at("kind").get<std::string>();
                if (kind == "colour") {
                    rec.kind = StepKind::Colour;
                } else if (kind == "boost") {
                    rec.kind = StepKind::Boost;
                } else {
                    throw InvalidInput("unknown step kind '" + kind + "'");
                }
                if (!j.at("pivot").is_null()) rec.pivot = j["pivot"].get<Vertex>();
                rec.witness_colour = j.at("witness_colour").get<Colour>();
                if (!j.at("chosen_colour").is_null()) rec.chosen_colour = j["chosen_colour"].get<Colour>();
                rec.lambda = parse_rational(j.at("lambda").get<std::string>());
                rec.q = parse_rational(j.at("q").get<std::string>());
                rec.x_size = j.at("x_size").get<std::size_t>();
                rec.y_sizes = j.at("y_sizes").get<std::vector<std::size_t>>();
                rec.t_sizes = j.at("t_sizes").get<std::vector<std::size_t>>();
                if (!j.at("densities").is_null()) rec.densities = rationals_from(j["densities"]);
                if (rec.y_sizes.size() != trace.header.r || rec.t_sizes.size() != trace.header.r ||
                    (rec.densities && rec.densities->size() != trace.header.r)) {
                    throw InvalidInput("step arrays must have r entries");
                }
                if (rec.s != trace.steps.size()) throw InvalidInput("steps out of order");
                trace.steps.push_back(std::move(rec));
            }
        } catch (const json::exception& e) {
            throw ParseError(line_no, e.what());
        } catch (const InvalidInput& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) throw ParseError(line_no, "trace has no header line");
    return trace;
}

}  // namespace rbook
