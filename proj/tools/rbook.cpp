#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbook/book_engine.hpp"
#include "rbook/bounds.hpp"
#include "rbook/colouring.hpp"
#include "rbook/errors.hpp"
#include "rbook/moments.hpp"
#include "rbook/oracle.hpp"
#include "rbook/pipeline.hpp"
#include "rbook/report_json.hpp"

namespace {

using nlohmann::json;
using namespace rbook;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw UsageError("malformed list entry '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

struct Options {
    // generate
    std::size_t n = 5, r = 2;
    std::uint64_t seed = 1;
    std::string kind = "random";
    std::string output;
    std::string left, right;
    // shared
    std::string input;
    std::size_t t = 1;
    std::string lambda0, delta, mu, p;
    std::string trace;
    std::string eps = "1/20";
    // bounds
    std::size_t k = 3;
    std::string m = "1", x_size, y_sizes;
    std::string bk = "40", bt = "4";
    std::string ks;
    std::size_t colour = 0;
    // moments
    std::string dims = "3", ells = "1";
    std::size_t points = 4;
    int range = 3;
    // drive
    std::optional<std::uint64_t> partition_seed;
};

int cmd_generate(const Options& o) {
    EdgeColouring c = [&] {
        if (o.kind == "random") return random_colouring(o.n, o.r, o.seed);
        if (o.kind == "pentagon") return pentagon_colouring();
        if (o.kind == "constant") return constant_colouring(o.n, o.r);
        if (o.kind == "product") {
            if (o.left.empty() || o.right.empty()) throw UsageError("--kind product needs --left and --right");
            return product_colouring(read_colouring_file(o.left), read_colouring_file(o.right));
        }
        throw UsageError("unknown --kind '" + o.kind + "'");
    }();
    if (o.output.empty()) {
        std::cout << serialize(c);
        return kOk;
    }
    write_colouring_file(c, o.output);
    emit({{"n", c.n()}, {"r", c.r()}, {"fingerprint", c.fingerprint()}, {"path", o.output}});
    std::cerr << "wrote " << c.n() << "-vertex " << c.r() << "-colouring to " << o.output << '\n';
    return kOk;
}

EngineParams engine_params(const Options& o, std::size_t r) {
    EngineParams params;
    if (!o.mu.empty() || !o.p.empty()) {
        if (o.mu.empty() || o.p.empty()) throw UsageError("--mu and --p go together");
        params = EngineParams::from_mu_p(r, o.t, parse_rational(o.mu), parse_rational(o.p));
        if (!o.delta.empty()) params.delta = parse_rational(o.delta);
        if (!o.lambda0.empty()) params.lambda0 = parse_rational(o.lambda0);
    } else {
        if (o.delta.empty() || o.lambda0.empty()) throw UsageError("give --lambda0 and --delta, or --mu and --p");
        params = EngineParams::with_defaults(r, o.t, parse_rational(o.lambda0), parse_rational(o.delta));
    }
    return params;
}

int cmd_run_book(const Options& o) {
    const EdgeColouring c = read_colouring_file(o.input);
    const EngineParams params = engine_params(o, c.r());
    const VertexSet all = c.all_vertices();
    const EngineOutcome outcome = run_book_engine(c, all, std::vector<VertexSet>(c.r(), all), params);
    if (!o.trace.empty()) write_file(o.trace, trace_to_jsonl(outcome));
    const MonitorSummary monitors = run_all_monitors(outcome.trace);
    json j = to_json(outcome);
    j["monitors"] = to_json(monitors);
    j["lambda0"] = to_string(params.lambda0);
    j["delta"] = to_string(params.delta);
    emit(j);
    std::cerr << "book engine: " << j["result"].get<std::string>() << " after " << outcome.trace.steps.size()
              << " steps\n";
    for (const auto& f : monitors.failures) std::cerr << "monitor " << f.lemma << ": " << f.message << '\n';
    return monitors.ok() ? kOk : kVerificationFailed;
}

int cmd_verify_trace(const Options& o) {
    const Trace trace = trace_from_jsonl(read_file(o.trace));
    json j;
    bool ok = true;
    if (!o.input.empty()) {
        const EdgeColouring c = read_colouring_file(o.input);
        const bool match = c.fingerprint() == trace.header.colouring_fingerprint;
        j["fingerprint_match"] = match;
        if (!match) std::cerr << "colouring fingerprint does not match the trace header\n";
        ok = ok && match;
    }
    const MonitorSummary monitors = run_all_monitors(trace);
    j["monitors"] = to_json(monitors);
    j["steps"] = trace.steps.size();
    emit(j);
    for (const auto& f : monitors.failures) std::cerr << "violated: " << f.lemma << ": " << f.message << '\n';
    if (monitors.ok() && ok) std::cerr << "all monitors pass on " << trace.steps.size() << " steps\n";
    return monitors.ok() && ok ? kOk : kVerificationFailed;
}

int cmd_regularise(const Options& o) {
    const EdgeColouring c = read_colouring_file(o.input);
    const RegularisationResult res = regularise(c, parse_rational(o.eps));
    const auto failures = regularisation_failures(c, res);
    json j = to_json(res);
    j["invariant_failures"] = failures;
    emit(j);
    std::cerr << "|W| = " << res.w.size() << ", sum |S_i| = " << res.removed() << '\n';
    for (const auto& f : failures) std::cerr << "invariant fails: " << f << '\n';
    return failures.empty() ? kOk : kVerificationFailed;
}

int report_bound(const json& j, bool pass, const std::string& what) {
    emit(j);
    std::cerr << what << (pass ? ": every check passes\n" : ": at least one check FAILS\n");
    return pass ? kOk : kVerificationFailed;
}

int cmd_bounds_thm51(const Options& o) {
    const ChainReport rep = thm51_chain(o.r);
    for (const auto& link : rep.links) {
        for (const auto& c : link.checks) {
            if (!c.pass) std::cerr << "link " << link.name << " check " << c.name << " fails (log gap " << c.slack << ")\n";
        }
    }
    return report_bound(to_json(rep), rep.pass(), "constant chain at r = " + std::to_string(o.r));
}

int cmd_bounds_appendix(const Options& o) {
    const BoundReport rep = appendix_check(o.k, o.t, o.r);
    json j = to_json(rep);
    j["lhs"] = appendix_lhs(o.k, o.t, o.r).str();
    return report_bound(j, rep.pass(), "multinomial bound");
}

int cmd_bounds_thm_book(const Options& o) {
    if (o.x_size.empty() || o.y_sizes.empty()) throw UsageError("--x and --y are required");
    std::vector<LogScalar> ys;
    std::stringstream ss(o.y_sizes);
    std::string item;
    while (std::getline(ss, item, ',')) ys.push_back(LogScalar::from_rational(parse_rational(item)));
    if (ys.size() != o.r) throw UsageError("--y needs r comma-separated sizes");
    const BoundReport rep =
        thm_book_hypotheses(parse_rational(o.p.empty() ? "1/2" : o.p), parse_rational(o.mu.empty() ? "8192" : o.mu),
                            BigRational(static_cast<std::int64_t>(o.t)), parse_rational(o.m), o.r,
                            LogScalar::from_rational(parse_rational(o.x_size)), ys);
    return report_bound(to_json(rep), rep.pass(), "book theorem hypotheses");
}

int cmd_bounds_targets(const Options& o) {
    const BookTargetBounds b = book_target_bounds(o.r, parse_rational(o.bk), parse_rational(o.bt));
    emit(to_json(b));
    std::cerr << "page target vs multinomial bound: " << (b.relation.pass ? "target dominates" : "target below bound")
              << '\n';
    return kOk;
}

int cmd_bounds_lemma53(const Options& o) {
    const Lemma53Report rep = lemma53_check(o.r, o.k, parse_rational(o.eps), parse_list(o.ks));
    return report_bound(to_json(rep), rep.pass, "escape bound");
}

int cmd_oracle_ramsey(const Options& o) {
    const RamseyResult res = ramsey_exhaustive(o.r, parse_list(o.ks), o.n);
    emit(to_json(res));
    std::cerr << (res.verdict == RamseyVerdict::CounterexampleFound ? "counterexample found on " : "every colouring of K_")
              << o.n << (res.verdict == RamseyVerdict::CounterexampleFound ? " vertices\n" : " has a monochromatic clique\n");
    return kOk;
}

int cmd_oracle_book(const Options& o) {
    const EdgeColouring c = read_colouring_file(o.input);
    const BookResult res = best_book(c, o.t);
    emit(to_json(res));
    std::cerr << "largest book with spine " << o.t << ": " << res.m_max << " pages\n";
    return kOk;
}

int cmd_oracle_clique(const Options& o) {
    const EdgeColouring c = read_colouring_file(o.input);
    const CliqueResult res = max_mono_clique(c, static_cast<Colour>(o.colour));
    emit({{"size", res.size}, {"witness", to_json(res.witness)}, {"nodes", res.nodes}});
    std::cerr << "largest colour-" << o.colour << " clique: " << res.size << '\n';
    return kOk;
}

int cmd_moments(const Options& o) {
    const auto ells_sz = parse_list(o.ells);
    const auto dims = parse_list(o.dims);
    const std::size_t r = ells_sz.size();
    if (dims.size() != 1 && dims.size() != r) throw UsageError("--dims needs one entry or one per colour");
    VectorFamily family;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t dim = dims.size() == 1 ? dims[0] : dims[i];
        VectorFamily one = random_family(1, o.points, dim, o.seed + i, o.range);
        family.vectors.push_back(std::move(one.vectors[0]));
    }
    std::vector<unsigned> ells(ells_sz.begin(), ells_sz.end());
    const BigRational sum = moment_double_sum(family, ells);
    const BigRational tensor = moment_tensor(family, ells);
    const bool ok = sum >= 0 && sum == tensor;
    emit({{"double_sum", to_string(sum)}, {"tensor", to_string(tensor)}, {"nonnegative", sum >= 0},
          {"equal", sum == tensor}});
    std::cerr << "moment " << to_string(sum) << (ok ? " (non-negative, tensor form agrees)\n" : " MISMATCH\n");
    return ok ? kOk : kVerificationFailed;
}

int cmd_drive(const Options& o) {
    const EdgeColouring c = read_colouring_file(o.input);
    DriverConfig cfg;
    cfg.eps = parse_rational(o.eps);
    cfg.t = o.t;
    if (!o.delta.empty()) cfg.delta = parse_rational(o.delta);
    if (!o.lambda0.empty()) cfg.lambda0 = parse_rational(o.lambda0);
    if (!o.mu.empty()) cfg.mu = parse_rational(o.mu);
    cfg.partition_seed = o.partition_seed;
    const DriverReport rep = desk_ramsey_driver(c, o.k, cfg);
    emit(to_json(rep));
    std::cerr << (rep.clique ? "found a monochromatic K_" + std::to_string(o.k) : "no clique: " + rep.note) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multicolour book algorithm toolkit"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* gen = app.add_subcommand("generate", "Write an edge colouring (.rcg)");
    gen->add_option("--n", o.n, "Vertex count");
    gen->add_option("--r", o.r, "Colour count");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--kind", o.kind, "random | pentagon | constant | product");
    gen->add_option("--left", o.left, "First factor (.rcg) for --kind product");
    gen->add_option("--right", o.right, "Second factor (.rcg) for --kind product");
    gen->add_option("-o,--output", o.output, "Output file; stdout when omitted");
    gen->callback([&] { action = [&] { return cmd_generate(o); }; });

    auto* run = app.add_subcommand("run-book", "Run the book algorithm on X = Y_i = V");
    run->add_option("-i,--input", o.input, "Colouring (.rcg)")->required();
    run->add_option("--t", o.t, "Target spine size");
    run->add_option("--lambda0", o.lambda0, "Boost threshold (rational)");
    run->add_option("--delta", o.delta, "Density slack (rational)");
    run->add_option("--mu", o.mu, "Derive delta and lambda0 from mu and p");
    run->add_option("--p", o.p, "Density p used with --mu");
    run->add_option("--trace", o.trace, "Write the JSON-lines trace here");
    run->callback([&] { action = [&] { return cmd_run_book(o); }; });

    auto* verify = app.add_subcommand("verify-trace", "Run every invariant monitor over a trace");
    verify->add_option("--trace", o.trace, "Trace (.jsonl)")->required();
    verify->add_option("-i,--input", o.input, "Colouring to match against the trace fingerprint");
    verify->callback([&] { action = [&] { return cmd_verify_trace(o); }; });

    auto* reg = app.add_subcommand("regularise", "Erdős–Szekeres regularisation");
    reg->add_option("-i,--input", o.input, "Colouring (.rcg)")->required();
    reg->add_option("--eps", o.eps, "Regularity slack (rational)");
    reg->callback([&] { action = [&] { return cmd_regularise(o); }; });

    auto* bounds = app.add_subcommand("bounds", "Verify closed-form bounds");
    bounds->require_subcommand(1);
    auto* thm51 = bounds->add_subcommand("thm51", "Constant chain of the final Ramsey bound");
    thm51->add_option("--r", o.r, "Colour count")->required();
    thm51->callback([&] { action = [&] { return cmd_bounds_thm51(o); }; });
    auto* appendix = bounds->add_subcommand("appendix", "Multinomial bound with 3 <= t <= k");
    appendix->add_option("--k", o.k)->required();
    appendix->add_option("--t", o.t)->required();
    appendix->add_option("--r", o.r)->required();
    appendix->callback([&] { action = [&] { return cmd_bounds_appendix(o); }; });
    auto* thm_book = bounds->add_subcommand("thm-book", "Hypotheses of the book theorem");
    thm_book->add_option("--p", o.p, "Density p (rational)");
    thm_book->add_option("--mu", o.mu, "mu (rational)");
    thm_book->add_option("--t", o.t)->required();
    thm_book->add_option("--m", o.m, "Page target m");
    thm_book->add_option("--r", o.r)->required();
    thm_book->add_option("--x", o.x_size, "|X|")->required();
    thm_book->add_option("--y", o.y_sizes, "Comma-separated |Y_i|")->required();
    thm_book->callback([&] { action = [&] { return cmd_bounds_thm_book(o); }; });
    auto* targets = bounds->add_subcommand("targets", "Page target against the multinomial bound");
    targets->add_option("--r", o.r)->required();
    targets->add_option("--k", o.bk, "k (rational)")->required();
    targets->add_option("--t", o.bt, "t (rational)")->required();
    targets->callback([&] { action = [&] { return cmd_bounds_targets(o); }; });
    auto* escape = bounds->add_subcommand("escape", "Bound used when regularisation removes many vertices");
    escape->add_option("--r", o.r)->required();
    escape->add_option("--k", o.k)->required();
    escape->add_option("--eps", o.eps);
    escape->add_option("--s", o.ks, "Comma-separated s_i")->required();
    escape->callback([&] { action = [&] { return cmd_bounds_lemma53(o); }; });

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference searches");
    oracle->require_subcommand(1);
    auto* ramsey = oracle->add_subcommand("ramsey", "Exhaustive Ramsey decision");
    ramsey->add_option("--r", o.r)->required();
    ramsey->add_option("--ks", o.ks, "Comma-separated clique sizes")->required();
    ramsey->add_option("--n", o.n)->required();
    ramsey->callback([&] { action = [&] { return cmd_oracle_ramsey(o); }; });
    auto* book = oracle->add_subcommand("book", "Largest monochromatic book with a given spine size");
    book->add_option("-i,--input", o.input)->required();
    book->add_option("--t", o.t)->required();
    book->callback([&] { action = [&] { return cmd_oracle_book(o); }; });
    auto* clique = oracle->add_subcommand("clique", "Largest monochromatic clique");
    clique->add_option("-i,--input", o.input)->required();
    clique->add_option("--colour", o.colour);
    clique->callback([&] { action = [&] { return cmd_oracle_clique(o); }; });

    auto* moments = app.add_subcommand("moments", "Moment positivity on a random vector family");
    moments->add_option("--seed", o.seed);
    moments->add_option("--dims", o.dims, "Dimension, or one per colour");
    moments->add_option("--ells", o.ells, "Comma-separated exponents, one per colour");
    moments->add_option("--points", o.points, "Family size |X|");
    moments->add_option("--range", o.range, "Coordinates drawn from [-range, range]");
    moments->callback([&] { action = [&] { return cmd_moments(o); }; });

    auto* drive = app.add_subcommand("drive", "Desk-scale end-to-end clique search");
    drive->add_option("-i,--input", o.input)->required();
    drive->add_option("--k", o.k)->required();
    drive->add_option("--t", o.t);
    drive->add_option("--eps", o.eps);
    drive->add_option("--lambda0", o.lambda0);
    drive->add_option("--delta", o.delta);
    drive->add_option("--mu", o.mu);
    drive->add_option("--partition-seed", o.partition_seed);
    drive->callback([&] { action = [&] { return cmd_drive(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const LemmaViolation& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
