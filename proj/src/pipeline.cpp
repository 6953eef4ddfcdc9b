#include "rbook/pipeline.hpp"

#include <random>

#include "rbook/errors.hpp"

namespace rbook {

std::size_t RegularisationResult::removed() const {
    std::size_t total = 0;
    for (const auto& set : s) total += set.size();
    return total;
}

RegularisationResult regularise(const EdgeColouring& c, const BigRational& eps) {
    if (eps <= 0 || eps >= 1) throw InvalidInput("eps must lie in (0, 1)");
    const std::size_t r = c.r();
    RegularisationResult out;
    out.eps = eps;
    out.s.assign(r, VertexSet(c.n()));
    VertexSet v = c.all_vertices();
    const BigRational share = BigRational(1, static_cast<std::int64_t>(r)) - eps;

    while (r > 1 && v.size() > r) {
        const BigRational threshold = share * static_cast<std::int64_t>(v.size()) - 1;
        bool found = false;
        Vertex x = 0;
        Colour l = 0;
        for (Vertex u = v.first(); u < v.universe() && !found; u = v.next(u)) {
            for (Colour i = 0; i < r; ++i) {
                const auto deg = static_cast<std::int64_t>(intersection_size(c.neighbourhood(u, i), v));
                if (BigRational(deg) < threshold) {
                    found = true;
                    x = u;
                    l = i;
                    break;
                }
            }
        }
        if (!found) break;
        Colour best = l == 0 ? 1 : 0;
        std::size_t best_size = 0;
        bool have = false;
        for (Colour j = 0; j < r; ++j) {
            if (j == l) continue;
            const std::size_t size = intersection_size(c.neighbourhood(x, j), v);
            if (!have || size > best_size) {
                best = j;
                best_size = size;
                have = true;
            }
        }
        out.s[best].insert(x);
        v &= c.neighbourhood(x, best);
    }
    out.w = std::move(v);
    return out;
}

std::vector<std::string> regularisation_failures(const EdgeColouring& c, const RegularisationResult& res) {
    std::vector<std::string> failures;
    const std::size_t r = c.r();
    if (res.s.size() != r) return {"expected one set S_i per colour"};
    for (Colour i = 0; i < r; ++i) {
        if (res.s[i].intersects(res.w)) failures.push_back("S_" + std::to_string(i) + " meets W");
        for (Colour j = i + 1; j < r; ++j) {
            if (res.s[i].intersects(res.s[j])) failures.push_back("S_" + std::to_string(i) + " meets S_" + std::to_string(j));
        }
    }
    if (!failures.empty()) return failures;

    const auto rr = static_cast<std::int64_t>(r);
    const BigRational size_bound = rbook::pow((1 + res.eps) / rr, static_cast<std::int64_t>(res.removed())) *
                                   static_cast<std::int64_t>(c.n());
    if (BigRational(static_cast<std::int64_t>(res.w.size())) < size_bound) {
        failures.push_back("|W| = " + std::to_string(res.w.size()) + " < " + to_string(size_bound));
    }
    const BigRational degree_bound = (BigRational(1, rr) - res.eps) * static_cast<std::int64_t>(res.w.size()) - 1;
    res.w.for_each([&](Vertex w) {
        for (Colour i = 0; i < r; ++i) {
            const auto deg = static_cast<std::int64_t>(intersection_size(c.neighbourhood(w, i), res.w));
            if (BigRational(deg) < degree_bound) {
                failures.push_back("vertex " + std::to_string(w) + " has colour-" + std::to_string(i) + " degree " +
                                   std::to_string(deg) + " in W, below " + to_string(degree_bound));
            }
        }
    });
    for (Colour i = 0; i < r; ++i) {
        if (!is_mono_book(c, res.s[i], res.w, i)) failures.push_back("(S_" + std::to_string(i) + ", W) is not a book");
    }
    return failures;
}

Lemma53Report lemma53_check(std::size_t r, std::size_t k, const BigRational& eps, const std::vector<std::size_t>& s) {
    if (r < 2 || k < 2) throw InvalidInput("need k, r >= 2");
    if (eps <= 0 || eps >= 1) throw InvalidInput("eps must lie in (0, 1)");
    if (s.size() != r) throw InvalidInput("need one s_i per colour");
    std::size_t total = 0;
    for (std::size_t si : s) {
        if (si > k) throw InvalidInput("every s_i must lie in [0, k]");
        total += si;
    }
    const BigRational kq(static_cast<std::int64_t>(k));
    const BigRational sq(static_cast<std::int64_t>(total));
    if (sq < eps * eps * kq) throw InvalidInput("need s >= eps^2 k");

    const auto rr = static_cast<std::int64_t>(r);
    const LogScalar r_ls = LogScalar::from_rational(BigRational(rr));
    const LogScalar decay = LogScalar::exp(-Interval::from_rational(eps * eps * eps * kq / 2));
    const LogScalar growth = LogScalar::exp(Interval::from_rational(eps * eps * eps * kq / 2));
    const LogScalar one_plus = LogScalar::from_rational(1 + eps);

    Lemma53Report rep;
    const BigRational rk(rr * static_cast<std::int64_t>(k));
    rep.checks.push_back(check_le("erdos_szekeres_chain", pow(r_ls, rk - sq),
                                  decay * pow(LogScalar::from_rational((1 + eps) / rr), sq) * pow(r_ls, rk)));
    rep.checks.push_back(check_ge("reduced", pow(one_plus, sq), growth));
    rep.checks.push_back(check_ge("proof_line", pow(one_plus, eps * eps * kq), growth));
    rep.pass = true;
    for (const auto& ch : rep.checks) rep.pass = rep.pass && ch.pass;
    return rep;
}

namespace {

EngineParams driver_params(std::size_t r, const DriverConfig& cfg) {
    EngineParams p;
    if (cfg.mu) {
        const BigRational density = BigRational(1, static_cast<std::int64_t>(r)) - 2 * cfg.eps;
        p = EngineParams::from_mu_p(r, cfg.t, *cfg.mu, density);
        if (cfg.delta) p.delta = *cfg.delta;
        if (cfg.lambda0) p.lambda0 = *cfg.lambda0;
    } else {
        p = EngineParams::with_defaults(r, cfg.t, cfg.lambda0.value_or(BigRational(10)),
                                        cfg.delta.value_or(BigRational(1, 16)));
    }
    return p;
}

/// `need` vertices of a colour-i clique inside `within`, if one exists.
std::optional<VertexSet> clique_inside(const EdgeColouring& c, Colour i, const VertexSet& within, std::size_t need,
                                       const SearchBudget& budget) {
    if (need == 0) return VertexSet(c.n());
    const CliqueResult found = max_mono_clique(c, i, budget, within);
    if (found.size < need) return std::nullopt;
    return found.witness.smallest(need);
}

}  // namespace

DriverReport desk_ramsey_driver(const EdgeColouring& c, std::size_t k, const DriverConfig& config) {
    if (k > 6) throw ScaleError("desk driver is limited to k <= 6, got k = " + std::to_string(k));
    const std::size_t r = c.r();
    DriverReport rep;
    rep.k = k;

    auto accept = [&](Colour i, VertexSet clique) {
        if (clique.size() != k || !is_mono_clique(c, clique, i)) {
            throw LemmaViolation("driver produced an invalid clique " + clique.to_string());
        }
        rep.clique_colour = i;
        rep.clique = std::move(clique);
    };

    if (k <= 2) {
        rep.phase = DriverPhase::Trivial;
        if (k == 0) {
            accept(0, VertexSet(c.n()));
        } else if (k == 1) {
            accept(0, VertexSet(c.n(), {0}));
        } else if (c.n() >= 2) {
            accept(c.colour(0, 1), VertexSet(c.n(), {0, 1}));
        } else {
            rep.note = "fewer than two vertices";
        }
        return rep;
    }

    rep.regularisation = regularise(c, config.eps);
    const RegularisationResult& reg = rep.regularisation;
    const BigRational threshold = config.escape_threshold.value_or(config.eps * config.eps * static_cast<std::int64_t>(k));

    if (BigRational(static_cast<std::int64_t>(reg.removed())) >= threshold) {
        rep.phase = DriverPhase::Escape;
        for (Colour i = 0; i < r; ++i) {
            const std::size_t have = reg.s[i].size();
            if (have >= k) {
                accept(i, reg.s[i].smallest(k));
                return rep;
            }
            if (auto extra = clique_inside(c, i, reg.w, k - have, config.budget)) {
                accept(i, reg.s[i] | *extra);
                return rep;
            }
        }
        rep.note = "no colour-i clique of size k - |S_i| inside W";
        return rep;
    }

    rep.phase = DriverPhase::BookPhase;
    rep.params = driver_params(r, config);
    VertexSet x = reg.w;
    std::vector<VertexSet> ys(r, reg.w);
    if (config.partition_seed) {
        std::mt19937_64 eng(*config.partition_seed);
        x = VertexSet(c.n());
        ys.assign(r, VertexSet(c.n()));
        reg.w.for_each([&](Vertex v) {
            const auto part = uniform_below(eng, r + 1);
            if (part == 0) {
                x.insert(v);
            } else {
                ys[part - 1].insert(v);
            }
        });
    }
    try {
        rep.engine = run_book_engine(c, x, ys, rep.params);
    } catch (const InvalidInput& e) {
        rep.phase = DriverPhase::BookSkipped;
        rep.note = e.what();
        return rep;
    }
    const EngineOutcome& out = *rep.engine;
    if (out.result != EngineResult::BookFound) {
        rep.note = out.result == EngineResult::ReservoirExhausted ? "reservoir exhausted before a spine of size t"
                                                                   : "engine aborted: " + out.abort_reason;
        return rep;
    }
    const std::size_t t = out.spine.size();
    if (t >= k) {
        accept(out.colour, out.spine.smallest(k));
        return rep;
    }
    const CliqueResult in_pages = max_mono_clique(c, out.colour, config.budget, out.pages);
    rep.page_clique_size = in_pages.size;
    if (in_pages.size >= k - t) {
        accept(out.colour, out.spine | in_pages.witness.smallest(k - t));
    } else {
        rep.note = "pages hold no colour-" + std::to_string(out.colour) + " clique of size k - t";
    }
    return rep;
}

}  // namespace rbook
