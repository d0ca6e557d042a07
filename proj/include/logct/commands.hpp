#pragma once

// The compute / verify / table / virasoro commands as library functions. Each
// returns a Report plus the process exit code; the executable only parses
// arguments and prints.

#include "logct/cache.hpp"
#include "logct/ct.hpp"
#include "logct/identities.hpp"
#include "logct/report.hpp"
#include "logct/spectrum.hpp"
#include "logct/virasoro.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logct {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int refuted = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
}  // namespace exit_code

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Strategy parse_strategy(const std::string& s)
{
    if (s == "symbolic") return Strategy::Symbolic;
    if (s == "interpolate") return Strategy::Interpolate;
    if (s == "both") return Strategy::Both;
    throw UsageError("unknown strategy: " + s);
}

struct RunConfig {
    Strategy strategy = Strategy::Symbolic;
    unsigned threads = 1;
    std::size_t max_terms = ResourceLimits{}.max_terms;
    std::optional<long> timeout_seconds;
    std::optional<std::filesystem::path> cache_dir;
    Format format = Format::Json;
    bool allow_sign = false;
};

struct Params {
    std::optional<long> p, k, m, n;
    std::optional<Rational> t;
    std::optional<std::string> r, s;  // an integer or a range "a..b"
};

struct Outcome {
    Report report;
    int exit_code = exit_code::ok;
};

/// "a" or "a..b" (inclusive).
inline std::vector<long> parse_range(const std::string& s)
{
    auto to_long = [&](const std::string& x) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(x, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer or range: " + s);
        }
        if (used != x.size()) throw UsageError("not an integer or range: " + s);
        return v;
    };
    auto dots = s.find("..");
    long lo = to_long(s.substr(0, dots));
    long hi = dots == std::string::npos ? lo : to_long(s.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range: " + s);
    if (hi - lo > 10000) throw UsageError("range too long: " + s);
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

class Runner {
public:
    explicit Runner(RunConfig cfg) : cfg_(std::move(cfg))
    {
        if (cfg_.threads == 0) throw UsageError("--threads must be positive");
        if (cfg_.cache_dir) cache_.emplace(*cfg_.cache_dir);
    }

    [[nodiscard]] const RunConfig& config() const { return cfg_; }

    Outcome compute(const std::string& target, const Params& ps) { return guarded("compute " + target, ps, [&](Report& r) { return do_compute(target, ps, r); }); }
    Outcome verify(const std::string& identity, const Params& ps) { return guarded("verify " + identity, ps, [&](Report& r) { return do_verify(identity, ps, r); }); }
    Outcome table(const std::string& which, const Params& ps) { return guarded("table " + which, ps, [&](Report& r) { return do_table(which, ps, r); }); }
    Outcome virasoro(const Params& ps) { return guarded("virasoro", ps, [&](Report& r) { return do_virasoro(ps, r); }); }

private:
    [[nodiscard]] EngineOptions engine_options() const
    {
        EngineOptions o;
        o.threads = cfg_.threads;
        o.limits.max_terms = cfg_.max_terms;
        if (cfg_.timeout_seconds) o.limits.deadline = started_ + std::chrono::seconds(*cfg_.timeout_seconds);
        return o;
    }

    static Json echo(const Params& ps)
    {
        Json j = Json::object();
        if (ps.p) j["p"] = *ps.p;
        if (ps.k) j["k"] = *ps.k;
        if (ps.m) j["m"] = *ps.m;
        if (ps.n) j["n"] = *ps.n;
        if (ps.r) j["r"] = *ps.r;
        if (ps.s) j["s"] = *ps.s;
        if (ps.t) j["t"] = to_string(*ps.t);
        return j;
    }

    template <typename F>
    Outcome guarded(std::string command, const Params& ps, F&& body)
    {
        started_ = std::chrono::steady_clock::now();
        Outcome o;
        o.report.command = std::move(command);
        o.report.params = echo(ps);
        try {
            o.exit_code = body(o.report);
        } catch (const ResourceLimitExceeded& e) {
            o.report.status = "resource-limit";
            o.report.details["error"] = e.what();
            o.exit_code = exit_code::resource;
        } catch (const StrategyMismatch& e) {
            o.report.status = "strategy-mismatch";
            o.report.details["error"] = e.what();
            o.exit_code = exit_code::refuted;
        } catch (const std::invalid_argument& e) {
            o.report.status = "usage-error";
            o.report.details["error"] = e.what();
            o.exit_code = exit_code::usage;
        }
        o.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started_).count();
        return o;
    }

    static long need(const std::optional<long>& v, const char* name)
    {
        if (!v) throw UsageError(std::string("missing --") + name);
        return *v;
    }

    /// Cache-first evaluation. `both` always recomputes so the cross-check runs.
    CTValue solve(const CTProblem& prob, Report& r)
    {
        const bool has_t = prob.symbolic() && std::any_of(prob.factors.begin(), prob.factors.end(), [](const FactorSpec& f) {
                               return f.kind == FactorKind::OnePlusPower && !f.t_value;
                           });
        const Strategy used = has_t ? cfg_.strategy : Strategy::Direct;
        const std::string hash = problem_hash(prob, kEngineVersion);
        if (r.problem_hash.is_null()) {
            r.problem_hash = hash;
        } else {
            if (!r.problem_hash.is_array()) r.problem_hash = Json::array({r.problem_hash});
            r.problem_hash.push_back(hash);
        }
        if (r.strategy.empty() || r.strategy == "direct") r.strategy = to_string(used);
        if (cache_ && used != Strategy::Both)
            if (auto hit = cache_->lookup(prob)) return *hit;
        CTValue v = evaluate(prob, cfg_.strategy, engine_options()).value;
        if (cache_) cache_->store(prob, v);
        return v;
    }

    TPoly solve_poly(const CTProblem& prob, Report& r)
    {
        CTValue v = solve(prob, r);
        if (auto* p = std::get_if<TPoly>(&v)) return *p;
        return TPoly(std::get<Rational>(v));
    }

    Rational solve_value(const CTProblem& prob, Report& r)
    {
        CTValue v = solve(prob, r);
        if (auto* q = std::get_if<Rational>(&v)) return *q;
        const TPoly& p = std::get<TPoly>(v);
        if (p.degree() > 0) throw std::logic_error("expected a number, got a polynomial");
        return p.coeff(0);
    }

    [[nodiscard]] int verdict_exit(const Verdict& v) const { return v.ok(cfg_.allow_sign) ? exit_code::ok : exit_code::refuted; }

    int do_compute(const std::string& target, const Params& ps, Report& r)
    {
        CTProblem prob;
        if (target == "F") {
            prob = problem_F(need(ps.p, "p"));
        } else if (target == "E") {
            prob = problem_E(need(ps.k, "k"), need(ps.p, "p"));
        } else if (target == "Gtilde") {
            prob = problem_Gtilde(need(ps.p, "p"));
        } else if (target == "dyson") {
            prob = problem_dyson(need(ps.n, "n"), need(ps.m, "m"));
        } else if (target == "logdyson") {
            prob = problem_log_dyson_vandermonde(need(ps.k, "k"), need(ps.m, "m"));
        } else if (target == "logdyson-cyclic") {
            prob = problem_log_dyson_cyclic(need(ps.p, "p"));
        } else {
            throw UsageError("unknown compute target: " + target);
        }
        if (ps.t) {
            if (target != "F" && target != "E" && target != "Gtilde") throw UsageError("--t applies to F, E and Gtilde only");
            prob = prob.at(*ps.t);
        }
        r.value = to_json(solve(prob, r));
        r.status = "computed";
        return exit_code::ok;
    }

    int do_verify(const std::string& id, const Params& ps, Report& r)
    {
        Verdict v;
        if (id == "conjm1") {
            const long p = need(ps.p, "p");
            v = verdict_conjm1(solve_poly(problem_F(p), r), p);
        } else if (id == "conj-g") {
            const long p = need(ps.p, "p");
            v = verdict_conj_g(solve_poly(problem_Gtilde(p), r), p);
        } else if (id == "e-conj") {
            const long k = need(ps.k, "k"), p = need(ps.p, "p");
            v = verdict_E(solve_poly(problem_E(k, p), r), k, p);
        } else if (id == "log-dyson") {
            const long k = need(ps.k, "k"), m = need(ps.m, "m");
            v = verdict_log_dyson(solve_value(problem_log_dyson_vandermonde(k, m), r), k, m);
        } else if (id == "log-dyson-cyclic") {
            const long p = need(ps.p, "p");
            v = verdict_log_dyson_cyclic(solve_value(problem_log_dyson_cyclic(p), r), p);
            const auto sv = special_value_report_from(solve_value(problem_F(p).at(2 * p - 1), r), p);
            r.details["F(p,2p-1)"] = to_string(sv.computed);
            r.details["F(p,2p-1) printed double sum"] = to_string(sv.double_sum);
            r.details["matches (-1)^((p+1)/2)"] = sv.matches_plus_candidate;
            r.details["matches (-1)^((p-1)/2)"] = sv.matches_minus_candidate;
        } else if (id == "chu-fu") {
            const auto c = chu_fu(need(ps.m, "m"));
            v = c.verdict;
        } else if (id == "ck") {
            const long p = need(ps.p, "p");
            std::vector<long> ks;
            if (ps.k) {
                ks.push_back(*ps.k);
            } else {
                for (long k = 0; k <= p; ++k) ks.push_back(k);
            }
            Json rows = Json::array();
            v.status = Status::Verified;
            for (long k : ks) {
                const auto c = harmonic_Ck(p, k);
                rows.push_back({{"k", k}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}, {"status", to_string(c.verdict.status)}});
                if (c.verdict.status != Status::Verified && v.status == Status::Verified) v = c.verdict;
            }
            r.value = rows;
        } else if (id == "vanishing") {
            const long p = need(ps.p, "p");
            v = verdict_vanishing(solve_poly(problem_F(p), r), p);
        } else if (id == "zhu-w") {
            v = verify_zhu_w(need(ps.p, "p"));
        } else if (id == "zhu-singlet") {
            v = verify_zhu_singlet(need(ps.p, "p"));
        } else if (id == "fusion") {
            const long p = need(ps.p, "p"), n = need(ps.n, "n");
            v = verify_fusion(p, n);
            remember_fusion_survivor(r);
        } else if (id == "singular") {
            v = verify_singular(need(ps.p, "p"));
        } else {
            throw UsageError("unknown identity: " + id);
        }
        r.absorb(v);
        if (r.value.is_null()) r.value = v.lhs;
        return verdict_exit(v);
    }

    /// The convention grid result is persisted so later runs can see which
    /// convention was selected.
    void remember_fusion_survivor(Report& r)
    {
        const std::string key = "fusion-convention-grid;p=3,5;n=1,2,3";
        Json survivors = Json::array();
        if (cache_) {
            if (auto hit = cache_->lookup(key)) survivors = *hit;
        }
        if (survivors.empty()) {
            for (const auto& c : fusion_convention_grid({3, 5}, {1, 2, 3}).survivors) survivors.push_back(to_string(c));
            if (cache_) cache_->store(key, survivors);
        }
        r.details["surviving_conventions"] = survivors;
    }

    int do_table(const std::string& which, const Params& ps, Report& r)
    {
        const long p = need(ps.p, "p");
        require_odd_ge3(p, "table");
        Json rows = Json::array();
        if (which == "h") {
            const auto rs = parse_range(ps.r.value_or("1"));
            const auto ss = parse_range(ps.s.value_or("1"));
            for (long a : rs)
                for (long b : ss) rows.push_back({{"r", a}, {"s", b}, {"h", to_string(h_rs(p, a, b))}});
        } else if (which == "modules") {
            const auto t = module_table(p);
            for (const auto& e : t.entries)
                rows.push_back({{"module", e.label},
                                {"lowest_weight", to_string(e.lowest_weight)},
                                {"top_dimension", e.top_dimension},
                                {"origin", e.origin == ModuleOrigin::MinimalModel ? "minimal-model" : "W-module"}});
            r.details["count"] = t.entries.size();
            if (t.dimensions_extrapolated) r.details["note"] = "top dimensions for p > 3 extrapolated from the p = 3 rule";
        } else if (which == "counts") {
            const auto c = counts(p);
            rows.push_back({{"irreducible", c.irreducible}, {"character_dim", c.character_dim}});
        } else if (which == "zhu") {
            auto add = [&](const char* name, const FactoredPoly& f) {
                for (const auto& [root, mult] : f.roots()) rows.push_back({{"polynomial", name}, {"root", to_string(root)}, {"multiplicity", mult}});
            };
            add("W", zhu_poly_W(p));
            add("singlet", zhu_poly_singlet(p));
        } else {
            throw UsageError("unknown table: " + which);
        }
        r.value = rows;
        r.status = "computed";
        return exit_code::ok;
    }

    static std::string pbw_word(const Partition& part)
    {
        std::string s;
        for (std::size_t i = 0; i < part.size();) {
            std::size_t j = i;
            while (j < part.size() && part[j] == part[i]) ++j;
            s += "L(-" + std::to_string(part[i]) + ")";
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s.empty() ? "1" : s;
    }

    int do_virasoro(const Params& ps, Report& r)
    {
        const long p = need(ps.p, "p");
        require_odd_ge3(p, "virasoro");
        const auto v = singular_vector_degree5(Rational(p));
        Json rows = Json::array();
        for (const auto& [part, coeff] : v.terms) rows.push_back({{"term", pbw_word(part)}, {"coefficient", to_string(coeff)}});
        const Verdict s = verify_singular(p);
        r.absorb(s);
        r.value = rows;
        r.details["c"] = to_string(v.c);
        r.details["h"] = to_string(v.h);
        if (ps.n) {
            Json conv = Json::object();
            for (const auto& c : all_fusion_conventions()) {
                Json roots = Json::array();
                const auto fr = fusion_h_roots(p, *ps.n, c);
                for (const auto& x : fr.roots) roots.push_back(to_string(x));
                conv[to_string(c)] = {{"roots", roots}, {"splits", fr.splits}};
            }
            r.details["fusion_roots"] = conv;
        }
        return verdict_exit(s);
    }

    RunConfig cfg_;
    std::optional<ResultCache> cache_;
    std::chrono::steady_clock::time_point started_ = std::chrono::steady_clock::now();
};

}  // namespace logct
