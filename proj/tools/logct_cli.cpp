#include "logct/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Exact constant-term residues, identity checks and (2,p) spectral tables"};
    app.require_subcommand(1);

    logct::Params ps;
    std::string strategy = "symbolic";
    unsigned threads = 1;
    std::optional<long> timeout;
    std::size_t max_terms = logct::ResourceLimits{}.max_terms;
    std::optional<std::string> cache_dir, t_text;
    std::string format = "json";
    bool allow_sign = false;

    app.add_option("--p", ps.p, "odd parameter p");
    app.add_option("--k", ps.k);
    app.add_option("--m", ps.m);
    app.add_option("--n", ps.n);
    app.add_option("--r", ps.r, "integer or range a..b");
    app.add_option("--s", ps.s, "integer or range a..b");
    app.add_option("--t", t_text, "fix t to a rational value");
    app.add_option("--strategy", strategy)->check(CLI::IsMember({"symbolic", "interpolate", "both"}));
    app.add_flag_callback("--symbolic", [&] { strategy = "symbolic"; });
    app.add_flag_callback("--interpolate", [&] { strategy = "interpolate"; });
    app.add_flag_callback("--both", [&] { strategy = "both"; });
    app.add_option("--threads", threads)->check(CLI::PositiveNumber);
    app.add_option("--timeout", timeout, "wall-time limit in seconds")->check(CLI::PositiveNumber);
    app.add_option("--max-terms", max_terms, "limit on intermediate polynomial terms")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cache_dir);
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_flag("--allow-sign", allow_sign, "accept verified-up-to-sign verdicts");

    std::string target;
    auto* compute = app.add_subcommand("compute", "evaluate a residue or constant term");
    compute->add_option("target", target)->required()->check(CLI::IsMember({"F", "E", "Gtilde", "dyson", "logdyson", "logdyson-cyclic"}));
    auto* verify = app.add_subcommand("verify", "check an identity");
    verify->add_option("identity", target)
        ->required()
        ->check(CLI::IsMember({"conjm1", "conj-g", "e-conj", "log-dyson", "log-dyson-cyclic", "chu-fu", "ck", "vanishing",
                               "zhu-w", "zhu-singlet", "fusion", "singular"}));
    auto* table = app.add_subcommand("table", "print a spectral table");
    table->add_option("which", target)->required()->check(CLI::IsMember({"h", "modules", "counts", "zhu"}));
    auto* vir = app.add_subcommand("virasoro", "degree-5 singular vector and fusion roots");
    for (auto* sub : {compute, verify, table, vir}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return logct::exit_code::usage;
    }

    try {
        if (t_text) ps.t = logct::parse_rational(*t_text);
        logct::RunConfig cfg;
        cfg.strategy = logct::parse_strategy(strategy);
        cfg.threads = threads;
        cfg.max_terms = max_terms;
        cfg.timeout_seconds = timeout;
        if (cache_dir) cfg.cache_dir = *cache_dir;
        cfg.format = logct::parse_format(format);
        cfg.allow_sign = allow_sign;

        logct::Runner runner(cfg);
        logct::Outcome out;
        if (*compute) out = runner.compute(target, ps);
        else if (*verify) out = runner.verify(target, ps);
        else if (*table) out = runner.table(target, ps);
        else out = runner.virasoro(ps);
        std::cout << logct::render(out.report, cfg.format);
        return out.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return logct::exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return logct::exit_code::refuted;
    }
}
