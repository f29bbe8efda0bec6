// azcheck: exact and modular verification of Almkvist-Zudilin number
// identities, supercongruence sweeps over prime ranges, and high-precision
// evaluation of the Chan-Verrill series for 1/pi.
//
// Exit codes: 0 all checks pass, 1 at least one failure, 2 usage/config error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "az/run.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<az::CongruenceTarget> parse_targets(const std::string& arg) {
    std::vector<az::CongruenceTarget> out;
    for (const std::string& tok : split_commas(arg)) {
        if (tok == "all") {
            auto all = az::all_congruence_targets();
            out.assign(all.begin(), all.end());
            return out;
        }
        auto t = az::parse_congruence_target(tok);
        if (!t) throw CLI::ValidationError("--targets", "unknown target '" + tok + "'");
        out.push_back(*t);
    }
    return out;
}

std::vector<az::IdentityName> parse_names(const std::string& arg) {
    std::vector<az::IdentityName> out;
    for (const std::string& tok : split_commas(arg)) {
        if (tok == "all") {
            auto all = az::all_identity_names();
            out.assign(all.begin(), all.end());
            return out;
        }
        auto n = az::parse_identity_name(tok);
        if (!n) throw CLI::ValidationError("--names", "unknown identity '" + tok + "'");
        out.push_back(*n);
    }
    return out;
}

// "lo..hi", inclusive bounds.
std::pair<long, long> parse_prime_range(const std::string& arg) {
    auto dots = arg.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--primes", "expected lo..hi, got '" + arg + "'");
    try {
        size_t used = 0;
        long lo = std::stol(arg.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("");
        std::string hi_part = arg.substr(dots + 2);
        long hi = std::stol(hi_part, &used);
        if (used != hi_part.size()) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--primes", "expected lo..hi, got '" + arg + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification lab for Almkvist-Zudilin numbers: exact identities, "
                 "supercongruence sweeps, and the Chan-Verrill series for 1/pi"};
    app.require_subcommand(1);

    az::RunConfig cfg;
    std::string format = "text";
    std::string targets_arg = "all";
    std::string names_arg = "all";
    std::string primes_arg = "5..499";
    std::string kind_arg = "gamma";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write records to a file instead of stdout");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* seq = app.add_subcommand("seq", "print a sequence table");
    seq->add_option("--kind", kind_arg, "gamma or g")->check(CLI::IsMember({"gamma", "g"}));
    seq->add_option("--max", cfg.seq_max, "largest index n (inclusive)");
    add_common(seq);

    CLI::App* verify = app.add_subcommand("verify", "run congruence checks over a prime range");
    verify->add_option("--targets", targets_arg, "comma-separated target names, or 'all'");
    verify->add_option("--primes", primes_arg, "inclusive prime range lo..hi");
    verify->add_flag("--inject-failure", cfg.inject_failure,
                     "self-test: perturb gamma_1 by +1 so checks must fail");
    add_common(verify);

    CLI::App* identity = app.add_subcommand("identity", "verify exact identities");
    identity->add_option("--names", names_arg, "comma-separated identity names, or 'all'");
    identity->add_option("--max-n", cfg.max_n, "check all n in [0, max-n]");
    add_common(identity);

    CLI::App* series = app.add_subcommand("series", "partial sum of the Chan-Verrill series");
    series->add_option("--terms", cfg.terms, "number of series terms");
    series->add_option("--digits", cfg.digits, "decimal precision (20..1000)");
    add_common(series);

    CLI::App* report =
        app.add_subcommand("convergence-report", "tabulate abs_error for N = 10, 20, ...");
    report->add_option("--terms", cfg.terms, "largest N in the table");
    report->add_option("--digits", cfg.digits, "decimal precision (20..1000)");
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) {
            cfg.cmd = az::RunConfig::Cmd::seq;
            cfg.kind = kind_arg == "g" ? az::SequenceKind::g : az::SequenceKind::gamma;
        } else if (verify->parsed()) {
            cfg.cmd = az::RunConfig::Cmd::verify;
            cfg.targets = parse_targets(targets_arg);
            std::tie(cfg.prime_lo, cfg.prime_hi) = parse_prime_range(primes_arg);
        } else if (identity->parsed()) {
            cfg.cmd = az::RunConfig::Cmd::identity;
            cfg.names = parse_names(names_arg);
        } else if (series->parsed()) {
            cfg.cmd = az::RunConfig::Cmd::series;
        } else {
            cfg.cmd = az::RunConfig::Cmd::convergence_report;
            if (!report->count("--terms")) cfg.terms = 200;
            if (!report->count("--digits")) cfg.digits = 220;
        }
        cfg.format = format == "json" ? az::Format::json
                   : format == "csv"  ? az::Format::csv
                                      : az::Format::text;

        az::RunSummary summary = az::run(cfg, std::cout, std::cerr);
        return summary.exit_code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "azcheck: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "azcheck: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "azcheck: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "azcheck: " << e.what() << "\n";
        return 2;
    }
}
