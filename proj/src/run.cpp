#include "az/run.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "az/series.hpp"

namespace az {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(SequenceKind k) { return k == SequenceKind::gamma ? "gamma" : "g"; }

std::string check_label(const CongruenceCheck& c) {
    return to_string(c.target) + " p=" + std::to_string(c.p);
}

std::string identity_label(const IdentityResult& r) {
    std::string s = to_string(r.name) + " n=" + std::to_string(r.n);
    if (r.i) s += " i=" + std::to_string(*r.i);
    return s;
}

class Reporter {
public:
    Reporter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void csv_header(const std::string& header) {
        if (format_ == Format::csv) out_ << header << "\n";
    }

    void congruence(const CongruenceCheck& c) {
        switch (format_) {
            case Format::text:
                out_ << check_label(c) << " (mod p^" << c.m << "): lhs=" << c.lhs.value
                     << " rhs=" << c.rhs.value << (c.holds ? " PASS" : " FAIL");
                if (c.first_failing_index)
                    out_ << " first_failing_index=" << *c.first_failing_index;
                if (c.conjecture) out_ << " [conjecture]";
                out_ << "\n";
                break;
            case Format::json: {
                ordered_json j;
                j["target"] = to_string(c.target);
                j["p"] = c.p;
                j["m"] = c.m;
                j["lhs"] = c.lhs.value.str();
                j["rhs"] = c.rhs.value.str();
                j["holds"] = c.holds;
                j["first_failing_index"] =
                    c.first_failing_index ? ordered_json(*c.first_failing_index)
                                          : ordered_json(nullptr);
                j["conjecture"] = c.conjecture;
                out_ << j.dump() << "\n";
                break;
            }
            case Format::csv:
                out_ << to_string(c.target) << "," << c.p << "," << c.m << ","
                     << c.lhs.value.str() << "," << c.rhs.value.str() << ","
                     << (c.holds ? "true" : "false") << ","
                     << (c.first_failing_index ? std::to_string(*c.first_failing_index) : "")
                     << "," << (c.conjecture ? "true" : "false") << "\n";
                break;
        }
    }

    void identity(const IdentityResult& r) {
        switch (format_) {
            case Format::text:
                out_ << identity_label(r) << ": lhs=" << r.lhs.str() << " rhs=" << r.rhs.str()
                     << (r.holds ? " PASS" : " FAIL") << "\n";
                break;
            case Format::json: {
                ordered_json j;
                j["name"] = to_string(r.name);
                j["n"] = r.n;
                j["i"] = r.i ? ordered_json(*r.i) : ordered_json(nullptr);
                j["lhs"] = r.lhs.str();
                j["rhs"] = r.rhs.str();
                j["holds"] = r.holds;
                out_ << j.dump() << "\n";
                break;
            }
            case Format::csv:
                out_ << to_string(r.name) << "," << r.n << ","
                     << (r.i ? std::to_string(*r.i) : "") << "," << r.lhs.str() << ","
                     << r.rhs.str() << "," << (r.holds ? "true" : "false") << "\n";
                break;
        }
    }

    void sequence_value(SequenceKind kind, long n, const Int& v) {
        switch (format_) {
            case Format::text:
                out_ << v << "\n";
                break;
            case Format::json: {
                ordered_json j;
                j["kind"] = kind_name(kind);
                j["n"] = n;
                j["value"] = v.str();
                out_ << j.dump() << "\n";
                break;
            }
            case Format::csv:
                out_ << kind_name(kind) << "," << n << "," << v.str() << "\n";
                break;
        }
    }

    void convergence(const ConvergenceRecord& r, long digits) {
        switch (format_) {
            case Format::text:
                out_ << "N=" << r.terms_used << " partial_sum=" << r.partial_sum.str()
                     << " abs_error=" << r.abs_error.str() << "\n";
                break;
            case Format::json: {
                ordered_json j;
                j["terms"] = r.terms_used;
                j["digits"] = digits;
                j["partial_sum"] = r.partial_sum.str();
                j["target"] = r.target.str();
                j["abs_error"] = r.abs_error.str();
                out_ << j.dump() << "\n";
                break;
            }
            case Format::csv:
                out_ << r.terms_used << "," << digits << "," << r.partial_sum.str() << ","
                     << r.target.str() << "," << r.abs_error.str() << "\n";
                break;
        }
    }

private:
    std::ostream& out_;
    Format format_;
};

struct Tally {
    long total = 0, passes = 0, failures = 0;
    std::string first_failure;

    void record(bool holds, const std::string& label) {
        ++total;
        if (holds) {
            ++passes;
        } else {
            ++failures;
            if (first_failure.empty()) first_failure = label;
        }
    }
};

Tally run_verify(const RunConfig& cfg, Reporter& rep) {
    if (cfg.targets.empty()) throw std::invalid_argument("verify: no targets selected");
    if (cfg.prime_lo > cfg.prime_hi) throw std::invalid_argument("verify: bad prime range");
    long lo = std::max(cfg.prime_lo, 5L);
    if (cfg.prime_hi < 5 || prime_range(lo, cfg.prime_hi).empty())
        throw std::invalid_argument("verify: no primes >= 5 in range");

    CheckContext ctx = CheckContext::for_primes(cfg.prime_hi);
    if (cfg.inject_failure) ctx.perturb_gamma(1, Int(1));

    rep.csv_header("target,p,m,lhs,rhs,holds,first_failing_index,conjecture");
    Tally tally;
    for (const CongruenceCheck& c : sweep(ctx, cfg.targets, lo, cfg.prime_hi, cfg.jobs)) {
        rep.congruence(c);
        tally.record(c.holds, check_label(c));
    }
    return tally;
}

Tally run_identity(const RunConfig& cfg, Reporter& rep) {
    if (cfg.names.empty()) throw std::invalid_argument("identity: no names selected");
    if (cfg.max_n < 0) throw std::invalid_argument("identity: negative --max-n");

    std::vector<IdentityName> names = cfg.names;
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    CheckContext ctx = CheckContext::for_identities(cfg.max_n);
    rep.csv_header("name,n,i,lhs,rhs,holds");
    Tally tally;
    for (IdentityName name : names) {
        for (long n = 0; n <= cfg.max_n; ++n) {
            if (identity_takes_index(name)) {
                for (long i = 0; i < n; ++i) {
                    IdentityResult r = verify_identity(ctx, name, n, i);
                    rep.identity(r);
                    tally.record(r.holds, identity_label(r));
                }
            } else {
                IdentityResult r = verify_identity(ctx, name, n);
                rep.identity(r);
                tally.record(r.holds, identity_label(r));
            }
        }
    }
    return tally;
}

Tally run_seq(const RunConfig& cfg, Reporter& rep) {
    if (cfg.seq_max < 0) throw std::invalid_argument("seq: negative --max");
    SequenceTable table = cfg.kind == SequenceKind::gamma ? build_gamma_table(cfg.seq_max)
                                                          : build_g_table(cfg.seq_max);
    rep.csv_header("kind,n,value");
    Tally tally;
    for (long n = 0; n <= cfg.seq_max; ++n) {
        rep.sequence_value(cfg.kind, n, table.at(n));
        tally.record(true, "");
    }
    return tally;
}

Tally run_series(const RunConfig& cfg, Reporter& rep) {
    rep.csv_header("terms,digits,partial_sum,target,abs_error");
    ConvergenceRecord r = chan_verrill_partial(cfg.terms, cfg.digits);
    rep.convergence(r, cfg.digits);
    Tally tally;
    tally.record(true, "");
    return tally;
}

Tally run_convergence_report(const RunConfig& cfg, Reporter& rep, std::ostream& diag) {
    rep.csv_header("terms,digits,partial_sum,target,abs_error");
    std::vector<ConvergenceRecord> rows = convergence_table(cfg.terms, 10, cfg.digits);
    Tally tally;
    for (const ConvergenceRecord& r : rows) {
        rep.convergence(r, cfg.digits);
        tally.record(true, "");
    }

    // Tabulated rows: first row index from which abs_error strictly decreases.
    long decreasing_from = rows.empty() ? 0 : rows.back().terms_used;
    for (size_t idx = rows.size(); idx-- > 1;) {
        if (rows[idx].abs_error < rows[idx - 1].abs_error)
            decreasing_from = rows[idx - 1].terms_used;
        else
            break;
    }
    diag << "convergence: abs_error strictly decreasing across tabulated rows from N="
         << decreasing_from << "\n";

    // Step-by-step |error| is not monotone: list the exceptions so the table
    // cannot be over-read.
    SequenceTable gamma = build_gamma_table(cfg.terms - 1);
    Fixed target = target_value(cfg.digits);
    std::vector<long> bumps;
    Rat sum(0);
    Fixed prev_err = target;  // error of the empty sum is the target itself
    for (long n = 1; n <= cfg.terms; ++n) {
        long k = n - 1;
        sum += Rat((4 * k + 1) * gamma.at(k), pow(Int(81), static_cast<unsigned long>(k)));
        Fixed err = abs(Fixed::from_rational(sum, cfg.digits) - target);
        if (n > 1 && !(err < prev_err)) bumps.push_back(n - 1);
        prev_err = err;
    }
    diag << "convergence: term-by-term non-decreasing steps at N =";
    if (bumps.empty()) diag << " (none)";
    for (long b : bumps) diag << " " << b;
    diag << "\n";
    return tally;
}

}  // namespace

RunSummary run(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (cfg.jobs < 1) throw std::invalid_argument("run: --jobs must be >= 1");

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw std::runtime_error("run: cannot open output file " + cfg.out_path);
        sink = &file;
    }
    Reporter rep(*sink, cfg.format);

    auto start = std::chrono::steady_clock::now();
    Tally tally;
    switch (cfg.cmd) {
        case RunConfig::Cmd::verify:  tally = run_verify(cfg, rep); break;
        case RunConfig::Cmd::identity: tally = run_identity(cfg, rep); break;
        case RunConfig::Cmd::seq:     tally = run_seq(cfg, rep); break;
        case RunConfig::Cmd::series:  tally = run_series(cfg, rep); break;
        case RunConfig::Cmd::convergence_report:
            tally = run_convergence_report(cfg, rep, diag);
            break;
    }
    if (sink == &file) {
        file.flush();
        if (!file) throw std::runtime_error("run: write failure on " + cfg.out_path);
    }
    auto stop = std::chrono::steady_clock::now();

    RunSummary summary;
    summary.total = tally.total;
    summary.passes = tally.passes;
    summary.failures = tally.failures;
    summary.first_failure = tally.first_failure;
    summary.wall_seconds = std::chrono::duration<double>(stop - start).count();
    summary.exit_code = tally.failures > 0 ? 1 : 0;

    diag << "summary: total=" << summary.total << " passes=" << summary.passes
         << " failures=" << summary.failures;
    if (!summary.first_failure.empty()) diag << " first_failure=[" << summary.first_failure << "]";
    diag << " wall=" << summary.wall_seconds << "s\n";
    return summary;
}

}  // namespace az
