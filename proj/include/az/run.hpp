/**
 * @file run.hpp
 * @brief Execution layer behind the command-line tool: validated run
 *        configurations, report emission (text / line-delimited JSON / CSV)
 *        and the exit-code contract (0 all pass, 1 failures, 2 usage).
 */
#ifndef AZ_RUN_HPP
#define AZ_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "az/checks.hpp"
#include "az/sequences.hpp"

namespace az {

enum class Format { text, json, csv };

struct RunConfig {
    enum class Cmd { seq, verify, identity, series, convergence_report };
    Cmd cmd = Cmd::verify;

    std::vector<CongruenceTarget> targets;   // verify
    std::vector<IdentityName> names;         // identity
    long prime_lo = 5;
    long prime_hi = 499;
    long max_n = 50;                         // identity: n ranges over [0, max_n]
    SequenceKind kind = SequenceKind::gamma; // seq
    long seq_max = 10;                       // seq: n ranges over [0, seq_max]
    long terms = 120;                        // series partial-sum length / report max N
    long digits = 60;                        // working decimal precision
    Format format = Format::text;
    std::string out_path;                    // empty = write to the given stream
    int jobs = 1;
    bool inject_failure = false;             // self-test: perturbs gamma_1 by +1
};

struct RunSummary {
    long total = 0;
    long passes = 0;
    long failures = 0;
    std::string first_failure;               // empty iff failures == 0
    double wall_seconds = 0.0;
    int exit_code = 0;                       // 0 = all pass, 1 = failures
};

/// Executes the configured run. Records go to `out` (or to cfg.out_path when
/// set); the human summary goes to `diag`. Records are emitted in a
/// deterministic order independent of cfg.jobs. Throws std::invalid_argument
/// for configuration errors and std::runtime_error for I/O failures; callers
/// map both to exit code 2.
RunSummary run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

}  // namespace az

#endif  // AZ_RUN_HPP
