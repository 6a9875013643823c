#ifndef HASSE_CLI_COMMANDS_HPP
#define HASSE_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "output.hpp"

namespace hasse::cli {

enum class ScanMode { No3, Div3 };

struct ScanRow {
    std::int64_t d = 0;
    std::int64_t h_F = 0;
    bool three_divides_hF = false;
    bool in_M = false;
    bool hasse_witness = false;

    bool counterexample() const { return three_divides_hF && !in_M; }
    bool consistent() const { return !in_M || three_divides_hF; }
    Json to_json() const;
};

ScanRow scan_row(std::int64_t d);
std::vector<ScanRow> scan(std::int64_t lo, std::int64_t hi, ScanMode mode, unsigned jobs);

struct CheckResult {
    std::string claim;     // "Thm 7.3", "Thm 7.5", "Conj 7.4", "Conj 7.8", "Thm 7.6"
    bool theorem = false;  // unconditional theorem: a mismatch is a hard failure
    bool expected = false; // membership the claim predicts
    bool observed = false; // LikelyMember
    bool consistent = false;
};

struct ConjectureRow {
    QuadElem u;
    Int n, c;
    bool in_Sd_star = false, in_Rd = false, in_Pd = false;
    std::optional<Verdict> v_M, v_Mc, v_M3c, v_Mc_odd; // unset when the prime search ran out
    std::vector<CheckResult> checks;

    bool hard_failure() const;
    Json to_json() const;
};

/// Elements (x + y sqrt d)/den of S_d with |x|, |y| <= bound, y != 0.
std::vector<QuadElem> sd_elements(const Int &d, std::int64_t bound);

ConjectureRow conjecture_row(const QuadElem &u, std::int64_t h_d, std::size_t trials);

/// Parses "A..B" (inclusive).
std::pair<std::int64_t, std::int64_t> parse_range(const std::string &s);

/// Parses and executes a command line; returns the process exit code
/// (0 pass, 1 verification failure, 2 usage error).
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace hasse::cli

#endif
