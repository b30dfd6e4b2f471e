#pragma once

#include <string>
#include <utility>
#include <vector>

namespace leibniz {

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

/// One verdict of the verification harness, addressed by a sortable tag.
struct Check {
    std::string tag;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // one-line explanation, filled on fail/inconclusive
    std::vector<std::pair<std::string, std::string>> metrics;  // exact values
    double seconds = 0.0;

    void metric(const std::string& key, const std::string& value);
    void metric(const std::string& key, long long value);
};

struct Report {
    std::string command;
    unsigned long seed = 0;
    std::vector<Check> checks;

    int passed() const;
    int failed() const;
    int inconclusive() const;
    /// True iff no check failed; inconclusive checks never affect this.
    bool ok() const { return failed() == 0; }
};

/// Deterministic order: ascending by tag.
void sort_checks(Report& r);

/// Terminal rendering: one status line per check, then a summary line.
std::string render_human(const Report& r);

/// Line-oriented key=value rendering:
///   command=..., seed=..., check.<tag>.status=..., check.<tag>.<metric>=...,
///   summary.pass=..., summary.fail=..., summary.inconclusive=...,
///   summary.total=...
std::string render_machine(const Report& r);

}  // namespace leibniz
