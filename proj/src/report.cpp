#include "leibniz/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace leibniz {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

void Check::metric(const std::string& key, const std::string& value) {
    metrics.emplace_back(key, value);
}

void Check::metric(const std::string& key, long long value) {
    metrics.emplace_back(key, std::to_string(value));
}

namespace {

int count_status(const Report& r, CheckStatus s) {
    return static_cast<int>(
        std::count_if(r.checks.begin(), r.checks.end(),
                      [s](const Check& c) { return c.status == s; }));
}

}  // namespace

int Report::passed() const { return count_status(*this, CheckStatus::pass); }
int Report::failed() const { return count_status(*this, CheckStatus::fail); }
int Report::inconclusive() const { return count_status(*this, CheckStatus::inconclusive); }

void sort_checks(Report& r) {
    std::stable_sort(r.checks.begin(), r.checks.end(),
                     [](const Check& a, const Check& b) { return a.tag < b.tag; });
}

std::string render_human(const Report& r) {
    std::ostringstream out;
    for (const Check& c : r.checks) {
        const char* label = c.status == CheckStatus::pass   ? "PASS"
                            : c.status == CheckStatus::fail ? "FAIL"
                                                            : "INCONCLUSIVE";
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.3fs", c.seconds);
        out << "[" << label << "] " << c.tag << " (" << timing << ")";
        if (!c.detail.empty()) out << " " << c.detail;
        for (const auto& [key, value] : c.metrics) out << " " << key << "=" << value;
        out << "\n";
    }
    out << "checks: passed=" << r.passed() << " failed=" << r.failed()
        << " inconclusive=" << r.inconclusive()
        << " total=" << r.checks.size() << " seed=" << r.seed << "\n";
    return out.str();
}

std::string render_machine(const Report& r) {
    std::ostringstream out;
    out << "command=" << r.command << "\n";
    out << "seed=" << r.seed << "\n";
    for (const Check& c : r.checks) {
        out << "check." << c.tag << ".status=" << to_string(c.status) << "\n";
        if (!c.detail.empty()) out << "check." << c.tag << ".detail=" << c.detail << "\n";
        for (const auto& [key, value] : c.metrics)
            out << "check." << c.tag << "." << key << "=" << value << "\n";
    }
    out << "summary.pass=" << r.passed() << "\n";
    out << "summary.fail=" << r.failed() << "\n";
    out << "summary.inconclusive=" << r.inconclusive() << "\n";
    out << "summary.total=" << r.checks.size() << "\n";
    return out.str();
}

}  // namespace leibniz
