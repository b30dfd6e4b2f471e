#pragma once

#include <string>

#include "leibniz/report.hpp"

namespace leibniz {

struct VerifyOptions {
    unsigned long seed = 1;
    /// When nonempty, only checks whose tag starts with this prefix run.
    std::string only;
};

/// Runs the full verification suite: ten check groups c01..c10 covering the
/// structure identities of every catalog table, the recorded cocycle-space
/// dimensions and bases, the coboundary tables, extension rebuilds, the
/// nilradical re-proof, orbit normalizations onto the catalog normal forms,
/// automorphism families, and the algebraic property suite. Statuses report
/// the computation faithfully; a recorded value that disagrees with the
/// computed one fails its check.
Report run_verification(const VerifyOptions& opts);

}  // namespace leibniz
