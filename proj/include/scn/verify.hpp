#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scn::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full verification suite: normalization sweeps, Monte Carlo
// agreement, reduction/specialization identities, minimum-eigenvalue
// consistency, closed-form multi-integral oracles, MGF consistency,
// hard-edge asymptotics, in-probability limits, and CSV determinism.
// tol_scale multiplies every tolerance (1.0 = pinned defaults); results
// stream to `out` as one line per criterion when provided.
std::vector<CriterionResult> run_acceptance(double tol_scale, int threads,
                                            std::ostream* out = nullptr);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace scn::verify
