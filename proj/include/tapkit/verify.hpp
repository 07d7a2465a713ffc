#pragma once

#include <string>
#include <vector>

#include "tapkit/analysis.hpp"
#include "tapkit/common.hpp"
#include "tapkit/knots.hpp"

namespace tapkit {

struct VerifyOptions {
    long kmax = 8;
    long nmax = 4;
    long pmax = 200;
    unsigned threads = 0;  // 0 = hardware concurrency
    Tolerances tol;
};

struct CheckResult {
    std::string name;
    bool passed;
    bool asserted;  // report-only entries inform but never fail the suite
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    double grid_seconds = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.asserted && !c.passed) return false;
        return true;
    }
};

// Everything computed once per grid spec; the individual checks consume
// these rows so the expensive pipeline runs a single time.
struct SpecOutcome {
    KnotSpec spec;
    bool trivial = false;  // constant phi: no parabolic representations
    long phi_degree = 0;
    double phi_max_coeff = 0;
    std::vector<ParabolicRep> reps;
    std::vector<TwistedAlex> taps;
    std::vector<ExtremePrediction> predictions;
    std::vector<GcdCheckResult> gcd;
    long detected_genus = 0;
    bool detected_fibered = false;
    AssertionClass assertion = AssertionClass::ReportOnly;
    std::string error;  // nonempty when the pipeline threw
};

// All J(k,2n) with 1 <= k <= kmax, 1 <= |n| <= nmax, deterministic order.
std::vector<KnotSpec> grid_specs(long kmax, long nmax);

std::vector<SpecOutcome> build_grid(const VerifyOptions& opt);

// Runs every module invariant and returns one line per check.
VerifyReport run_verification(const VerifyOptions& opt);

}  // namespace tapkit
