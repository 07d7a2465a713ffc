#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tapkit/common.hpp"
#include "tapkit/knots.hpp"
#include "tapkit/parabolic.hpp"
#include "tapkit/twisted.hpp"

namespace tapkit {

enum class AssertionClass { Asserted, ReportOnly };

struct RootRecord {
    Complex y;
    int span;
    Complex lead;
    Complex trail;
    bool monic;
    double phi_residual;
    double matrix_residual;
};

struct DetectionReport {
    KnotSpec spec;
    std::vector<RootRecord> roots;
    long detected_genus;      // (max span + 2) / 4
    bool detected_fibered;    // monic at every root
    AssertionClass assertion_class;
    long p = 0;               // |4mn-1| when k is even, else 0
    bool p_in_p2 = false;
};

// Fiberedness detection is proved for k odd, k = 2, and k = 2m with
// |4mn-1| in P2; everything else is reported but not asserted.
AssertionClass classify_assertion(const KnotSpec& spec);

// Full pipeline: parabolic roots, Wada invariant per root, genus from the
// span, fiberedness from monicity at all roots.
DetectionReport detect(const KnotSpec& spec, const Tolerances& tol = {});

enum class GcdLemma {
    RatioLambda,        // gcd(phi, (T_n(lambda)-2)/(lambda-2)) = 1, k even
    RatioY,             // gcd(phi, (T_m(y)-2)/(y-2)) = 1, k even
    RatioYOdd,          // same shape for k = 2m+1 (index m, or m+1 when n < 0)
    TwistMonic,         // gcd(phi, (T_n(lambda)-2)/(lambda-2) - 1) = 1, k = 2, |n| > 1
    OddMonic,           // gcd(phi, (T_m(y)-2)/(y-2) - 1) = 1, k = 2m+1, m > 1
};

struct GcdCheckResult {
    GcdLemma lemma;
    // Minimum distance between a root of phi(2,y) and a root of the
    // comparison polynomial; +inf when the comparison is constant.
    double min_distance;
};

// Numeric no-common-root checks for the lemmas applicable to the spec;
// a distance under the gate threshold is a theorem violation.
std::vector<GcdCheckResult> gcd_lemma_check(const KnotSpec& spec);

// The comparison polynomial each lemma pits against phi(2,y).
IntPoly gcd_comparison_poly(const KnotSpec& spec, GcdLemma lemma);

// deg of h(y) = ratio_n(lambda(y)) * ratio_m(y) is 2mn-(m+1), strictly
// below deg phi = 2mn-1; the degree gap behind the non-monicity result.
bool leadpoly_degree_check(long m, long n);

std::string to_string(GcdLemma lemma);

}  // namespace tapkit
