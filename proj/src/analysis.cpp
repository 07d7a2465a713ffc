#include "tapkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "tapkit/arith.hpp"
#include "tapkit/chebyshev.hpp"
#include "tapkit/riley.hpp"

namespace tapkit {

AssertionClass classify_assertion(const KnotSpec& spec) {
    if (!spec.is_double_twist()) return AssertionClass::ReportOnly;
    const auto& dt = spec.as_double_twist();
    if (dt.k % 2 == 1 || dt.k == 2) return AssertionClass::Asserted;
    const long p = std::labs(4 * (dt.k / 2) * dt.n - 1);
    return in_p2_or_false(p) ? AssertionClass::Asserted : AssertionClass::ReportOnly;
}

DetectionReport detect(const KnotSpec& spec, const Tolerances& tol) {
    DetectionReport report{spec, {}, 0, true, AssertionClass::ReportOnly};
    const std::vector<ParabolicRep> reps = solve_parabolic(spec, tol);
    int max_span = 0;
    for (const auto& rep : reps) {
        const TwistedAlex tap = wada_polynomial(spec, rep, tol);
        RootRecord rec;
        rec.y = rep.y;
        rec.span = tap.span;
        rec.lead = tap.lead;
        rec.trail = tap.trail;
        rec.monic = monicity(tap, tol.monic_tol);
        rec.phi_residual = rep.phi_residual;
        rec.matrix_residual = rep.matrix_residual;
        report.roots.push_back(rec);
        max_span = std::max(max_span, tap.span);
        report.detected_fibered = report.detected_fibered && rec.monic;
    }
    if ((max_span + 2) % 4 != 0)
        throw NumericalError(spec.name() + ": span " + std::to_string(max_span) +
                             " is not of the form 4g-2");
    report.detected_genus = (max_span + 2) / 4;
    if (spec.is_double_twist()) {
        report.assertion_class = classify_assertion(spec);
        const auto& dt = spec.as_double_twist();
        if (dt.k % 2 == 0) {
            report.p = std::labs(4 * (dt.k / 2) * dt.n - 1);
            report.p_in_p2 = in_p2_or_false(report.p);
        }
    }
    return report;
}

IntPoly gcd_comparison_poly(const KnotSpec& spec, GcdLemma lemma) {
    const auto& dt = spec.as_double_twist();
    const long m = dt.k / 2;
    const long l = std::labs(dt.n);
    const IntPoly lambda_y = trace_w(dt.k).at_x(2);
    switch (lemma) {
        case GcdLemma::RatioLambda:
            return ratio_tn(l).compose(lambda_y);
        case GcdLemma::RatioY:
            return ratio_tn(m);
        case GcdLemma::RatioYOdd:
            return ratio_tn(dt.n > 0 ? m : m + 1);
        case GcdLemma::TwistMonic:
            return ratio_tn(l).compose(lambda_y) - IntPoly(1);
        case GcdLemma::OddMonic:
            return ratio_tn(dt.n > 0 ? m : m + 1) - IntPoly(1);
    }
    throw SpecError("unknown lemma");
}

namespace {

double min_root_distance(const IntPoly& phi, const IntPoly& comparison) {
    if (comparison.degree() < 1) return std::numeric_limits<double>::infinity();
    const std::vector<Complex> phi_roots = poly_roots(phi);
    // The comparison polynomials need no residual certificate; they only
    // locate the zero set, so accept what Newton polishing gives.
    const std::vector<Complex> cmp_roots = poly_roots(comparison, 1e-6);
    double min_dist = std::numeric_limits<double>::infinity();
    for (const Complex& u : phi_roots)
        for (const Complex& v : cmp_roots) min_dist = std::min(min_dist, std::abs(u - v));
    return min_dist;
}

}  // namespace

std::vector<GcdCheckResult> gcd_lemma_check(const KnotSpec& spec) {
    if (!spec.is_double_twist())
        throw SpecError("gcd lemma checks cover J(k,2n) only");
    const auto& dt = spec.as_double_twist();
    const IntPoly phi = riley_parabolic(spec);
    if (phi.degree() < 1)
        throw SpecError(spec.name() + " has constant phi(2,y)");

    std::vector<GcdLemma> applicable;
    if (dt.k % 2 == 0) {
        applicable.push_back(GcdLemma::RatioLambda);
        applicable.push_back(GcdLemma::RatioY);
        if (dt.k == 2 && std::labs(dt.n) > 1) applicable.push_back(GcdLemma::TwistMonic);
    } else {
        if (dt.k > 1) applicable.push_back(GcdLemma::RatioYOdd);
        if (dt.k / 2 > 1) applicable.push_back(GcdLemma::OddMonic);
    }

    std::vector<GcdCheckResult> results;
    for (GcdLemma lemma : applicable) {
        const double dist = min_root_distance(phi, gcd_comparison_poly(spec, lemma));
        if (dist <= kGcdMinRootDistance)
            throw TheoremViolation(spec.name() + " " + to_string(lemma) +
                                   ": common root within " + std::to_string(dist));
        results.push_back({lemma, dist});
    }
    return results;
}

bool leadpoly_degree_check(long m, long n) {
    if (m <= 1 || n <= 0) throw SpecError("leadpoly degree check needs m > 1, n > 0");
    const IntPoly lambda_y = trace_w(2 * m).at_x(2);
    const IntPoly h = ratio_tn(n).compose(lambda_y) * ratio_tn(m);
    const IntPoly phi = riley_parabolic(2 * m, n);
    return h.degree() == 2 * m * n - (m + 1) && h.degree() < phi.degree();
}

std::string to_string(GcdLemma lemma) {
    switch (lemma) {
        case GcdLemma::RatioLambda: return "ratio-lambda";
        case GcdLemma::RatioY: return "ratio-y";
        case GcdLemma::RatioYOdd: return "ratio-y-odd";
        case GcdLemma::TwistMonic: return "twist-monic";
        case GcdLemma::OddMonic: return "odd-monic";
    }
    return "?";
}

}  // namespace tapkit
