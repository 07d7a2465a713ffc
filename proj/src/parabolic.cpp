#include "tapkit/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_complex.hpp>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "tapkit/riley.hpp"

namespace tapkit {

namespace {

using LongComplex = std::complex<long double>;
using QuadFloat = boost::multiprecision::cpp_bin_float_50;
using QuadComplex = boost::multiprecision::cpp_complex_50;

LongComplex horner(const std::vector<long double>& coeffs, const LongComplex& z) {
    LongComplex acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

QuadComplex horner(const std::vector<QuadFloat>& coeffs, const QuadComplex& z) {
    QuadComplex acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

// Newton at 50-digit precision from an already-close start. Clustered
// roots leave the long-double iteration several digits short of the
// matrix-equation budget; a few high-precision steps close the gap down to
// the double-representation floor of the returned root.
LongComplex quad_polish(const std::vector<QuadFloat>& qc, const std::vector<QuadFloat>& qdc,
                        const LongComplex& start) {
    QuadComplex z(QuadFloat(static_cast<double>(start.real())),
                  QuadFloat(static_cast<double>(start.imag())));
    QuadComplex best = z;
    QuadFloat best_res = abs(horner(qc, z));
    for (int it = 0; it < 12; ++it) {
        const QuadComplex df = horner(qdc, z);
        if (abs(df) == 0) break;
        z -= horner(qc, z) / df;
        const QuadFloat res = abs(horner(qc, z));
        if (res < best_res) {
            best_res = res;
            best = z;
        } else {
            break;
        }
    }
    return LongComplex(best.real().convert_to<long double>(),
                       best.imag().convert_to<long double>());
}

}  // namespace

std::vector<Complex> poly_roots(const IntPoly& p, double residual_tol) {
    if (p.degree() < 1) throw SpecError("root solve requires a nonconstant polynomial");
    const long deg = p.degree();
    // Extended precision for evaluation: the clustered real roots of the
    // higher (k, |n|) polynomials stall double-precision Newton a few digits
    // short of the matrix-residual budget.
    std::vector<long double> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = p.coeffs()[i].convert_to<long double>();
    std::vector<long double> dc(deg);
    for (long i = 1; i <= deg; ++i) dc[i - 1] = static_cast<long double>(i) * c[i];

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (long i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (long i = 0; i < deg; ++i)
        companion(i, deg - 1) = -static_cast<double>(c[i] / c[deg]);
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigenvalue solver failed on companion matrix of " + p.to_string());

    const double max_coeff = p.max_abs_coeff();
    std::vector<QuadFloat> qc(p.coeffs().size());
    for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = QuadFloat(p.coeffs()[i]);
    std::vector<QuadFloat> qdc(deg);
    for (long i = 1; i <= deg; ++i) qdc[i - 1] = QuadFloat(i) * qc[i];

    std::vector<Complex> roots;
    roots.reserve(deg);
    for (long i = 0; i < deg; ++i) {
        LongComplex z(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
        // Newton polishing; near-multiple roots stall, so keep the best seen.
        LongComplex best = z;
        long double best_res = std::abs(horner(c, z));
        for (int it = 0; it < 60 && best_res > 1e-18L * max_coeff; ++it) {
            const LongComplex dp = horner(dc, z);
            if (std::abs(dp) == 0.0L) break;
            z -= horner(c, z) / dp;
            const long double res = std::abs(horner(c, z));
            if (res < best_res) {
                best_res = res;
                best = z;
            }
        }
        best = quad_polish(qc, qdc, best);
        const Complex rounded(static_cast<double>(best.real()),
                              static_cast<double>(best.imag()));
        const QuadComplex q_rounded(QuadFloat(rounded.real()), QuadFloat(rounded.imag()));
        const double res = abs(horner(qc, q_rounded)).convert_to<double>();
        if (res > residual_tol * max_coeff)
            throw NumericalError("root of " + p.to_string() +
                                 " failed to certify: relative residual " +
                                 std::to_string(res / max_coeff));
        roots.push_back(rounded);
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& u, const Complex& v) {
        return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
    });
    return roots;
}

double certified_residual(const IntPoly& p, const Complex& z) {
    std::vector<QuadFloat> qc(p.coeffs().size());
    for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = QuadFloat(p.coeffs()[i]);
    const QuadComplex qz(QuadFloat(z.real()), QuadFloat(z.imag()));
    return abs(horner(qc, qz)).convert_to<double>();
}

Mat2<Complex> numeric_a_matrix() {
    return Mat2<Complex>(Complex(1), Complex(1), Complex(0), Complex(1));
}

Mat2<Complex> numeric_b_matrix(const Complex& y) {
    return Mat2<Complex>(Complex(1), Complex(0), Complex(2.0) - y, Complex(1));
}

Mat2<Complex> numeric_word_matrix(const GroupWord& word, const Complex& y) {
    const Mat2<Complex> a = numeric_a_matrix();
    const Mat2<Complex> b = numeric_b_matrix(y);
    Mat2<Complex> acc = Mat2<Complex>::identity();
    for (const auto& s : word.syllables())
        acc = acc * (s.gen == 'a' ? a : b).pow(s.exp);
    return acc;
}

double matrix_residual(const KnotSpec& spec, const Complex& y) {
    const long n = spec.is_double_twist() ? spec.as_double_twist().n : 1;
    const Mat2<Complex> wn = numeric_word_matrix(spec.word(), y).pow(n);
    const Mat2<Complex> a = numeric_a_matrix();
    const Mat2<Complex> b = numeric_b_matrix(y);
    return (wn * a - b * wn).max_abs();
}

std::vector<ParabolicRep> solve_parabolic(const KnotSpec& spec, const Tolerances& tol) {
    const IntPoly phi = riley_parabolic(spec);
    if (phi.degree() < 1)
        throw SpecError(spec.name() + " has constant phi(2,y): no parabolic representations "
                        "(trivial knot)");
    const std::vector<Complex> raw = poly_roots(phi, tol.phi_tol);
    const double max_coeff = phi.max_abs_coeff();

    // Cluster roots closer than the merge distance; keep the representative
    // with the smallest residual and count multiplicity.
    std::vector<ParabolicRep> reps;
    for (const Complex& z : raw) {
        bool merged = false;
        for (auto& r : reps) {
            if (std::abs(r.y - z) < kRootClusterDistance) {
                ++r.multiplicity;
                merged = true;
                break;
            }
        }
        if (merged) continue;
        ParabolicRep rep;
        rep.y = z;
        reps.push_back(rep);
    }
    for (auto& rep : reps) {
        rep.a = numeric_a_matrix();
        rep.b = numeric_b_matrix(rep.y);
        rep.phi_residual = certified_residual(phi, rep.y);
        rep.matrix_residual = matrix_residual(spec, rep.y);
        if (rep.phi_residual > tol.phi_tol * max_coeff)
            throw NumericalError(spec.name() + ": phi residual " +
                                 std::to_string(rep.phi_residual) + " above tolerance");
        if (rep.matrix_residual > tol.matrix_tol)
            throw NumericalError(spec.name() + ": matrix residual " +
                                 std::to_string(rep.matrix_residual) + " above tolerance");
    }
    // Sort by (Re, Im), grouping real parts that agree up to rounding so
    // conjugate pairs land adjacently with the lower half-plane root first.
    std::sort(reps.begin(), reps.end(), [](const ParabolicRep& u, const ParabolicRep& v) {
        return u.y.real() < v.y.real();
    });
    for (std::size_t i = 0; i < reps.size();) {
        std::size_t j = i + 1;
        while (j < reps.size() &&
               std::abs(reps[j].y.real() - reps[j - 1].y.real()) <
                   1e-9 * (1.0 + std::abs(reps[i].y.real())))
            ++j;
        std::sort(reps.begin() + static_cast<long>(i), reps.begin() + static_cast<long>(j),
                  [](const ParabolicRep& u, const ParabolicRep& v) {
                      return u.y.imag() < v.y.imag();
                  });
        i = j;
    }
    return reps;
}

RealRootGateReport real_root_gate(const std::vector<ParabolicRep>& reps) {
    RealRootGateReport report{std::numeric_limits<double>::infinity(), 0};
    for (const auto& rep : reps) {
        if (std::abs(rep.y.imag()) >= kRealRootImagTol) continue;
        ++report.real_roots;
        report.min_margin = std::min(report.min_margin, rep.y.real() - 2.0);
        if (rep.y.real() <= 2.0)
            throw TheoremViolation("real parabolic root y = " + std::to_string(rep.y.real()) +
                                   " <= 2 contradicts the y > 2 statement");
    }
    return report;
}

}  // namespace tapkit
