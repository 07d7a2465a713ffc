#pragma once

#include <vector>

#include "tapkit/common.hpp"
#include "tapkit/intpoly.hpp"
#include "tapkit/knots.hpp"
#include "tapkit/mat2.hpp"

namespace tapkit {

// A parabolic representation: rho(a) = [[1,1],[0,1]], rho(b) = [[1,0],[2-y,1]]
// for y a root of phi(2,y). Both residuals are checked at construction time.
struct ParabolicRep {
    Complex y;
    Mat2<Complex> a;
    Mat2<Complex> b;
    double phi_residual;     // |phi(2, y)|
    double matrix_residual;  // max entry of W^n A - B W^n
    int multiplicity = 1;    // > 1 when roots were merged by clustering
};

Mat2<Complex> numeric_a_matrix();
Mat2<Complex> numeric_b_matrix(const Complex& y);
Mat2<Complex> numeric_word_matrix(const GroupWord& word, const Complex& y);

// All complex roots of a squarefree-or-not integer polynomial, certified to
// |p(root)| <= residual_tol * max|coeff|. Companion-matrix eigenvalues with
// Newton polishing. Throws NumericalError when a root fails to certify.
std::vector<Complex> poly_roots(const IntPoly& p, double residual_tol = 1e-8);

// |p(z)| evaluated in extended precision. Plain double Horner has a noise
// floor of eps * sum |c_i||z|^i, which drowns the true residual for the
// larger polynomials; this measures what the returned root actually does.
double certified_residual(const IntPoly& p, const Complex& z);

// Roots of phi_spec(2, y) packaged with representation matrices and
// residuals, deduplicated by clustering and sorted by (Re, Im).
std::vector<ParabolicRep> solve_parabolic(const KnotSpec& spec, const Tolerances& tol = {});

// Max entry magnitude of W^n A - B W^n at the given y.
double matrix_residual(const KnotSpec& spec, const Complex& y);

struct RealRootGateReport {
    double min_margin;  // min over real roots of (Re y - 2); +inf when none
    long real_roots;
};

// Every real root of phi(2,y) satisfies y > 2. A violation is a bug, not
// an input problem, since the statement is proved for all J(k,2n).
RealRootGateReport real_root_gate(const std::vector<ParabolicRep>& reps);

}  // namespace tapkit
