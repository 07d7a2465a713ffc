#pragma once

#include "tapkit/bipoly.hpp"
#include "tapkit/chebyshev.hpp"
#include "tapkit/intpoly.hpp"
#include "tapkit/knots.hpp"
#include "tapkit/mat2.hpp"

namespace tapkit {

// Off-diagonal factor of WA - BW: the (1,2) entry of the matrix equation
// for the non-abelian representation space. Only even powers of x appear.
BiPoly alpha_k(long k);

// lambda = tr W as a polynomial in (x, y).
BiPoly trace_w(long k);

// phi_{k,2n}(x,y) = S_{n-1}(lambda) alpha_k - S_{n-2}(lambda), the defining
// equation of the non-abelian representation space (the Riley polynomial).
// Raw formula value; the leading y-coefficient may be -1.
BiPoly riley_poly(long k, long n);

// phi(2,y), sign-normalized so the leading coefficient is +1.
IntPoly riley_parabolic(long k, long n);

struct RileyData {
    long k, n;
    BiPoly alpha;
    BiPoly lambda;
    BiPoly phi;
    IntPoly phi_parabolic;  // monic
};

RileyData riley_data(long k, long n);

// phi(2, y) for any KnotSpec, monic.
IntPoly riley_parabolic(const KnotSpec& spec);

// The symbolic representation matrices at x = 2 over Z[y]:
// A = [[1,1],[0,1]], B = [[1,0],[2-y,1]].
Mat2<IntPoly> parabolic_a_matrix();
Mat2<IntPoly> parabolic_b_matrix();

// rho(word) over Z[y] at x = 2; inverses use the adjugate (det = 1).
Mat2<IntPoly> word_matrix(const GroupWord& word);

// W^n A - B W^n computed literally as a symbolic matrix product. By the
// representation-space computation its diagonal vanishes, its (1,2) entry
// is the Riley polynomial and its (2,1) entry is (y-2) times that.
Mat2<IntPoly> riley_matrix_oracle(const GroupWord& word, long n);

// (1,2) entry of WA - BW for the 2-bridge word, monic of degree (p-1)/2.
IntPoly riley_two_bridge_parabolic(long p, long q);

struct Lemma31Result {
    IntPoly lhs;  // alpha^2 - alpha*lambda + 1 at x = 2
    IntPoly rhs;  // (y-2)^3 S_{m-1}^4 or (y-2)((y-2) S_m S_{m-1} + 1)^2
    bool equal;
};

Lemma31Result lemma31_check(long k);

}  // namespace tapkit
