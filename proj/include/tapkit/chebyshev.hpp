#pragma once

#include "tapkit/common.hpp"
#include "tapkit/intpoly.hpp"

namespace tapkit {

// Chebyshev-like sequences over any commutative ring: both satisfy
// f_{i+1} = z*f_i - f_{i-1} for all integers i, with bases
// S_0 = 1, S_1 = z and T_0 = 2, T_1 = z. Negative indices run the
// recurrence backwards (f_{i-1} = z*f_i - f_{i+1}), which keeps every
// value inside the ring.
template <class R>
R cheb_linear(long i, const R& z, R f0, R f1) {
    if (i >= 0) {
        R prev = std::move(f0);  // f_i
        R cur = std::move(f1);   // f_{i+1}
        for (long k = 0; k < i; ++k) {
            R next = z * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return prev;
    }
    R cur = std::move(f0);   // f_i
    R next = std::move(f1);  // f_{i+1}
    for (long k = 0; k > i; --k) {
        R prev = z * cur - next;
        next = std::move(cur);
        cur = std::move(prev);
    }
    return cur;
}

template <class R>
R cheb_s(long i, const R& z) {
    return cheb_linear(i, z, R(1), z);
}

template <class R>
R cheb_t(long i, const R& z) {
    return cheb_linear(i, z, R(2), z);
}

// (T_n(lambda) - 2) / (lambda - 2) as an exact element of Z[lambda].
// Degree n-1; its value at lambda = 2 is n^2.
inline IntPoly ratio_tn(long n) {
    if (n < 1) throw SpecError("ratio_tn requires n >= 1");
    const IntPoly lambda = IntPoly::variable();
    IntPoly numer = cheb_t(n, lambda) - IntPoly(2);
    IntPoly denom = lambda - IntPoly(2);
    return numer.div_exact(denom);
}

}  // namespace tapkit
