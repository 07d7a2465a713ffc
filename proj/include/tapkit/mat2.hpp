#pragma once

#include "tapkit/common.hpp"
#include "tapkit/laurent.hpp"

namespace tapkit {

// 2x2 matrix over a commutative ring R. R must be constructible from int
// and support +, -, *. Everything lands in SL2, so the inverse is the
// adjugate and stays inside the entry ring.
template <class R>
struct Mat2 {
    R a{0}, b{0}, c{0}, d{0};

    Mat2() = default;
    Mat2(R a_, R b_, R c_, R d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return Mat2(R(1), R(0), R(0), R(1)); }

    R det() const { return a * d - b * c; }
    R trace() const { return a + d; }

    // Inverse of a determinant-one matrix.
    Mat2 adjugate() const { return Mat2(d, -b, -c, a); }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return Mat2(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                    m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
    }
    friend Mat2 operator+(const Mat2& m, const Mat2& n) {
        return Mat2(m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d);
    }
    friend Mat2 operator-(const Mat2& m, const Mat2& n) {
        return Mat2(m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d);
    }
    friend Mat2 operator*(const R& s, const Mat2& m) {
        return Mat2(s * m.a, s * m.b, s * m.c, s * m.d);
    }

    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    // M^e for det-one matrices; negative exponents go through the adjugate.
    Mat2 pow(long e) const {
        Mat2 base = e >= 0 ? *this : adjugate();
        unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        Mat2 acc = identity();
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    double max_abs() const;
};

template <>
inline double Mat2<Complex>::max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
}

inline LaurentPoly laurent_det2(const Mat2<LaurentPoly>& m) { return m.det(); }

}  // namespace tapkit
