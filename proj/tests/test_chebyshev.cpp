#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tapkit/chebyshev.hpp"
#include "tapkit/intpoly.hpp"
#include "tapkit/mat2.hpp"

using namespace tapkit;

TEST_CASE("cheb_s base cases and examples") {
    const IntPoly z = IntPoly::variable();
    CHECK(cheb_s(0, z) == IntPoly(1));
    CHECK(cheb_s(1, z) == z);
    CHECK(cheb_s(2, z) == z * z - IntPoly(1));
    CHECK(cheb_s(-1, z).is_zero());
    CHECK(cheb_s(-2, z) == IntPoly(-1));
    CHECK(cheb_s(5, BigInt(2)) == 6);  // S_i(2) = i + 1
}

TEST_CASE("cheb_t base cases and symmetry") {
    const IntPoly z = IntPoly::variable();
    CHECK(cheb_t(0, z) == IntPoly(2));
    CHECK(cheb_t(1, z) == z);
    CHECK(cheb_t(2, z) == z * z - IntPoly(2));
    CHECK(cheb_t(-1, z) == z);
    for (long i = 0; i <= 8; ++i) CHECK(cheb_t(-i, z) == cheb_t(i, z));
}

TEST_CASE("recurrence holds in both directions") {
    const IntPoly z = IntPoly::variable();
    for (long i = -9; i <= 9; ++i) {
        CHECK(cheb_s(i + 1, z) == z * cheb_s(i, z) - cheb_s(i - 1, z));
        CHECK(cheb_t(i + 1, z) == z * cheb_t(i, z) - cheb_t(i - 1, z));
    }
}

TEST_CASE("Chebyshev identity S_i^2 - z S_i S_{i-1} + S_{i-1}^2 = 1") {
    const IntPoly z = IntPoly::variable();
    for (long i = -10; i <= 10; ++i) {
        const IntPoly si = cheb_s(i, z);
        const IntPoly sm = cheb_s(i - 1, z);
        CHECK(si * si - z * si * sm + sm * sm == IntPoly(1));
    }
}

TEST_CASE("SL2 powers expand through the S sequence") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto rc = [&] { return Complex(dist(rng), dist(rng)); };
    for (int trial = 0; trial < 20; ++trial) {
        Complex a = rc();
        while (std::abs(a) < 0.2) a = rc();
        const Complex b = rc(), c = rc();
        const Mat2<Complex> m(a, b, c, (Complex(1.0) + b * c) / a);
        const Complex tr = m.trace();
        for (long i = -6; i <= 6; ++i) {
            const Mat2<Complex> expansion =
                cheb_s(i - 1, tr) * m - cheb_s(i - 2, tr) * Mat2<Complex>::identity();
            CHECK((m.pow(i) - expansion).max_abs() <= 1e-9);
        }
    }
}

TEST_CASE("ratio_tn small values") {
    const IntPoly lambda = IntPoly::variable();
    CHECK(ratio_tn(1) == IntPoly(1));
    CHECK(ratio_tn(2) == lambda + IntPoly(2));
    CHECK(ratio_tn(3).eval_int(2) == 9);
    CHECK_THROWS_AS(ratio_tn(0), SpecError);
}

TEST_CASE("ratio_tn reconstructs T_n exactly") {
    const IntPoly lambda = IntPoly::variable();
    for (long n = 1; n <= 30; ++n) {
        const IntPoly r = ratio_tn(n);
        CHECK(r.degree() == n - 1);
        CHECK((lambda - IntPoly(2)) * r + IntPoly(2) == cheb_t(n, lambda));
        CHECK(r.eval_int(2) == n * n);
    }
}

TEST_CASE("ratio_tn matches the squared geometric sum on [-2,2]") {
    for (int step = 0; step <= 40; ++step) {
        const double lambda0 = -2.0 + 0.1 * step;
        const Complex beta(lambda0 / 2.0,
                           std::sqrt(std::max(0.0, 1.0 - lambda0 * lambda0 / 4.0)));
        for (long n = 1; n <= 8; ++n) {
            Complex sum = 0, power = 1;
            for (long j = 0; j < n; ++j) {
                sum += power;
                power *= beta;
            }
            const Complex got = ratio_tn(n).eval(Complex(lambda0, 0.0));
            CHECK(std::abs(got - Complex(std::norm(sum))) <= 1e-9);
        }
    }
}
