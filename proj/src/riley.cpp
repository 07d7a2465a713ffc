#include "tapkit/riley.hpp"

namespace tapkit {

namespace {

// y + 2 - x^2, the factor shared by alpha_k and tr W.
BiPoly defect_term() {
    BiPoly p = BiPoly::var_y() + BiPoly(2);
    p -= BiPoly::var_x() * BiPoly::var_x();
    return p;
}

}  // namespace

BiPoly alpha_k(long k) {
    if (k <= 0) throw SpecError("alpha_k requires k >= 1");
    const long m = k / 2;
    const BiPoly y = BiPoly::var_y();
    if (k % 2 == 0) {
        const BiPoly sm1 = cheb_s(m - 1, y);
        const BiPoly sm2 = cheb_s(m - 2, y);
        return BiPoly(1) - defect_term() * sm1 * (sm1 - sm2);
    }
    const BiPoly sm = cheb_s(m, y);
    const BiPoly sm1 = cheb_s(m - 1, y);
    return BiPoly(1) + defect_term() * sm1 * (sm - sm1);
}

BiPoly trace_w(long k) {
    if (k <= 0) throw SpecError("trace_w requires k >= 1");
    const long m = k / 2;
    const BiPoly y = BiPoly::var_y();
    const BiPoly y_minus_2 = y - BiPoly(2);
    if (k % 2 == 0) {
        const BiPoly sm1 = cheb_s(m - 1, y);
        return BiPoly(2) + y_minus_2 * defect_term() * sm1 * sm1;
    }
    const BiPoly sm = cheb_s(m, y);
    const BiPoly sm1 = cheb_s(m - 1, y);
    const BiPoly x2 = BiPoly::var_x() * BiPoly::var_x();
    return x2 - y - y_minus_2 * defect_term() * sm * sm1;
}

BiPoly riley_poly(long k, long n) {
    KnotSpec::double_twist(k, n);  // validate
    const BiPoly lambda = trace_w(k);
    return cheb_s(n - 1, lambda) * alpha_k(k) - cheb_s(n - 2, lambda);
}

IntPoly riley_parabolic(long k, long n) {
    return riley_poly(k, n).at_x(2).monic_normalized();
}

RileyData riley_data(long k, long n) {
    RileyData d;
    d.k = k;
    d.n = n;
    d.alpha = alpha_k(k);
    d.lambda = trace_w(k);
    d.phi = cheb_s(n - 1, d.lambda) * d.alpha - cheb_s(n - 2, d.lambda);
    d.phi_parabolic = d.phi.at_x(2).monic_normalized();
    return d;
}

IntPoly riley_parabolic(const KnotSpec& spec) {
    if (spec.is_double_twist())
        return riley_parabolic(spec.as_double_twist().k, spec.as_double_twist().n);
    return riley_two_bridge_parabolic(spec.as_two_bridge().p, spec.as_two_bridge().q);
}

Mat2<IntPoly> parabolic_a_matrix() {
    return Mat2<IntPoly>(IntPoly(1), IntPoly(1), IntPoly(0), IntPoly(1));
}

Mat2<IntPoly> parabolic_b_matrix() {
    const IntPoly two_minus_y = IntPoly(2) - IntPoly::variable();
    return Mat2<IntPoly>(IntPoly(1), IntPoly(0), two_minus_y, IntPoly(1));
}

Mat2<IntPoly> word_matrix(const GroupWord& word) {
    const Mat2<IntPoly> a = parabolic_a_matrix();
    const Mat2<IntPoly> b = parabolic_b_matrix();
    Mat2<IntPoly> acc = Mat2<IntPoly>::identity();
    for (const auto& s : word.syllables())
        acc = acc * (s.gen == 'a' ? a : b).pow(s.exp);
    return acc;
}

Mat2<IntPoly> riley_matrix_oracle(const GroupWord& word, long n) {
    const Mat2<IntPoly> a = parabolic_a_matrix();
    const Mat2<IntPoly> b = parabolic_b_matrix();
    const Mat2<IntPoly> wn = word_matrix(word).pow(n);
    return wn * a - b * wn;
}

IntPoly riley_two_bridge_parabolic(long p, long q) {
    const Mat2<IntPoly> eq = riley_matrix_oracle(two_bridge_word(p, q), 1);
    const IntPoly phi = eq.b.monic_normalized();
    if (phi.degree() != (p - 1) / 2)
        throw TheoremViolation("two-bridge Riley polynomial has degree " +
                               std::to_string(phi.degree()) + ", expected " +
                               std::to_string((p - 1) / 2));
    return phi;
}

Lemma31Result lemma31_check(long k) {
    if (k <= 0) throw SpecError("lemma31_check requires k >= 1");
    const long m = k / 2;
    const IntPoly alpha = alpha_k(k).at_x(2);
    const IntPoly lambda = trace_w(k).at_x(2);
    const IntPoly y = IntPoly::variable();
    const IntPoly y_minus_2 = y - IntPoly(2);

    Lemma31Result r;
    r.lhs = alpha * alpha - alpha * lambda + IntPoly(1);
    if (k % 2 == 0) {
        const IntPoly sm1 = cheb_s(m - 1, y);
        r.rhs = y_minus_2 * y_minus_2 * y_minus_2 * sm1 * sm1 * sm1 * sm1;
    } else {
        const IntPoly inner = y_minus_2 * cheb_s(m, y) * cheb_s(m - 1, y) + IntPoly(1);
        r.rhs = y_minus_2 * inner * inner;
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace tapkit
