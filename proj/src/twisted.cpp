#include "tapkit/twisted.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "tapkit/chebyshev.hpp"
#include "tapkit/riley.hpp"

namespace tapkit {

void GroupRingElt::add(const GroupWord& w, long c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElt GroupRingElt::operator-() const {
    GroupRingElt r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, -c);
    return *this;
}

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    GroupRingElt out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
    return out;
}

std::string GroupRingElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long a = std::labs(c);
        if (a != 1) os << a << "*";
        os << w.to_string();
    }
    return os.str();
}

GroupRingElt fox_derivative(const GroupWord& word, char gen) {
    GroupRingElt result;
    GroupWord prefix;
    for (const auto& s : word.syllables()) {
        if (s.gen != gen) {
            prefix = prefix * GroupWord::gen(s.gen, s.exp);
            continue;
        }
        // d(g^e)/dg = 1 + g + ... + g^{e-1} for e > 0,
        //           = -(g^-1 + ... + g^e) for e < 0.
        if (s.exp > 0) {
            for (long j = 0; j < s.exp; ++j) result.add(prefix * GroupWord::gen(gen, j), 1);
        } else {
            for (long j = -1; j >= s.exp; --j) result.add(prefix * GroupWord::gen(gen, j), -1);
        }
        prefix = prefix * GroupWord::gen(s.gen, s.exp);
    }
    return result;
}

Mat2<LaurentPoly> phi_map(const GroupRingElt& elt, const Mat2<Complex>& a,
                          const Mat2<Complex>& b) {
    Mat2<LaurentPoly> out;
    for (const auto& [word, coeff] : elt.terms()) {
        Mat2<Complex> rho = Mat2<Complex>::identity();
        for (const auto& s : word.syllables())
            rho = rho * (s.gen == 'a' ? a : b).pow(s.exp);
        const int e = static_cast<int>(word.total_exponent());
        const Complex c(static_cast<double>(coeff));
        out.a += LaurentPoly::monomial(e, c * rho.a);
        out.b += LaurentPoly::monomial(e, c * rho.b);
        out.c += LaurentPoly::monomial(e, c * rho.c);
        out.d += LaurentPoly::monomial(e, c * rho.d);
    }
    return out;
}

TwistedAlex make_twisted_alex(const LaurentPoly& raw) {
    if (raw.is_zero()) throw NumericalError("twisted Alexander polynomial vanished");
    TwistedAlex tap;
    tap.poly = raw.normalized_to_zero();
    tap.span = tap.poly.hi();
    tap.trail = tap.poly.coeff(0);
    tap.lead = tap.poly.coeff(tap.span);
    return tap;
}

TwistedAlex wada_polynomial(const KnotSpec& spec, const ParabolicRep& rep,
                            const Tolerances& tol) {
    if (rep.matrix_residual > tol.matrix_tol)
        throw NumericalError(spec.name() + ": representation residual " +
                             std::to_string(rep.matrix_residual) + " out of range");
    const GroupRingElt dr_da = fox_derivative(spec.relator(), 'a');
    const LaurentPoly numer = laurent_det2(phi_map(dr_da, rep.a, rep.b));
    const GroupRingElt one_minus_b =
        GroupRingElt(1) - GroupRingElt(GroupWord::gen('b'));
    const LaurentPoly denom = laurent_det2(phi_map(one_minus_b, rep.a, rep.b));
    return make_twisted_alex(laurent_div_exact(numer, denom));
}

ExtremePrediction closed_form_extremes(const KnotSpec& spec, const Complex& y) {
    if (!spec.is_double_twist())
        throw SpecError("closed-form extreme terms cover J(k,2n) only");
    const long k = spec.as_double_twist().k;
    const long n = spec.as_double_twist().n;
    const long m = k / 2;
    const long l = std::labs(n);
    const Complex lambda = trace_w(k).eval(Complex(2.0), y);

    ExtremePrediction p;
    if (k % 2 == 0) {
        // det Phi(dr/da) runs t^-2..t^2; after division the span is 2.
        const Complex value = ratio_tn(l).eval(lambda) * ratio_tn(m).eval(y);
        p.lead = p.trail = value;
        p.span = 2;
        return p;
    }
    if (m == 0) {
        if (n > 0) {
            if (n == 1) throw SpecError("J(1,2) is the trivial knot");
            p.lead = p.trail = Complex(1.0);  // torus knot extremes t^{4n-4} and t^2
            p.span = static_cast<int>(4 * n - 6);
            return p;
        }
        p.lead = p.trail = Complex(1.0);
        p.span = static_cast<int>(4 * l - 2);
        return p;
    }
    if (n > 0) {
        p.lead = p.trail = ratio_tn(m).eval(y);
        p.span = static_cast<int>(4 * n - 2);
        return p;
    }
    // k = 2m+1, n < 0: both extreme determinants are sums of powers of
    // AB^-1 resp. BA^-1, matrices sharing trace y, so both evaluate to the
    // same ratio polynomial at index m+1.
    p.lead = p.trail = ratio_tn(m + 1).eval(y);
    p.span = static_cast<int>(4 * l - 2);
    return p;
}

bool monicity(const TwistedAlex& tap, double tol) {
    return std::abs(tap.lead - Complex(1.0)) <= tol && std::abs(tap.trail - Complex(1.0)) <= tol;
}

double reciprocity_check(const TwistedAlex& tap) {
    double defect = 0;
    for (int i = 0; i <= tap.span; ++i)
        defect = std::max(defect, std::abs(tap.poly.coeff(i) - tap.poly.coeff(tap.span - i)));
    return defect;
}

namespace {

// Sum g + g^2 + ... + g^count as a group ring element.
GroupRingElt geometric_sum(const GroupWord& g, long count) {
    GroupRingElt out;
    GroupWord acc;
    for (long i = 1; i <= count; ++i) {
        acc = acc * g;
        out.add(acc, 1);
    }
    return out;
}

// The paper's explicit dw/da for each parity of k.
GroupRingElt word_derivative_closed_form(long k) {
    const long m = k / 2;
    const GroupWord ba_inv = GroupWord::gen('b') * GroupWord::gen('a', -1);
    GroupRingElt out = -geometric_sum(ba_inv, m);
    if (k % 2 == 0) {
        const GroupWord binv_a = GroupWord::gen('b', -1) * GroupWord::gen('a');
        GroupRingElt tail = GroupRingElt(1) + geometric_sum(binv_a, m - 1);
        out += GroupRingElt(ba_inv.pow(m)) * tail * GroupRingElt(GroupWord::gen('b', -1));
    } else {
        const GroupWord ab_inv = GroupWord::gen('a') * GroupWord::gen('b', -1);
        GroupRingElt tail = GroupRingElt(1) + geometric_sum(ab_inv, m);
        out += GroupRingElt(ba_inv.pow(m) * GroupWord::gen('b')) * tail;
    }
    return out;
}

}  // namespace

GroupRingElt relator_derivative_closed_form(long k, long n) {
    KnotSpec::double_twist(k, n);  // validate
    const GroupWord w = word_w(k);
    const GroupRingElt dw_da = word_derivative_closed_form(k);
    const GroupRingElt one_minus_a = GroupRingElt(1) - GroupRingElt(GroupWord::gen('a'));
    if (n > 0) {
        // w^n (1 + (1-a)(w^-1 + ... + w^-n) dw/da)
        GroupRingElt inv_sum;
        for (long i = 1; i <= n; ++i) inv_sum.add(w.pow(-i), 1);
        GroupRingElt inner = GroupRingElt(1) + one_minus_a * inv_sum * dw_da;
        return GroupRingElt(w.pow(n)) * inner;
    }
    // w^-l (1 - (1-a)(1 + w + ... + w^{l-1}) dw/da) with l = -n
    const long l = -n;
    GroupRingElt pow_sum = GroupRingElt(1) + geometric_sum(w, l - 1);
    GroupRingElt inner = GroupRingElt(1) - one_minus_a * pow_sum * dw_da;
    return GroupRingElt(w.pow(-l)) * inner;
}

}  // namespace tapkit
