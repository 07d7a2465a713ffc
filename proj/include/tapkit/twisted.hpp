#pragma once

#include <map>
#include <string>
#include <vector>

#include "tapkit/common.hpp"
#include "tapkit/knots.hpp"
#include "tapkit/laurent.hpp"
#include "tapkit/mat2.hpp"
#include "tapkit/parabolic.hpp"

namespace tapkit {

// Formal integer combination of reduced words: an element of Z[F_2].
class GroupRingElt {
public:
    GroupRingElt() = default;
    GroupRingElt(long c) {  // NOLINT: implicit by design
        if (c != 0) terms_[GroupWord()] = c;
    }
    explicit GroupRingElt(const GroupWord& w, long c = 1) {
        if (c != 0) terms_[w] = c;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<GroupWord, long>& terms() const { return terms_; }

    void add(const GroupWord& w, long c);

    GroupRingElt operator-() const;
    GroupRingElt& operator+=(const GroupRingElt& rhs);
    GroupRingElt& operator-=(const GroupRingElt& rhs);
    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
    friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
    friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);

    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

    std::string to_string() const;

private:
    std::map<GroupWord, long> terms_;
};

// Fox free derivative with respect to gen: d(g)/dg = 1, d(g^-1)/dg = -g^-1,
// d(h)/dg = 0 for the other generator, d(uv)/dg = du/dg + u dv/dg.
GroupRingElt fox_derivative(const GroupWord& word, char gen);

// Phi = (rho tensor f): a word g maps to rho(g) t^e where e is the total
// exponent sum (the abelianization sends both generators to t), extended
// linearly over the group ring.
Mat2<LaurentPoly> phi_map(const GroupRingElt& elt, const Mat2<Complex>& a,
                          const Mat2<Complex>& b);

// Normalized twisted Alexander polynomial: lowest exponent shifted to 0.
struct TwistedAlex {
    LaurentPoly poly;
    int span;
    Complex lead;
    Complex trail;
};

TwistedAlex make_twisted_alex(const LaurentPoly& raw);

// Wada's invariant det Phi(dr/da) / det Phi(1-b); the denominator equals
// 1 - 2t + t^2 for a parabolic representation. Division must be exact.
TwistedAlex wada_polynomial(const KnotSpec& spec, const ParabolicRep& rep,
                            const Tolerances& tol = {});

struct ExtremePrediction {
    Complex lead;
    Complex trail;
    int span;
};

// The paper's closed forms for the extreme coefficients and span of the
// normalized invariant, branching on (parity of k, sign of n, m = 0).
ExtremePrediction closed_form_extremes(const KnotSpec& spec, const Complex& y);

bool monicity(const TwistedAlex& tap, double tol = 1e-8);

// Palindrome defect max |c_i - c_{span-i}|; reciprocity makes this vanish.
double reciprocity_check(const TwistedAlex& tap);

// dr/da per the product-rule chain w^n(1 + (1-a)(w^-1+...+w^-n) dw/da)
// for n > 0 and its n < 0 counterpart, assembled from the paper's explicit
// dw/da sums. Used as a cross-check against the generic Fox derivative.
GroupRingElt relator_derivative_closed_form(long k, long n);

}  // namespace tapkit
