#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tapkit/common.hpp"

namespace tapkit {

// Finite-support Laurent polynomial in t with complex double coefficients.
// Stored as a dense run of coefficients starting at exponent lo(). After
// normalization the first and last stored coefficients exceed the relative
// zero threshold; coefficients below it are genuine floating-point dust
// left behind by root-level arithmetic and are dropped at the fringes only.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(double c) : lo_(0), coeffs_{Complex(c, 0.0)} { normalize(); }  // NOLINT
    LaurentPoly(int c) : LaurentPoly(static_cast<double>(c)) {}                // NOLINT
    LaurentPoly(const Complex& c) : lo_(0), coeffs_{c} { normalize(); }        // NOLINT
    LaurentPoly(int lo, std::vector<Complex> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPoly monomial(int exp, const Complex& c = 1.0) {
        return LaurentPoly(exp, {c});
    }

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    int span() const { return is_zero() ? 0 : hi() - lo(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex coeff(int exp) const {
        if (is_zero() || exp < lo_ || exp > hi()) return Complex(0.0);
        return coeffs_[static_cast<std::size_t>(exp - lo_)];
    }

    double max_abs() const {
        double m = 0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::max(a.hi(), b.hi());
        std::vector<Complex> out(static_cast<std::size_t>(hi - lo) + 1, Complex(0.0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            out[static_cast<std::size_t>(a.lo_ - lo) + i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            out[static_cast<std::size_t>(b.lo_ - lo) + i] += b.coeffs_[i];
        return LaurentPoly(lo, std::move(out));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return LaurentPoly(a.lo_ + b.lo_, std::move(out));
    }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    friend LaurentPoly operator*(const Complex& s, const LaurentPoly& p) {
        LaurentPoly r = p;
        for (auto& c : r.coeffs_) c *= s;
        r.normalize();
        return r;
    }

    LaurentPoly shifted(int delta) const {
        LaurentPoly r = *this;
        r.lo_ += delta;
        return r;
    }

    // Shift so the lowest stored exponent is 0 (Wada's t^{2n} ambiguity).
    LaurentPoly normalized_to_zero() const {
        return is_zero() ? *this : shifted(-lo_);
    }

    // Max |coefficient difference| against another Laurent polynomial.
    double distance(const LaurentPoly& other) const {
        double m = 0;
        int lo = std::min(is_zero() ? 0 : lo_, other.is_zero() ? 0 : other.lo_);
        int hi = std::max(is_zero() ? 0 : this->hi(), other.is_zero() ? 0 : other.hi());
        for (int e = lo; e <= hi; ++e) m = std::max(m, std::abs(coeff(e) - other.coeff(e)));
        return m;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            int e = lo_ + static_cast<int>(i);
            const Complex& c = coeffs_[i];
            if (std::abs(c) == 0.0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.real();
            if (c.imag() != 0.0) os << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
            os << ")";
            if (e != 0) os << "*" << var << "^" << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.to_string();
    }

private:
    void normalize() {
        double m = max_abs();
        if (m == 0.0) {
            coeffs_.clear();
            lo_ = 0;
            return;
        }
        double thresh = kLaurentZeroThreshold * m;
        std::size_t first = 0;
        while (first < coeffs_.size() && std::abs(coeffs_[first]) <= thresh) ++first;
        std::size_t last = coeffs_.size();
        while (last > first && std::abs(coeffs_[last - 1]) <= thresh) --last;
        if (first == last) {
            coeffs_.clear();
            lo_ = 0;
            return;
        }
        lo_ += static_cast<int>(first);
        coeffs_ = std::vector<Complex>(coeffs_.begin() + static_cast<long>(first),
                                       coeffs_.begin() + static_cast<long>(last));
    }

    int lo_ = 0;
    std::vector<Complex> coeffs_;
};

// Long division from the highest exponent. The quotient is exact for the
// inputs this library produces (Wada's invariant is a Laurent polynomial
// for non-abelian representations); a residual above tol * ||num||_inf
// means the input was not a representation, or there is a bug upstream.
inline LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den,
                                     double tol = kLaurentZeroThreshold) {
    if (den.is_zero()) throw SpecError("Laurent division by zero");
    if (num.is_zero()) return LaurentPoly();
    const double num_norm = num.max_abs();
    const int q_lo = num.lo() - den.lo();
    const int q_hi = num.hi() - den.hi();
    if (q_hi < q_lo)
        throw NumericalError("Laurent division: denominator span exceeds numerator span");
    std::vector<Complex> rem = num.coeffs();
    const int rem_lo = num.lo();
    std::vector<Complex> quot(static_cast<std::size_t>(q_hi - q_lo) + 1);
    const Complex den_lead = den.coeff(den.hi());
    for (int qe = q_hi; qe >= q_lo; --qe) {
        const std::size_t top = static_cast<std::size_t>(qe + den.hi() - rem_lo);
        const Complex c = rem[top] / den_lead;
        quot[static_cast<std::size_t>(qe - q_lo)] = c;
        for (std::size_t j = 0; j < den.coeffs().size(); ++j)
            rem[static_cast<std::size_t>(qe + den.lo() - rem_lo) + j] -= c * den.coeffs()[j];
        rem[top] = Complex(0.0);  // cancels exactly by construction
    }
    double residual = 0;
    for (const auto& c : rem) residual = std::max(residual, std::abs(c));
    if (residual > tol * num_norm)
        throw NumericalError("Laurent division leaves residual " +
                             std::to_string(residual / num_norm));
    return LaurentPoly(q_lo, std::move(quot));
}

}  // namespace tapkit
