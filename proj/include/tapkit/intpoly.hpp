#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tapkit/common.hpp"

namespace tapkit {

// Dense polynomial over Z in one variable, exact arbitrary-precision
// coefficients. coeff(i) is the coefficient of y^i. The zero polynomial
// stores no coefficients and has degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(int c) { coeffs_.push_back(c); normalize(); }              // NOLINT: implicit by design
    IntPoly(const BigInt& c) { coeffs_.push_back(c); normalize(); }    // NOLINT
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPoly variable() { return IntPoly(std::vector<BigInt>{0, 1}); }
    static IntPoly monomial(std::size_t deg, BigInt c = 1) {
        std::vector<BigInt> v(deg + 1);
        v[deg] = std::move(c);
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero = 0;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading() const {
        if (is_zero()) throw SpecError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    IntPoly& operator+=(const IntPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(out));
    }
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    // Exact quotient; throws if the division leaves a remainder.
    IntPoly div_exact(const IntPoly& den) const {
        if (den.is_zero()) throw SpecError("division by zero polynomial");
        IntPoly rem = *this;
        if (rem.is_zero()) return IntPoly();
        if (rem.degree() < den.degree())
            throw NumericalError("inexact integer polynomial division");
        std::vector<BigInt> q(static_cast<std::size_t>(rem.degree() - den.degree()) + 1);
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            if (rem.leading() % den.leading() != 0)
                throw NumericalError("inexact integer polynomial division");
            BigInt c = rem.leading() / den.leading();
            std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
            q[shift] = c;
            for (std::size_t i = 0; i < den.coeffs_.size(); ++i)
                rem.coeffs_[shift + i] -= c * den.coeffs_[i];
            rem.normalize();
        }
        if (!rem.is_zero()) throw NumericalError("inexact integer polynomial division");
        return IntPoly(std::move(q));
    }

    // p(q(y)), exact.
    IntPoly compose(const IntPoly& inner) const {
        IntPoly acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * inner;
            acc += IntPoly(coeffs_[i]);
        }
        return acc;
    }

    template <class T>
    T eval(const T& point) const {
        T acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * point + T(static_cast<double>(coeffs_[i]));
        return acc;
    }
    BigInt eval_int(const BigInt& point) const {
        BigInt acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
        return acc;
    }

    double max_abs_coeff() const {
        double m = 0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(static_cast<double>(c)));
        return m;
    }

    // Flips the global sign if needed so the leading coefficient is +1.
    // Only valid for polynomials with leading coefficient +-1.
    IntPoly monic_normalized() const {
        if (is_zero()) return *this;
        if (leading() == 1) return *this;
        if (leading() == -1) return -*this;
        throw NumericalError("polynomial is not monic up to sign");
    }

    std::string to_string(const std::string& var = "y") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0 || a != 1) os << a.str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
        return os << p.to_string();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

}  // namespace tapkit
