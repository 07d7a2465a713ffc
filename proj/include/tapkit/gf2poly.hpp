#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tapkit/common.hpp"
#include "tapkit/intpoly.hpp"

namespace tapkit {

// Polynomial over GF(2), bit i = coefficient of y^i. Plain bit vector with
// shift/xor arithmetic; the degrees in play stay in the hundreds.
class GF2Poly {
public:
    GF2Poly() = default;
    GF2Poly(int c) {               // NOLINT: implicit by design
        if (c % 2 != 0) bits_.push_back(true);
    }
    explicit GF2Poly(std::vector<bool> bits) : bits_(std::move(bits)) { normalize(); }

    static GF2Poly monomial(std::size_t deg) {
        std::vector<bool> b(deg + 1, false);
        b[deg] = true;
        return GF2Poly(std::move(b));
    }
    static GF2Poly all_ones(std::size_t deg) {
        return GF2Poly(std::vector<bool>(deg + 1, true));
    }

    bool is_zero() const { return bits_.empty(); }
    long degree() const { return static_cast<long>(bits_.size()) - 1; }
    bool bit(std::size_t i) const { return i < bits_.size() && bits_[i]; }

    friend bool operator==(const GF2Poly& a, const GF2Poly& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const GF2Poly& a, const GF2Poly& b) { return !(a == b); }

    GF2Poly& operator+=(const GF2Poly& rhs) {
        if (bits_.size() < rhs.bits_.size()) bits_.resize(rhs.bits_.size(), false);
        for (std::size_t i = 0; i < rhs.bits_.size(); ++i)
            bits_[i] = bits_[i] != rhs.bits_[i];
        normalize();
        return *this;
    }
    friend GF2Poly operator+(GF2Poly a, const GF2Poly& b) { return a += b; }

    friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
        if (a.is_zero() || b.is_zero()) return GF2Poly();
        std::vector<bool> out(a.bits_.size() + b.bits_.size() - 1, false);
        for (std::size_t i = 0; i < a.bits_.size(); ++i) {
            if (!a.bits_[i]) continue;
            for (std::size_t j = 0; j < b.bits_.size(); ++j)
                if (b.bits_[j]) out[i + j] = !out[i + j];
        }
        return GF2Poly(std::move(out));
    }
    GF2Poly& operator*=(const GF2Poly& rhs) { return *this = *this * rhs; }

    GF2Poly mod(const GF2Poly& m) const {
        if (m.is_zero()) throw SpecError("GF2 reduction modulo zero");
        GF2Poly r = *this;
        while (!r.is_zero() && r.degree() >= m.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - m.degree());
            for (std::size_t i = 0; i < m.bits_.size(); ++i)
                if (m.bits_[i]) r.bits_[i + shift] = !r.bits_[i + shift];
            r.normalize();
        }
        return r;
    }

    static GF2Poly gcd(GF2Poly a, GF2Poly b) {
        while (!b.is_zero()) {
            GF2Poly r = a.mod(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    // y^(2^e) mod m, by e repeated squarings.
    static GF2Poly pow2_frobenius(const GF2Poly& m, unsigned e) {
        GF2Poly acc = monomial(1).mod(m);
        for (unsigned i = 0; i < e; ++i) acc = (acc * acc).mod(m);
        return acc;
    }

    std::string to_string(const std::string& var = "y") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = bits_.size(); i-- > 0;) {
            if (!bits_[i]) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) os << "1";
            else if (i == 1) os << var;
            else os << var << "^" << i;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GF2Poly& p) {
        return os << p.to_string();
    }

private:
    void normalize() {
        while (!bits_.empty() && !bits_.back()) bits_.pop_back();
    }

    std::vector<bool> bits_;
};

// Coefficientwise reduction Z[y] -> GF(2)[y].
inline GF2Poly mod2_reduce(const IntPoly& p) {
    std::vector<bool> bits(p.coeffs().size(), false);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        bits[i] = (p.coeffs()[i] % 2) != 0;
    return GF2Poly(std::move(bits));
}

}  // namespace tapkit
