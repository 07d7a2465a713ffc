#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "tapkit/common.hpp"
#include "tapkit/intpoly.hpp"

namespace tapkit {

// Sparse polynomial over Z in the two trace variables x and y.
// Keys are (degree in x, degree in y); zero coefficients are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(int c) { add_term(0, 0, c); }             // NOLINT: implicit by design
    BiPoly(const BigInt& c) { add_term(0, 0, c); }   // NOLINT

    static BiPoly var_x() { BiPoly p; p.add_term(1, 0, 1); return p; }
    static BiPoly var_y() { BiPoly p; p.add_term(0, 1, 1); return p; }

    void add_term(int dx, int dy, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find({dx, dy});
        if (it == terms_.end()) {
            terms_.emplace(Key{dx, dy}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigInt>& terms() const { return terms_; }

    BigInt coeff(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool only_even_x_powers() const {
        for (const auto& [k, c] : terms_)
            if (k.first % 2 != 0) return false;
        return true;
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    BiPoly& operator+=(const BiPoly& rhs) {
        for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& rhs) {
        for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }
    BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Specialize x to an integer (x = 2 throughout the parabolic theory).
    IntPoly at_x(const BigInt& x_value) const {
        std::map<int, BigInt> dense;
        for (const auto& [k, c] : terms_) {
            BigInt xpow = 1;
            for (int i = 0; i < k.first; ++i) xpow *= x_value;
            dense[k.second] += c * xpow;
        }
        std::vector<BigInt> v;
        for (const auto& [dy, c] : dense) {
            if (static_cast<std::size_t>(dy) >= v.size()) v.resize(dy + 1);
            v[dy] = c;
        }
        return IntPoly(std::move(v));
    }

    Complex eval(const Complex& x_value, const Complex& y_value) const {
        Complex acc = 0;
        for (const auto& [k, c] : terms_) {
            Complex t(static_cast<double>(c), 0.0);
            for (int i = 0; i < k.first; ++i) t *= x_value;
            for (int i = 0; i < k.second; ++i) t *= y_value;
            acc += t;
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print highest total degree first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool has_var = k.first > 0 || k.second > 0;
            if (!has_var || a != 1) os << a.str();
            if (k.first > 0) {
                if (a != 1) os << "*";
                os << "x";
                if (k.first > 1) os << "^" << k.first;
            }
            if (k.second > 0) {
                if (a != 1 || k.first > 0) os << "*";
                os << "y";
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
        return os << p.to_string();
    }

private:
    std::map<Key, BigInt> terms_;
};

}  // namespace tapkit
