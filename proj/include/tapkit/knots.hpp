#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "tapkit/common.hpp"

namespace tapkit {

// A syllable is a generator with a nonzero exponent. Words are kept freely
// reduced: no zero exponents, no adjacent syllables on the same generator.
struct Syllable {
    char gen;  // 'a' or 'b'
    long exp;
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Syllable> syllables);

    static GroupWord gen(char g, long exp = 1);

    bool empty() const { return syllables_.empty(); }
    const std::vector<Syllable>& syllables() const { return syllables_; }

    // Total letter count, sum of |exponents|.
    long length() const;

    long exponent_sum(char g) const;
    // Sum over both generators; this is the image under abelianization.
    long total_exponent() const;

    GroupWord inverse() const;
    GroupWord pow(long e) const;

    friend GroupWord operator*(const GroupWord& u, const GroupWord& v);

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const GroupWord& w) {
        return os << w.to_string();
    }

private:
    void push_reduced(char g, long e);

    std::vector<Syllable> syllables_;
};

// Grammar: word := factor+ ; factor := ('a'|'b'|'(' word ')') ('^' '-'? digits)?
// Whitespace between factors is ignored. Throws SpecError with a byte offset.
GroupWord parse_word(const std::string& text);

struct DoubleTwist {
    long k;  // half twists in the first box, k >= 1
    long n;  // the second box holds 2n half twists, n != 0
    friend bool operator==(const DoubleTwist&, const DoubleTwist&) = default;
};

struct TwoBridge {
    long p;  // odd, > 1
    long q;  // 1 <= q < p, gcd(p, q) = 1
    friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
};

// Validated knot descriptor. J(-k,-l) is the mirror image of J(k,l) and a
// mirror changes the twisted Alexander polynomial, so parameters outside
// the k > 0 normalization are rejected rather than silently mirrored.
class KnotSpec {
public:
    static KnotSpec double_twist(long k, long n);
    static KnotSpec two_bridge(long p, long q);

    bool is_double_twist() const { return std::holds_alternative<DoubleTwist>(v_); }
    const DoubleTwist& as_double_twist() const { return std::get<DoubleTwist>(v_); }
    const TwoBridge& as_two_bridge() const { return std::get<TwoBridge>(v_); }

    // The presentation word w with G_K = <a,b | w a = b w^{...}>.
    GroupWord word() const;
    // Relator: w^n a w^-n b^-1 for J(k,2n); w a w^-1 b^-1 for b(p,q).
    GroupWord relator() const;

    std::string name() const;
    friend bool operator==(const KnotSpec&, const KnotSpec&) = default;

private:
    explicit KnotSpec(DoubleTwist d) : v_(d) {}
    explicit KnotSpec(TwoBridge t) : v_(t) {}
    std::variant<DoubleTwist, TwoBridge> v_;
};

// w = (ba^-1)^m (b^-1 a)^m for k = 2m, (ba^-1)^m ba (b^-1 a)^m for k = 2m+1.
GroupWord word_w(long k);

// Freely reduced w^n a w^-n b^-1.
GroupWord relator(long k, long n);

// w = a^{e_1} b^{e_2} ... a^{e_{p-2}} b^{e_{p-1}}, e_j = (-1)^floor(jq/p).
GroupWord two_bridge_word(long p, long q);

struct GroundTruth {
    long genus;
    bool fibered;
};

// Known genus of J(k,2n): 1 for even k > 1, |n| for odd k > 1, and for the
// torus knots J(1,2n) it is n-1 (n > 0) or -n (n < 0).
long genus(const KnotSpec& spec);

// J(k,2n) is fibered exactly for J(2,+-2), J(1,2n), and J(3,2n) with n > 0.
bool is_fibered(const KnotSpec& spec);

inline GroundTruth ground_truth(const KnotSpec& spec) {
    return GroundTruth{genus(spec), is_fibered(spec)};
}

}  // namespace tapkit
