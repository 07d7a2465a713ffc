#include "tapkit/knots.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tapkit {

GroupWord::GroupWord(std::vector<Syllable> syllables) {
    for (const auto& s : syllables) push_reduced(s.gen, s.exp);
}

GroupWord GroupWord::gen(char g, long exp) {
    GroupWord w;
    w.push_reduced(g, exp);
    return w;
}

void GroupWord::push_reduced(char g, long e) {
    if (g != 'a' && g != 'b') throw SpecError("unknown generator");
    if (e == 0) return;
    if (!syllables_.empty() && syllables_.back().gen == g) {
        syllables_.back().exp += e;
        if (syllables_.back().exp == 0) syllables_.pop_back();
        return;
    }
    syllables_.push_back({g, e});
}

long GroupWord::length() const {
    long len = 0;
    for (const auto& s : syllables_) len += std::labs(s.exp);
    return len;
}

long GroupWord::exponent_sum(char g) const {
    long sum = 0;
    for (const auto& s : syllables_)
        if (s.gen == g) sum += s.exp;
    return sum;
}

long GroupWord::total_exponent() const {
    long sum = 0;
    for (const auto& s : syllables_) sum += s.exp;
    return sum;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.push_reduced(it->gen, -it->exp);
    return w;
}

GroupWord GroupWord::pow(long e) const {
    GroupWord base = e >= 0 ? *this : inverse();
    long reps = e >= 0 ? e : -e;
    GroupWord acc;
    for (long i = 0; i < reps; ++i) acc = acc * base;
    return acc;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
    GroupWord w = u;
    for (const auto& s : v.syllables_) w.push_reduced(s.gen, s.exp);
    return w;
}

std::string GroupWord::to_string() const {
    if (syllables_.empty()) return "1";
    std::ostringstream os;
    for (const auto& s : syllables_) {
        os << s.gen;
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SpecError("word syntax error at byte " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    long parse_exponent() {
        ++pos;  // '^'
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected digits after '^'");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) fail("exponent too large");
            ++pos;
        }
        return neg ? -value : value;
    }

    GroupWord parse_word(bool inside_parens) {
        GroupWord w;
        bool saw_factor = false;
        while (!done()) {
            char c = text[pos];
            if (c == ')') {
                if (!inside_parens) fail("unmatched ')'");
                break;
            }
            GroupWord factor;
            if (c == 'a' || c == 'b') {
                ++pos;
                factor = GroupWord::gen(c);
            } else if (c == '(') {
                ++pos;
                factor = parse_word(true);
                skip_ws();
                if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
                ++pos;
            } else {
                fail("expected 'a', 'b' or '('");
            }
            if (pos < text.size() && text[pos] == '^') factor = factor.pow(parse_exponent());
            w = w * factor;
            saw_factor = true;
        }
        if (!saw_factor) fail("empty word");
        return w;
    }
};

}  // namespace

GroupWord parse_word(const std::string& text) {
    Parser p{text};
    GroupWord w = p.parse_word(false);
    if (!p.done()) p.fail("trailing input");
    return w;
}

KnotSpec KnotSpec::double_twist(long k, long n) {
    if (k <= 0)
        throw SpecError("J(k,2n) requires k >= 1; J(-k,-l) is the mirror image of J(k,l), "
                        "mirror the result yourself if that is what you want");
    if (n == 0) throw SpecError("J(k,0) is the trivial knot");
    return KnotSpec(DoubleTwist{k, n});
}

KnotSpec KnotSpec::two_bridge(long p, long q) {
    if (p <= 1 || p % 2 == 0) throw SpecError("b(p,q) requires odd p > 1");
    if (q < 1 || q >= p) throw SpecError("b(p,q) requires 1 <= q < p");
    if (std::gcd(p, q) != 1) throw SpecError("b(p,q) requires gcd(p,q) = 1");
    return KnotSpec(TwoBridge{p, q});
}

GroupWord KnotSpec::word() const {
    if (is_double_twist()) return word_w(as_double_twist().k);
    return two_bridge_word(as_two_bridge().p, as_two_bridge().q);
}

GroupWord KnotSpec::relator() const {
    if (is_double_twist()) return tapkit::relator(as_double_twist().k, as_double_twist().n);
    const GroupWord w = word();
    return w * GroupWord::gen('a') * w.inverse() * GroupWord::gen('b', -1);
}

std::string KnotSpec::name() const {
    std::ostringstream os;
    if (is_double_twist())
        os << "J(" << as_double_twist().k << "," << 2 * as_double_twist().n << ")";
    else
        os << "b(" << as_two_bridge().p << "," << as_two_bridge().q << ")";
    return os.str();
}

GroupWord word_w(long k) {
    if (k <= 0) throw SpecError("word_w requires k >= 1");
    const long m = k / 2;
    const GroupWord ba_inv = GroupWord::gen('b') * GroupWord::gen('a', -1);
    const GroupWord binv_a = GroupWord::gen('b', -1) * GroupWord::gen('a');
    if (k % 2 == 0) return ba_inv.pow(m) * binv_a.pow(m);
    return ba_inv.pow(m) * GroupWord::gen('b') * GroupWord::gen('a') * binv_a.pow(m);
}

GroupWord relator(long k, long n) {
    KnotSpec::double_twist(k, n);  // validate
    const GroupWord w = word_w(k);
    return w.pow(n) * GroupWord::gen('a') * w.pow(-n) * GroupWord::gen('b', -1);
}

GroupWord two_bridge_word(long p, long q) {
    KnotSpec::two_bridge(p, q);  // validate
    GroupWord w;
    for (long j = 1; j <= p - 2; j += 2) {
        w = w * GroupWord::gen('a', (j * q / p) % 2 == 0 ? 1 : -1);
        w = w * GroupWord::gen('b', ((j + 1) * q / p) % 2 == 0 ? 1 : -1);
    }
    return w;
}

long genus(const KnotSpec& spec) {
    if (!spec.is_double_twist())
        throw SpecError("ground truth tables cover J(k,2n) only");
    const auto& dt = spec.as_double_twist();
    if (dt.k == 1) return dt.n > 0 ? dt.n - 1 : -dt.n;
    if (dt.k % 2 == 0) return 1;
    return std::labs(dt.n);
}

bool is_fibered(const KnotSpec& spec) {
    if (!spec.is_double_twist())
        throw SpecError("ground truth tables cover J(k,2n) only");
    const auto& dt = spec.as_double_twist();
    if (dt.k == 1) return true;
    if (dt.k == 2) return dt.n == 1 || dt.n == -1;
    if (dt.k == 3) return dt.n > 0;
    return false;
}

}  // namespace tapkit
