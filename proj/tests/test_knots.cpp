#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "tapkit/knots.hpp"

using namespace tapkit;

namespace {

GroupWord random_word(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> pick(0, 3);
    GroupWord w;
    for (int i = 0; i < len; ++i) {
        switch (pick(rng)) {
            case 0: w = w * GroupWord::gen('a'); break;
            case 1: w = w * GroupWord::gen('a', -1); break;
            case 2: w = w * GroupWord::gen('b'); break;
            default: w = w * GroupWord::gen('b', -1); break;
        }
    }
    return w;
}

}  // namespace

TEST_CASE("word_w examples") {
    CHECK(word_w(1) == parse_word("ba"));
    CHECK(word_w(2) == parse_word("ba^-1b^-1a"));
    CHECK(word_w(3) == parse_word("ba^-1bab^-1a"));
    CHECK(word_w(4) == parse_word("(ba^-1)^2(b^-1a)^2"));
    CHECK_THROWS_AS(word_w(0), SpecError);
}

TEST_CASE("word_w exponent sums by parity") {
    for (long m = 1; m <= 6; ++m) {
        CHECK(word_w(2 * m).exponent_sum('a') == 0);
        CHECK(word_w(2 * m).exponent_sum('b') == 0);
        CHECK(word_w(2 * m + 1).exponent_sum('a') == 1);
        CHECK(word_w(2 * m + 1).exponent_sum('b') == 1);
    }
}

TEST_CASE("relator reduces correctly") {
    // (ba^-1b^-1a) a (a^-1bab^-1) b^-1 freely reduced
    CHECK(relator(2, 1) == parse_word("ba^-1b^-1abab^-2"));
    for (long k = 1; k <= 6; ++k) {
        for (long n : {-3L, -1L, 1L, 2L, 3L}) {
            const GroupWord r = relator(k, n);
            CHECK(r.exponent_sum('a') == 1);
            CHECK(r.exponent_sum('b') == -1);
            CHECK(r.length() <= 2 * std::labs(n) * word_w(k).length() + 2);
        }
    }
}

TEST_CASE("two_bridge_word examples") {
    CHECK(two_bridge_word(3, 1) == parse_word("ab"));
    CHECK(two_bridge_word(5, 3) == parse_word("ab^-1a^-1b"));
    CHECK(two_bridge_word(5, 1) == parse_word("abab"));
    for (long p : {3L, 5L, 7L, 9L, 11L, 13L})
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(two_bridge_word(p, q).length() == p - 1);
        }
}

TEST_CASE("parse_word grammar") {
    CHECK(parse_word("(ba^-1)^2") == parse_word("ba^-1ba^-1"));
    const GroupWord w = parse_word("a^3b^-2");
    CHECK(w.syllables().size() == 2);
    CHECK(w.syllables()[0].exp == 3);
    CHECK(w.syllables()[1].exp == -2);
    CHECK(parse_word("a a^-1").empty());
    CHECK(parse_word("a^0b") == GroupWord::gen('b'));
    CHECK(parse_word("((ab)^2)^-1") == parse_word("b^-1a^-1b^-1a^-1"));
    CHECK_THROWS_AS(parse_word("ac"), SpecError);
    CHECK_THROWS_AS(parse_word("(ab"), SpecError);
    CHECK_THROWS_AS(parse_word("a^"), SpecError);
    CHECK_THROWS_AS(parse_word(""), SpecError);
}

TEST_CASE("parse errors carry the byte offset") {
    try {
        parse_word("ab^2c");
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("byte 4") != std::string::npos);
    }
}

TEST_CASE("words round-trip through their text form") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const GroupWord w = random_word(rng, 12);
        if (w.empty()) continue;
        CHECK(parse_word(w.to_string()) == w);
    }
}

TEST_CASE("free reduction properties") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 100; ++trial) {
        const GroupWord u = random_word(rng, 10), v = random_word(rng, 10);
        CHECK((u * v).length() <= u.length() + v.length());
        CHECK((u * u.inverse()).empty());
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(KnotSpec::double_twist(-2, 1), SpecError);
    CHECK_THROWS_AS(KnotSpec::double_twist(0, 1), SpecError);
    CHECK_THROWS_AS(KnotSpec::double_twist(2, 0), SpecError);
    CHECK_THROWS_AS(KnotSpec::two_bridge(4, 1), SpecError);
    CHECK_THROWS_AS(KnotSpec::two_bridge(9, 3), SpecError);
    CHECK_THROWS_AS(KnotSpec::two_bridge(5, 5), SpecError);
    CHECK(KnotSpec::double_twist(2, -1).name() == "J(2,-2)");
    CHECK(KnotSpec::two_bridge(5, 3).name() == "b(5,3)");
}

TEST_CASE("genus table") {
    CHECK(genus(KnotSpec::double_twist(2, 1)) == 1);
    CHECK(genus(KnotSpec::double_twist(3, -2)) == 2);
    CHECK(genus(KnotSpec::double_twist(1, 3)) == 2);
    CHECK(genus(KnotSpec::double_twist(1, -3)) == 3);
    CHECK(genus(KnotSpec::double_twist(1, 1)) == 0);  // trivial knot
    CHECK(genus(KnotSpec::double_twist(8, 4)) == 1);
    CHECK(genus(KnotSpec::double_twist(7, -4)) == 4);
}

TEST_CASE("fiberedness table") {
    CHECK(is_fibered(KnotSpec::double_twist(2, 1)));
    CHECK(is_fibered(KnotSpec::double_twist(2, -1)));
    CHECK_FALSE(is_fibered(KnotSpec::double_twist(2, 2)));
    CHECK(is_fibered(KnotSpec::double_twist(1, -4)));
    CHECK(is_fibered(KnotSpec::double_twist(3, 2)));
    CHECK_FALSE(is_fibered(KnotSpec::double_twist(3, -1)));
    CHECK_FALSE(is_fibered(KnotSpec::double_twist(4, 1)));
    CHECK_FALSE(is_fibered(KnotSpec::double_twist(5, 2)));
}
