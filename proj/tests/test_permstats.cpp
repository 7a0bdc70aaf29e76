#include <doctest.h>

#include <set>

#include "altgamma/expr.hpp"
#include "altgamma/permstats.hpp"

using namespace altgamma;

namespace {
Poly P(std::string_view s) { return parse_poly(s); }
}

TEST_SUITE("permstats") {

TEST_CASE("stream sizes and determinism") {
    CHECK(perms(3).size() == 6);
    CHECK(signed_perms(2).size() == 8);
    CHECK(signed_perms(0).size() == 1);
    CHECK(signed_perms(0)[0].empty());
    CHECK(perms(0).size() == 1);
    // Deterministic order: sign patterns lexicographic (+ first), then words.
    auto s1 = signed_perms(2);
    CHECK(s1.front() == Word{1, 2});
    CHECK(s1 == signed_perms(2));
    std::set<Word> uniq(s1.begin(), s1.end());
    CHECK(uniq.size() == 8);
}

TEST_CASE("descent statistics") {
    CHECK(des(Word{2, 1, 3}) == 1);
    CHECK(des(Word{1}) == 0);
    CHECK(des_b(Word{-1}) == 1);
    CHECK(des_b(Word{1, 2}) == 0);
    CHECK(des_b(Word{-1, -2}) == 2);
}

TEST_CASE("alternating descent statistics") {
    CHECK(altdes_a(Word{1}) == 0);
    CHECK(altdes_a(Word{2, 1}) == 1);
    CHECK(altdes_a(Word{1, 2}) == 0);
    CHECK(altdes_b(Word{2, 1}) == 2);
    CHECK(altdes_b(Word{-2, -1}) == 0);
    CHECK(altasc_b(Word{-2, -1}) == 2);
    // Remmel's variant on the two one-letter words.
    CHECK(altdesb_remmel(Word{1}) == 0);
    CHECK(altdesb_remmel(Word{-1}) == 0);
}

TEST_CASE("left peaks") {
    CHECK(lpk(Word{2, 1}) == 1);
    CHECK(lpk(Word{1, 2}) == 0);
    CHECK(lpk(Word{1, 3, 2, 4}) == 1);
    CHECK(lpk(Word{2, 1, 4, 3}) == 2);
}

TEST_CASE("snakes and alternating permutations") {
    // Snakes of span 2: exactly 21, 2(-1), 1(-2).
    std::set<Word> snakes;
    for_each_signed_perm(2, [&](const Word& w) {
        if (is_snake(w)) snakes.insert(w);
    });
    CHECK(snakes == std::set<Word>{{2, 1}, {2, -1}, {1, -2}});
    unsigned alt4 = 0;
    for_each_perm(4, [&](const Word& w) { alt4 += is_alternating(w); });
    CHECK(alt4 == 5);
    unsigned alt2 = 0;
    for_each_perm(2, [&](const Word& w) { alt2 += is_alternating(w); });
    CHECK(alt2 == 1);
    // A word is alternating exactly when every position alternates, i.e. the
    // type-A alternating descent count is maximal.
    for_each_perm(5, [&](const Word& w) {
        CHECK(is_alternating(w) == (altdes_a(w) == 4));
    });
    // Likewise a snake maximizes the type-B count.
    for_each_signed_perm(4, [&](const Word& w) {
        CHECK(is_snake(w) == (altdes_b(w) == 4));
    });
}

TEST_CASE("distributions match the golden rows") {
    CHECK(distribution(Stat::des_b, 2) == P("1+6x+x^2"));
    CHECK(distribution(Stat::altdes, 2) == P("1+x"));
    CHECK(distribution(Stat::altdes, 3) == P("2+2x+2x^2"));
    CHECK(distribution(Stat::altdes, 5) == P("16+26x+36x^2+26x^3+16x^4"));
    CHECK(distribution(Stat::altdes_b, 1) == P("1+x"));
    CHECK(distribution(Stat::altdes_b, 2) == P("3+2x+3x^2"));
    CHECK(distribution(Stat::altdes_b, 3) == P("11+13x+13x^2+11x^3"));
    CHECK(distribution(Stat::lpk, 2) == P("1+x"));
    CHECK(distribution(Stat::lpk, 4) == P("1+18x+5x^2"));
    // Indicator distributions for the predicates.
    CHECK(distribution(Stat::snake, 2) == P("5+3x"));
    CHECK(distribution(Stat::alternating, 4) == P("19+5x"));
}

TEST_CASE("remmel variant distribution over span 2") {
    // Four words lose one from the leading ascent, four keep their count.
    CHECK(distribution(Stat::altdesb_remmel, 2) == P("4+4x"));
}

TEST_CASE("distribution structural properties") {
    for (unsigned n = 1; n <= 5; ++n) {
        Poly d = distribution(Stat::altdes_b, n);
        CHECK(palindromic(d, n));
        CHECK(eval_rational(d, {{"x", Rational(1)}}) ==
              Rational(Int(1) << n) * Rational(factorial(n)));
        Poly l = distribution(Stat::lpk, n);
        CHECK(l.degree_in("x") == n / 2);
        CHECK(eval_rational(l, {{"x", Rational(1)}}) == Rational(factorial(n)));
    }
    // altdes_b + altasc_b = n for every word.
    for (unsigned n = 0; n <= 5; ++n)
        for_each_signed_perm(n, [&](const Word& w) {
            CHECK(altdes_b(w) + altasc_b(w) == n);
        });
}

TEST_CASE("complement involution") {
    CHECK(complement(Word{3, -6, 7, 1, -2}) == Word{-2, 7, -6, 1, 3});
    CHECK(complement(Word{5}) == Word{5});
    CHECK(complement(Word{}) == Word{});
    CHECK_THROWS_AS(complement(Word{1, 1}), std::invalid_argument);
    for_each_signed_perm(4, [&](const Word& w) { CHECK(complement(complement(w)) == w); });
}

TEST_CASE("insertion with complemented suffix") {
    CHECK(insert_complemented(Word{1}, 1, 2) == Word{1, 2});
    CHECK(insert_complemented(Word{2, 1}, 1, 3) == Word{2, 3, 1});
    // Inserting at the front complements the whole word.
    CHECK(insert_complemented(Word{1, 2}, 0, -3) == Word{-3, 2, 1});
    CHECK_THROWS_AS(insert_complemented(Word{1}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(insert_complemented(Word{1}, 0, 5), std::invalid_argument);
}

TEST_CASE("insertion is a bijection onto the next span") {
    for (unsigned n = 1; n <= 5; ++n) CHECK(insertion_bijection_check(n));
}

TEST_CASE("statistic names resolve") {
    CHECK(stat_from_name("des") == Stat::des);
    CHECK(stat_from_name("altdesB") == Stat::altdes_b);
    CHECK(stat_from_name("altdesbRemmel") == Stat::altdesb_remmel);
    CHECK(stat_names().size() == 9);
    CHECK(!stat_is_signed(Stat::lpk));
    CHECK(stat_is_signed(Stat::snake));
    CHECK_THROWS_AS(stat_from_name("desb"), std::invalid_argument);
}

TEST_CASE("enumeration caps refuse instead of truncating") {
    unsetenv("ALTGAMMA_ENUM_CAP");
    override_enum_caps(EnumCaps{4, 3});
    CHECK_THROWS_AS(perms(5), std::invalid_argument);
    CHECK_THROWS_AS(signed_perms(4), std::invalid_argument);
    CHECK(signed_perms(3).size() == 48);
    override_enum_caps(std::nullopt);
    CHECK(enum_caps().max_unsigned == 10);
    CHECK(enum_caps().max_signed == 8);
    setenv("ALTGAMMA_ENUM_CAP", "5", 1);
    CHECK(enum_caps().max_unsigned == 5);
    CHECK(enum_caps().max_signed == 5);
    setenv("ALTGAMMA_ENUM_CAP", "bogus", 1);
    CHECK_THROWS_AS(enum_caps(), std::invalid_argument);
    unsetenv("ALTGAMMA_ENUM_CAP");
}

}  // TEST_SUITE
