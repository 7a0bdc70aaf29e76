#include <doctest.h>

#include "altgamma/expr.hpp"
#include "altgamma/families.hpp"
#include "altgamma/permstats.hpp"

using namespace altgamma;

namespace {
Poly P(std::string_view s) { return parse_poly(s); }
}

TEST_SUITE("families") {

TEST_CASE("type-A alternating family golden rows") {
    CHECK(alt_a(1) == Poly(1));
    CHECK(alt_a(2) == P("1+x"));
    CHECK(alt_a(3) == P("2+2x+2x^2"));
    CHECK(alt_a(4) == P("5+7x+7x^2+5x^3"));
    CHECK(alt_a(5) == P("16+26x+36x^2+26x^3+16x^4"));
    CHECK_THROWS_AS(alt_a(0), std::invalid_argument);
}

TEST_CASE("type-B alternating family golden rows") {
    CHECK(alt_b(0) == Poly(1));
    CHECK(alt_b(1) == P("1+x"));
    CHECK(alt_b(2) == P("3+2x+3x^2"));
    CHECK(alt_b(3) == P("11+13x+13x^2+11x^3"));
    CHECK(alt_b(4) == P("57+76x+118x^2+76x^3+57x^4"));
}

TEST_CASE("alternating families match brute force") {
    for (unsigned n = 1; n <= 7; ++n) CHECK(alt_a(n) == distribution(Stat::altdes, n));
    for (unsigned n = 0; n <= 6; ++n) CHECK(alt_b(n) == distribution(Stat::altdes_b, n));
}

TEST_CASE("alternating family structure") {
    for (unsigned n = 0; n <= 20; ++n) {
        Poly b = alt_b(n);
        CHECK(palindromic(b, n));
        if (n >= 3) CHECK(unimodal(b));
    }
    // The recurrences stay self-consistent deep into the table (both internal
    // cross-checks throw on disagreement).
    CHECK_NOTHROW(alt_b(30));
    CHECK_NOTHROW(xi(30));
    CHECK_NOTHROW(alt_a(30));
}

TEST_CASE("classical Eulerian polynomials") {
    CHECK(euler_a(1) == Poly(1));
    CHECK(euler_a(3) == P("1+4x+x^2"));
    CHECK(euler_a(4) == P("1+11x+11x^2+x^3"));
    CHECK(euler_b(2) == P("1+6x+x^2"));
    CHECK_THROWS_AS(euler_a(0), std::invalid_argument);
}

TEST_CASE("derivative polynomials") {
    CHECK(deriv_p(0) == P("x"));
    CHECK(deriv_p(1) == P("1+x^2"));
    CHECK(deriv_p(2) == P("2x+2x^3"));
    CHECK(deriv_q(0) == Poly(1));
    CHECK(deriv_q(1) == P("x"));
    CHECK(deriv_q(2) == P("1+2x^2"));
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(deriv_p(n).degree_in("x") == n + 1);
        CHECK(deriv_q(n).degree_in("x") == n);
    }
}

TEST_CASE("convolution identity for the derivative family") {
    for (unsigned n = 0; n <= 20; ++n) CHECK(q_convolution_check(n));
}

TEST_CASE("simsun polynomials and eta") {
    CHECK(simsun_s(0) == Poly(1));
    CHECK(simsun_s(1) == Poly(1));
    CHECK(simsun_s(2) == P("1+x"));
    CHECK(simsun_s(3) == P("1+4x"));
    CHECK(eta(1) == Poly(1));
    CHECK(eta(2) == Poly(1));
    CHECK(eta(3) == P("2+x"));
    CHECK_THROWS_AS(eta(0), std::invalid_argument);
    // eta reassembles the type-A family in the gamma basis: spot check n=3.
    CHECK(Rational(2) * P("(1+x)^2") + Rational(1) * P("-2x") == alt_a(3));
    for (unsigned n = 1; n <= 20; ++n) {
        Poly h = eta(n);
        for (const auto& [m, c] : h.terms()) CHECK(!c.is_negative());
    }
}

TEST_CASE("xi family golden rows") {
    CHECK(xi(0) == Poly(1));
    CHECK(xi(1) == Poly(1));
    CHECK(xi(2) == P("3+x"));
    CHECK(xi(3) == P("11+5x"));
    CHECK(xi(4) == P("57+38x+5x^2"));
    CHECK(xi(5) == P("361+302x+61x^2"));
}

TEST_CASE("xi family structure") {
    for (unsigned n = 0; n <= 20; ++n) {
        Poly x_n = xi(n);
        CHECK(x_n.degree_in("x") == n / 2);
        auto coeffs = coeff_list(x_n, n / 2);
        for (const auto& c : coeffs) {
            CHECK(c.is_integer());
            CHECK(c > Rational(0));
        }
        // Evaluation at -1 telescopes to the factorial.
        CHECK(eval_rational(x_n, {{"x", Rational(-1)}}) == Rational(factorial(n)));
    }
    // xi at x^2-1 reverses the derivative polynomial Q.
    for (unsigned n = 0; n <= 20; ++n)
        CHECK(substitute(xi(n), {{"x", P("x^2-1")}}) == reversal(deriv_q(n), n));
}

TEST_CASE("left-peak polynomials from all three routes") {
    CHECK(leftpeak_m(1, MSource::enumeration) == Poly(1));
    CHECK(leftpeak_m(2, MSource::xi_shift) == P("1+x"));
    CHECK(leftpeak_m(4, MSource::xi_shift) == P("1+18x+5x^2"));
    CHECK(leftpeak_m(4, MSource::egf) == P("1+18x+5x^2"));
    for (unsigned n = 1; n <= 7; ++n) {
        Poly brute = leftpeak_m(n, MSource::enumeration);
        CHECK(leftpeak_m(n, MSource::xi_shift) == brute);
        CHECK(leftpeak_m(n, MSource::egf) == brute);
    }
    CHECK_THROWS_AS(leftpeak_m(0, MSource::xi_shift), std::invalid_argument);
}

TEST_CASE("springer and secant numbers") {
    CHECK(springer(0) == 1);
    CHECK(springer(1) == 1);
    CHECK(springer(2) == 3);
    CHECK(springer(3) == 11);
    CHECK(springer(4) == 57);
    CHECK(springer(5) == 361);
    CHECK(secant(0) == 1);
    CHECK(secant(2) == 1);
    CHECK(secant(4) == 5);
    CHECK(secant(6) == 61);
    CHECK(secant(8) == 1385);
    CHECK(secant(10) == 50521);
    CHECK_THROWS_AS(secant(3), std::invalid_argument);
    // Deep rows exercise the xi-backed route beyond the enumeration cap.
    CHECK_NOTHROW(springer(20));
    CHECK_NOTHROW(secant(20));
}

TEST_CASE("family tables") {
    FamilyTable t = family_table("altB", 0, 4);
    REQUIRE(t.rows.size() == 5);
    CHECK(t.rows[4].value == P("57+76x+118x^2+76x^3+57x^4"));
    CHECK(t.rows[0].prov == Provenance::recurrence);
    FamilyTable m = family_table("M", 1, 4);
    CHECK(m.rows[3].value == P("1+18x+5x^2"));
    CHECK(m.rows[3].prov == Provenance::identity);
    FamilyTable sec = family_table("secant", 0, 6);
    REQUIRE(sec.rows.size() == 4);
    CHECK(sec.rows[3].value == Poly(61));
    FamilyTable ea = family_table("eulerA", 1, 5);
    CHECK(ea.rows[2].value == P("1+4x+x^2"));
    CHECK(ea.rows[2].prov == Provenance::enumeration);
    CHECK_THROWS_AS(family_table("altA", 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_table("nope", 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_table("altB", 3, 1), std::invalid_argument);
    CHECK(family_ids().size() == 12);
}

}  // TEST_SUITE
