#include <doctest.h>

#include <random>

#include "altgamma/expr.hpp"
#include "altgamma/families.hpp"
#include "altgamma/series.hpp"

using namespace altgamma;
using namespace altgamma::egf;

namespace {

Poly P(std::string_view s) { return parse_poly(s); }

TruncatedSeries geometric(unsigned order) {
    // 1/(1-z): all plain coefficients 1.
    return series_of(order, [](unsigned) { return Poly(1); });
}

TruncatedSeries one(unsigned order) {
    return series_of(order, [](unsigned n) { return n ? Poly() : Poly(1); });
}

}  // namespace

TEST_SUITE("egfseries") {

TEST_CASE("series arithmetic basics") {
    auto z = series_of(3, [](unsigned n) { return n == 1 ? Poly(1) : Poly(); });
    auto one_plus_z = series_add(one(3), z);
    auto one_minus_z = series_sub(one(3), z);
    auto prod = series_mul(one_plus_z, one_minus_z);
    CHECK(prod.coeffs[0] == Poly(1));
    CHECK(prod.coeffs[1].is_zero());
    CHECK(prod.coeffs[2] == Poly(-1));
    CHECK(prod.coeffs[3].is_zero());
    CHECK_THROWS_AS(series_mul(one(3), one(4)), std::invalid_argument);
    CHECK_THROWS_AS(series_add(one(2), one(5)), std::invalid_argument);
}

TEST_CASE("series reciprocal") {
    auto z = series_of(6, [](unsigned n) { return n == 1 ? Poly(-1) : Poly(); });
    auto inv = series_reciprocal(series_add(one(6), z));
    for (unsigned n = 0; n <= 6; ++n) CHECK(inv.coeffs[n] == Poly(1));  // 1/(1-z)
    // Reciprocal of a reciprocal returns the original.
    auto g = geometric(6);
    auto twice = series_reciprocal(series_reciprocal(g));
    for (unsigned n = 0; n <= 6; ++n) CHECK(twice.coeffs[n] == g.coeffs[n]);
    // Non-rational constant terms are refused: cross-multiplication territory.
    auto bad = series_of(3, [](unsigned n) { return n == 0 ? P("1-x") : Poly(); });
    CHECK_THROWS_AS(series_reciprocal(bad), std::domain_error);
    CHECK_THROWS_AS(series_reciprocal(series_of(2, [](unsigned) { return Poly(); })),
                    std::domain_error);
}

TEST_CASE("trig series in the sqrt-free calculus") {
    auto c = cos_like(Poly(1), 6);
    CHECK(c.coeffs[0] == Poly(1));
    CHECK(c.coeffs[1].is_zero());
    CHECK(c.coeffs[2] == Poly(Rational(Int(-1), Int(2))));
    CHECK(c.coeffs[4] == Poly(Rational(Int(1), Int(24))));
    auto s = sinq_like(P("(x-1)^2"), 5);
    CHECK(s.coeffs[0].is_zero());
    CHECK(s.coeffs[1] == Poly(1));
    CHECK(s.coeffs[3] == Rational(Int(-1), Int(6)) * P("(x-1)^2"));
    auto ch = cosh_like(P("1-x"), 4);
    CHECK(ch.coeffs[2] == Rational(Int(1), Int(2)) * P("1-x"));
    CHECK(ch.coeffs[4] == Rational(Int(1), Int(24)) * P("(1-x)^2"));
    auto sh = sinhq_like(P("1-x"), 3);
    CHECK(sh.coeffs[3] == Rational(Int(1), Int(6)) * P("1-x"));
    // sec z has the secant numbers over factorials on even powers.
    auto sec = series_reciprocal(cos_like(Poly(1), 6));
    CHECK(sec.coeffs[4] == Poly(Rational(Int(5), Int(24))));
    CHECK(sec.coeffs[6] == Poly(Rational(Int(61), Int(720))));
    CHECK(sec.coeffs[3].is_zero());
}

TEST_CASE("pythagorean identity in the sqrt-free calculus") {
    for (const char* us : {"1", "1+x", "(x-1)^2"}) {
        Poly u = P(us);
        auto c = cos_like(u, 12), s = sinq_like(u, 12);
        auto total = series_add(series_mul(c, c), series_scale(u, series_mul(s, s)));
        CHECK(total.coeffs[0] == Poly(1));
        for (unsigned n = 1; n <= 12; ++n) CHECK(total.coeffs[n].is_zero());
    }
}

TEST_CASE("series multiplication laws on random instances") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
    auto rand_series = [&](unsigned order) {
        return series_of(order, [&](unsigned) {
            Poly p;
            for (unsigned k = 0; k <= static_cast<unsigned>(deg(rng)); ++k)
                p += Rational(coef(rng)) * pow(Poly::variable("x"), k);
            return p;
        });
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto a = rand_series(7), b = rand_series(7), c = rand_series(7);
        auto ab = series_mul(a, b), ba = series_mul(b, a);
        for (unsigned n = 0; n <= 7; ++n) CHECK(ab.coeffs[n] == ba.coeffs[n]);
        auto l = series_mul(ab, c), r = series_mul(a, series_mul(b, c));
        for (unsigned n = 0; n <= 7; ++n) CHECK(l.coeffs[n] == r.coeffs[n]);
    }
}

TEST_CASE("generating function checks pass at the default order") {
    CHECK(verify_egf_alt_a(16).pass);
    CHECK(verify_egf_alt_b(16).pass);
    CHECK(verify_egf_m(12).pass);
    CHECK(verify_egf_xi(16).pass);
    CHECK(verify_egf_springer(16).pass);
    CHECK(verify_egf_secant(16).pass);
    CHECK(pde_check_alt_b(14).pass);
}

TEST_CASE("generating function checks at tiny orders") {
    CHECK(verify_egf_alt_a(0).pass);
    CHECK(verify_egf_alt_b(0).pass);
    CHECK(verify_egf_alt_a(5).pass);
    CHECK(verify_egf_alt_b(4).pass);
    CHECK(pde_check_alt_b(3).pass);
    CHECK_THROWS_AS(pde_check_alt_b(0), std::invalid_argument);
}

TEST_CASE("failure reports name the smallest failing order") {
    // Sabotage: a wrong row must be caught at exactly its own order.
    auto lhs = from_rows(6, [](unsigned n) {
        Poly p = alt_b(n);
        if (n == 3) p += Poly(1);
        return p;
    });
    auto denom = series_sub(cos_like(P("(x-1)^2"), 6),
                            series_scale(P("x+1"), sinq_like(P("(x-1)^2"), 6)));
    auto prod = series_mul(lhs, denom);
    CHECK(prod.coeffs[3] != Poly());
    CHECK(prod.coeffs[0] == Poly(1));
    CHECK(prod.coeffs[1].is_zero());
    CHECK(prod.coeffs[2].is_zero());
}

TEST_CASE("egf route to the left-peak polynomial") {
    CHECK(leftpeak_m_via_egf(2) == P("1+x"));
    CHECK(leftpeak_m_via_egf(4) == P("1+18x+5x^2"));
}

TEST_CASE("series json dump") {
    auto s = series_of(2, [](unsigned n) { return n == 2 ? P("1+x") : Poly(1); });
    auto j = series_to_json(s);
    REQUIRE(j.size() == 3);
    CHECK(j[2]["terms"].size() == 2);
}

}  // TEST_SUITE
