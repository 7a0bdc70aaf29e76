#include "altgamma/series.hpp"

#include <stdexcept>

#include "altgamma/expr.hpp"
#include "altgamma/families.hpp"
#include "altgamma/permstats.hpp"
#include "altgamma/poly_json.hpp"

namespace altgamma::egf {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order != b.order)
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order) + " vs " + std::to_string(b.order) +
                                    ")");
}

// Shared skeleton for the trig/hyperbolic families: place u^k/(parity-
// matched factorial) at each applicable power, optionally alternating signs.
TruncatedSeries parity_series(const Poly& u, unsigned order, bool odd_powers, bool signs) {
    TruncatedSeries s{order, std::vector<Poly>(order + 1)};
    Poly uk(1);
    for (unsigned k = 0; 2 * k + odd_powers <= order; ++k) {
        unsigned n = 2 * k + odd_powers;
        Rational c(signs && k % 2 ? Int(-1) : Int(1), factorial(n));
        s.coeffs[n] = c * uk;
        if (n + 2 <= order) uk *= u;
    }
    return s;
}

SeriesCheck fail_at(unsigned n, std::string detail) {
    return {false, static_cast<int>(n), std::move(detail)};
}

// Compares a series against a constant polynomial target: coefficient 0 must
// be `target`, the rest zero.
SeriesCheck expect_constant(const TruncatedSeries& s, const Poly& target, const std::string& who) {
    for (unsigned n = 0; n <= s.order; ++n) {
        const Poly& want = n == 0 ? target : Poly();
        if (s.coeffs[n] != want)
            return fail_at(n, who + ": [z^" + std::to_string(n) + "] = " + to_string(s.coeffs[n]) +
                                  ", expected " + to_string(want));
    }
    return {};
}

}  // namespace

TruncatedSeries series_of(unsigned order, const std::function<Poly(unsigned)>& coeff) {
    TruncatedSeries s{order, {}};
    s.coeffs.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) s.coeffs.push_back(coeff(n));
    return s;
}

TruncatedSeries from_rows(unsigned order, const std::function<Poly(unsigned)>& row) {
    return series_of(order, [&](unsigned n) {
        Poly p = row(n);
        p.scale(Rational(Int(1), factorial(n)));
        return p;
    });
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_add");
    TruncatedSeries s = a;
    for (unsigned n = 0; n <= s.order; ++n) s.coeffs[n] += b.coeffs[n];
    return s;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_sub");
    TruncatedSeries s = a;
    for (unsigned n = 0; n <= s.order; ++n) s.coeffs[n] -= b.coeffs[n];
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    TruncatedSeries s{a.order, std::vector<Poly>(a.order + 1)};
    for (unsigned i = 0; i <= a.order; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.order; ++j)
            s.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return s;
}

TruncatedSeries series_scale(const Poly& c, const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (auto& p : s.coeffs) p = c * p;
    return s;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    const Poly& head = a.coeffs.at(0);
    if (!head.is_constant() || head.is_zero())
        throw std::domain_error(
            "series_reciprocal: constant term is not an invertible rational; "
            "cross-multiply instead of dividing");
    Rational inv = Rational(1) / head.constant_value();
    TruncatedSeries s{a.order, std::vector<Poly>(a.order + 1)};
    s.coeffs[0] = Poly(inv);
    for (unsigned n = 1; n <= a.order; ++n) {
        Poly acc;
        for (unsigned k = 1; k <= n; ++k) acc += a.coeffs[k] * s.coeffs[n - k];
        acc.scale(-inv);
        s.coeffs[n] = std::move(acc);
    }
    return s;
}

TruncatedSeries cos_like(const Poly& u, unsigned order) { return parity_series(u, order, false, true); }
TruncatedSeries sinq_like(const Poly& u, unsigned order) { return parity_series(u, order, true, true); }
TruncatedSeries cosh_like(const Poly& u, unsigned order) { return parity_series(u, order, false, false); }
TruncatedSeries sinhq_like(const Poly& u, unsigned order) { return parity_series(u, order, true, false); }

nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : s.coeffs) out.push_back(poly_to_json(p));
    return out;
}

SeriesCheck verify_egf_alt_a(unsigned order) {
    // Family side: 1 + sum_{n>=1} x*altA_n z^n/n!.
    TruncatedSeries lhs = series_of(order, [](unsigned n) {
        if (n == 0) return Poly(1);
        Poly p = Poly::variable("x") * alt_a(n);
        p.scale(Rational(Int(1), factorial(n)));
        return p;
    });
    // Closed side: sec + tan at argument (1-x)z, built sqrt-free with
    // u = (1-x)^2 and one explicit (1-x) on the odd part.
    Poly u = parse_poly("(1-x)^2");
    TruncatedSeries sec_tan = series_mul(
        series_reciprocal(cos_like(u, order)),
        series_add(series_of(order, [](unsigned n) { return n ? Poly() : Poly(1); }),
                   series_scale(parse_poly("1-x"), sinq_like(u, order))));
    TruncatedSeries one_minus_x_st =
        series_sub(series_of(order, [](unsigned n) { return n ? Poly() : Poly(1); }),
                   series_scale(Poly::variable("x"), sec_tan));
    return expect_constant(series_mul(lhs, one_minus_x_st), parse_poly("1-x"),
                           "alt-A generating function");
}

SeriesCheck verify_egf_alt_b(unsigned order) {
    TruncatedSeries lhs = from_rows(order, [](unsigned n) { return alt_b(n); });
    Poly u = parse_poly("(x-1)^2");
    TruncatedSeries denom =
        series_sub(cos_like(u, order), series_scale(parse_poly("x+1"), sinq_like(u, order)));
    return expect_constant(series_mul(lhs, denom), Poly(1), "alt-B generating function");
}

SeriesCheck verify_egf_m(unsigned order) {
    TruncatedSeries rec = series_reciprocal(
        series_sub(cosh_like(parse_poly("1-x"), order), sinhq_like(parse_poly("1-x"), order)));
    unsigned cap = enum_caps().max_unsigned;
    for (unsigned n = 0; n <= order; ++n) {
        Poly expected = n == 0 ? Poly(1)
                               : leftpeak_m(n, n <= cap ? MSource::enumeration : MSource::xi_shift);
        Poly got = rec.coeffs[n];
        got.scale(Rational(factorial(n)));
        if (got != expected)
            return fail_at(n, "left-peak generating function: n!*[z^" + std::to_string(n) +
                                  "] = " + to_string(got) + ", expected " + to_string(expected));
    }
    return {};
}

SeriesCheck verify_egf_xi(unsigned order) {
    TruncatedSeries lhs = from_rows(order, [](unsigned n) { return xi(n); });
    Poly u = parse_poly("1+x");
    TruncatedSeries denom = series_sub(cos_like(u, order), sinq_like(u, order));
    return expect_constant(series_mul(lhs, denom), Poly(1), "xi generating function");
}

SeriesCheck verify_egf_springer(unsigned order) {
    TruncatedSeries lhs =
        from_rows(order, [](unsigned n) { return Poly(Rational(springer(n))); });
    TruncatedSeries denom = series_sub(cos_like(Poly(1), order), sinq_like(Poly(1), order));
    return expect_constant(series_mul(lhs, denom), Poly(1), "Springer generating function");
}

SeriesCheck verify_egf_secant(unsigned order) {
    TruncatedSeries sec = series_reciprocal(cos_like(Poly(1), order));
    for (unsigned n = 0; n <= order; ++n) {
        Poly got = sec.coeffs[n];
        got.scale(Rational(factorial(n)));
        Poly expected = n % 2 ? Poly() : Poly(Rational(secant(n)));
        if (got != expected)
            return fail_at(n, "secant generating function: n!*[z^" + std::to_string(n) + "] = " +
                                  to_string(got) + ", expected " + to_string(expected));
    }
    return {};
}

SeriesCheck pde_check_alt_b(unsigned order) {
    if (order < 1) throw std::invalid_argument("pde_check_alt_b: need order >= 1");
    std::vector<Poly> c;
    for (unsigned n = 0; n <= order; ++n) {
        Poly p = alt_b(n);
        p.scale(Rational(Int(1), factorial(n)));
        c.push_back(p);
    }
    // d/dz of the series equals (1+x)B + (1+x^2) z d/dz B + (1-x)(1+x^2) d/dx B,
    // compared coefficientwise: [z^n] of the left is (n+1)c_{n+1}.
    for (unsigned n = 0; n + 1 <= order; ++n) {
        Poly lhs = Rational(static_cast<long long>(n + 1)) * c[n + 1];
        Poly rhs = parse_poly("1+x") * c[n] +
                   Rational(static_cast<long long>(n)) * parse_poly("1+x^2") * c[n] +
                   parse_poly("(1-x)*(1+x^2)") * partial(c[n], "x");
        if (lhs != rhs)
            return fail_at(n, "alt-B differential equation fails at [z^" + std::to_string(n) +
                                  "]: " + to_string(lhs) + " vs " + to_string(rhs));
    }
    return {};
}

Poly leftpeak_m_via_egf(unsigned n) {
    TruncatedSeries rec = series_reciprocal(
        series_sub(cosh_like(parse_poly("1-x"), n), sinhq_like(parse_poly("1-x"), n)));
    Poly p = rec.coeffs[n];
    p.scale(Rational(factorial(n)));
    return p;
}

}  // namespace altgamma::egf
